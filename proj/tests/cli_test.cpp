// End-to-end tests for the command-line driver: exit codes, pinned text
// output, and JSON emissions validated against the bundled schemas.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

using Json = nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Runs the binary through the shell, stderr suppressed; env is a prefix of
// VAR=value assignments.
CliResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd;
  if (!env.empty()) cmd += env + " ";
  cmd += DZETA_CLI_PATH;
  if (!args.empty()) cmd += " " + args;
  cmd += " 2>/dev/null";
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

Json load_schema(const std::string& name) {
  std::ifstream f(std::string(DZETA_SCHEMA_DIR) + "/" + name);
  if (!f) {
    ADD_FAILURE() << "cannot open schema " << name;
    return Json::object();
  }
  return Json::parse(f);
}

// Minimal JSON-Schema checker covering the subset the bundled schemas use:
// type, enum, required, properties, additionalProperties:false, items, and
// local $ref into #/definitions.
bool check_schema(const Json& value, const Json& schema, const Json& root,
                  const std::string& path, std::string* why) {
  auto fail = [&](const std::string& msg) {
    *why += path + ": " + msg + "\n";
    return false;
  };
  if (schema.contains("$ref")) {
    const std::string ref = schema["$ref"].get<std::string>();
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) return fail("unsupported $ref " + ref);
    const std::string name = ref.substr(prefix.size());
    if (!root.contains("definitions") || !root["definitions"].contains(name))
      return fail("dangling $ref " + ref);
    return check_schema(value, root["definitions"][name], root, path, why);
  }
  if (schema.contains("type")) {
    const std::string t = schema["type"].get<std::string>();
    bool ok = (t == "object" && value.is_object()) ||
              (t == "array" && value.is_array()) ||
              (t == "string" && value.is_string()) ||
              (t == "integer" && value.is_number_integer()) ||
              (t == "number" && value.is_number()) ||
              (t == "boolean" && value.is_boolean());
    if (!ok) return fail("expected type " + t + ", got " + value.dump());
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const Json& e : schema["enum"]) ok = ok || e == value;
    if (!ok) return fail("value " + value.dump() + " not in enum");
  }
  bool good = true;
  if (schema.contains("required")) {
    for (const Json& k : schema["required"])
      if (!value.contains(k.get<std::string>()))
        good = fail("missing required key " + k.get<std::string>()) && good;
  }
  if (value.is_object()) {
    const Json props =
        schema.contains("properties") ? schema["properties"] : Json::object();
    const bool closed = schema.contains("additionalProperties") &&
                        schema["additionalProperties"] == false;
    for (const auto& [key, sub] : value.items()) {
      if (props.contains(key)) {
        good = check_schema(sub, props[key], root, path + "." + key, why) &&
               good;
      } else if (closed) {
        good = fail("unexpected key " + key) && good;
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    std::size_t i = 0;
    for (const Json& item : value) {
      good = check_schema(item, schema["items"], root,
                          path + "[" + std::to_string(i) + "]", why) &&
             good;
      ++i;
    }
  }
  return good;
}

::testing::AssertionResult matches_schema(const Json& value,
                                          const Json& schema) {
  std::string why;
  if (check_schema(value, schema, schema, "$", &why))
    return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << why;
}

TEST(Cli, HelpExitsZero) {
  CliResult res = run_cli("--help");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.out.find("eval"), std::string::npos);
  EXPECT_NE(res.out.find("verify-all"), std::string::npos);
}

TEST(Cli, ParseAndOptionGuardsExitTwo) {
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("--bogus eval single 2").exit_code, 2);
  EXPECT_EQ(run_cli("--axioms bogus relations --weight 4").exit_code, 2);
  EXPECT_EQ(run_cli("--format yaml eval single 2").exit_code, 2);
  EXPECT_EQ(run_cli("--prec 10 eval single 2").exit_code, 2);
  EXPECT_EQ(run_cli("--jobs 0 verify-all --max-weight 4").exit_code, 2);
  EXPECT_EQ(run_cli("fit --kind bogus --a 1").exit_code, 2);
  EXPECT_EQ(run_cli("fit --kind harmonic --a 1 --max-n 999").exit_code, 2);
  EXPECT_EQ(run_cli("verify-all --max-weight 3").exit_code, 2);
}

TEST(Cli, EvalUsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("eval").exit_code, 2);
  EXPECT_EQ(run_cli("eval bogus 2").exit_code, 2);
  EXPECT_EQ(run_cli("eval single").exit_code, 2);
  EXPECT_EQ(run_cli("eval single x").exit_code, 2);
  EXPECT_EQ(run_cli("eval single 1").exit_code, 2);    // divergent
  EXPECT_EQ(run_cli("eval double 2 1").exit_code, 2);  // divergent
  EXPECT_EQ(run_cli("eval star 2").exit_code, 2);
  EXPECT_EQ(run_cli("eval reg 2 1 banana").exit_code, 2);
}

TEST(Cli, VerifyUsageErrorsExitTwo) {
  EXPECT_EQ(run_cli("verify bogus --m 2 --n 2").exit_code, 2);
  EXPECT_EQ(run_cli("verify thm1 --m 1 --n 3").exit_code, 2);
  EXPECT_EQ(run_cli("--t-samples 0,1 verify thm1 --m 2 --n 2").exit_code, 2);
  EXPECT_EQ(run_cli("--t-samples 0,1,1,0 verify eds --m 2 --n 2").exit_code, 2);
}

TEST(Cli, EvalSingleFixedPointText) {
  CliResult res = run_cli("--prec 20 eval single 2");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(
      res.out.find("zeta(2) = 1.64493406684822643647 (20 digits, err <= "),
      std::string::npos)
      << res.out;
}

TEST(Cli, EvalDoubleMatchesSingleZeta) {
  CliResult res = run_cli("eval double 1 2");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(
      res.out.find("zeta(1,2) = 1.2020569031595942853997381615114499907649"),
      std::string::npos)
      << res.out;
  EXPECT_NE(res.out.find(" (50 digits, err <= "), std::string::npos);
}

TEST(Cli, EvalStarText) {
  CliResult res = run_cli("eval star 2 2");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.out.find("zeta*(2,2) = 1.8940656589944918351530064689"),
            std::string::npos)
      << res.out;
}

TEST(Cli, EvalRegularizedText) {
  CliResult res = run_cli("eval reg 2 1 stuffle");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.out.find("zeta_stuffle(2,1) regularized:"), std::string::npos);
  EXPECT_NE(res.out.find("  T^1: 1.6449340668482264364724151666460251892189"),
            std::string::npos)
      << res.out;
  EXPECT_NE(res.out.find("  T^0: -2.4041138063191885707994763230228999815299"),
            std::string::npos)
      << res.out;
}

TEST(Cli, EvalJsonMatchesSchema) {
  CliResult res = run_cli("--format json eval single 3");
  ASSERT_EQ(res.exit_code, 0);
  Json j = Json::parse(res.out);
  EXPECT_TRUE(matches_schema(j, load_schema("eval.schema.json")));
  EXPECT_EQ(j["target"], "single");
  EXPECT_EQ(j["args"], Json::array({3}));
  EXPECT_EQ(j["precision"], 50);
  EXPECT_EQ(j["value"].get<std::string>().rfind(
                "1.20205690315959428539973816151", 0),
            0u)
      << j["value"];
}

TEST(Cli, EvalRegularizedJsonCoefficients) {
  CliResult res = run_cli("--format json eval reg 2 1 stuffle");
  ASSERT_EQ(res.exit_code, 0);
  Json j = Json::parse(res.out);
  EXPECT_TRUE(matches_schema(j, load_schema("eval.schema.json")));
  EXPECT_EQ(j["rule"], "stuffle");
  ASSERT_EQ(j["coefficients"].size(), 2u);
  EXPECT_EQ(j["coefficients"][0]["t"], 1);
  EXPECT_EQ(j["coefficients"][1]["t"], 0);
}

TEST(Cli, EvalCsvShape) {
  CliResult res = run_cli("--format csv eval double 2 3");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_EQ(res.out.rfind("target,a,b,rule,t,value,err\ndouble,2,3,,,", 0), 0u)
      << res.out;
}

TEST(Cli, VerifyClosedFormText) {
  CliResult res = run_cli("verify thm1 --m 2 --n 2");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.out.find("thm1 (m=2, n=2), weight 4"), std::string::npos);
  EXPECT_NE(res.out.find("  symbolic: Proven"), std::string::npos);
  EXPECT_NE(res.out.find("    certificate: -1*E(2,2) + -2*S(4)"),
            std::string::npos)
      << res.out;
  EXPECT_NE(res.out.find("T in {0,1,2}"), std::string::npos);
  EXPECT_NE(res.out.find("  ms: "), std::string::npos);
  EXPECT_NE(res.out.find("  result: PASS"), std::string::npos);
}

TEST(Cli, VerifyStrictAxiomsFail) {
  CliResult res =
      run_cli("--axioms strict verify thm1 --m 2 --n 2 --mode symbolic");
  EXPECT_EQ(res.exit_code, 1);
  EXPECT_NE(res.out.find("  symbolic: NotInSpan"), std::string::npos);
  EXPECT_NE(res.out.find("    residue: "), std::string::npos);
  EXPECT_NE(res.out.find("  result: FAIL"), std::string::npos);
}

TEST(Cli, VerifyReportJsonSchema) {
  CliResult res =
      run_cli("--format json --no-timings verify thm1 --m 2 --n 3");
  ASSERT_EQ(res.exit_code, 0);
  Json j = Json::parse(res.out);
  EXPECT_TRUE(matches_schema(j, load_schema("report.schema.json")));
  EXPECT_FALSE(j.contains("ms"));
  EXPECT_EQ(j["identity"], "thm1");
  EXPECT_EQ(j["weight"], 5);
  EXPECT_EQ(j["symbolic"]["status"], "Proven");
  EXPECT_EQ(j["numeric"]["within_tol"], true);
  EXPECT_EQ(j["numeric"]["precision_ok"], true);
}

TEST(Cli, VerifyCsvQuotesCertificate) {
  CliResult res =
      run_cli("--format csv --no-timings verify thm1 --m 2 --n 2 "
              "--mode symbolic");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_EQ(res.out.rfind("identity,m,n,weight,status,cert_size,certificate,"
                          "residue,max_residual,tolerance,err_estimate,"
                          "precision,within_tol,precision_ok,note,error\n",
                          0),
            0u)
      << res.out;
  EXPECT_NE(res.out.find("thm1,2,2,4,Proven,2,\"E(2,2)*-1;S(4)*-2\","),
            std::string::npos)
      << res.out;
}

TEST(Cli, VerifyWeightParameterizedHeader) {
  CliResult res = run_cli("verify gkz --weight 5 --mode symbolic");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.out.find("gkz (weight 5)"), std::string::npos) << res.out;
  EXPECT_NE(res.out.find("  symbolic: ExactZero"), std::string::npos);
}

TEST(Cli, PartialFractionTextShowsBothSides) {
  CliResult res = run_cli("verify partial-fraction --m 1 --n 2 --x 1 --a 1");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_EQ(res.out.rfind("1/4 = 1/4\n", 0), 0u) << res.out;
  EXPECT_NE(res.out.find("x=1 a=1; swapped orientation differs"),
            std::string::npos)
      << res.out;

  res = run_cli("verify partial-fraction --m 2 --n 2 --x 1 --a 1");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.out.find("x=1 a=1; swapped orientation also matches"),
            std::string::npos)
      << res.out;
}

TEST(Cli, KeyNumericNoteReportsTruncation) {
  CliResult res =
      run_cli("--prec 30 verify key-numeric --m 2 --n 2 --terms 300");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.out.find("A=300; tail bound"), std::string::npos) << res.out;
  EXPECT_NE(res.out.find("  result: PASS"), std::string::npos);
}

TEST(Cli, PrecisionShortfallExitsThree) {
  CliResult res = run_cli(
      "--prec 15 --t-samples 0,1,1000000000000 verify eds --m 1 --n 1");
  EXPECT_EQ(res.exit_code, 3);
  EXPECT_NE(res.out.find("  result: PRECISION"), std::string::npos) << res.out;
}

TEST(Cli, SymbolicModeNeedsNoSamples) {
  CliResult res =
      run_cli("--t-samples 0 verify thm1 --m 2 --n 2 --mode symbolic");
  EXPECT_EQ(res.exit_code, 0);
}

TEST(Cli, RelationsTextPinned) {
  CliResult res = run_cli("relations --weight 5");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.out.find("weight 5, axioms extended, rank 2"),
            std::string::npos)
      << res.out;
  EXPECT_NE(
      res.out.find("  E(2,3): -zeta(5) + 6*zeta(1,4) + 2*zeta(2,3)"),
      std::string::npos)
      << res.out;
  EXPECT_NE(
      res.out.find("  S(5): zeta(5) - zeta(1,4) - zeta(2,3) - zeta(3,2)"),
      std::string::npos)
      << res.out;
}

TEST(Cli, RelationsEchelonTextPinned) {
  CliResult res = run_cli("relations --weight 4 --print-basis");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(
      res.out.find("  pivot zeta(4): zeta(4) - 4*zeta(1,3)  [-1*E(2,2)]"),
      std::string::npos)
      << res.out;
  EXPECT_NE(res.out.find("  pivot zeta(1,3): zeta(1,3) - 1/3*zeta(2,2)  "
                         "[1/3*E(2,2) + 1/3*S(4)]"),
            std::string::npos)
      << res.out;
}

TEST(Cli, RelationsJsonSchema) {
  CliResult res = run_cli("--format json relations --weight 6 --print-basis");
  ASSERT_EQ(res.exit_code, 0);
  Json j = Json::parse(res.out);
  EXPECT_TRUE(matches_schema(j, load_schema("relations.schema.json")));
  EXPECT_EQ(j["weight"], 6);
  EXPECT_EQ(j["axioms"], "extended");
  ASSERT_TRUE(j.contains("echelon"));
  EXPECT_EQ(j["rank"].get<std::size_t>(), j["echelon"].size());
  EXPECT_FALSE(j["rows"].empty());

  res = run_cli("--axioms strict --format json relations --weight 4");
  ASSERT_EQ(res.exit_code, 0);
  j = Json::parse(res.out);
  EXPECT_TRUE(matches_schema(j, load_schema("relations.schema.json")));
  EXPECT_EQ(j["axioms"], "strict");
  EXPECT_EQ(j["rank"], 1);
  EXPECT_EQ(j["rows"].size(), 1u);
  EXPECT_FALSE(j.contains("echelon"));
}

TEST(Cli, BatchJsonDeterministicAcrossJobs) {
  const std::string tail =
      " verify-all --max-weight 5 --identities thm1,sum-formula";
  CliResult one =
      run_cli("--format json --no-timings --prec 20 --jobs 1" + tail);
  CliResult two =
      run_cli("--format json --no-timings --prec 20 --jobs 2" + tail);
  ASSERT_EQ(one.exit_code, 0);
  ASSERT_EQ(two.exit_code, 0);
  EXPECT_EQ(one.out, two.out);

  Json j = Json::parse(one.out);
  EXPECT_TRUE(matches_schema(j, load_schema("batch.schema.json")));
  EXPECT_EQ(j["summary"]["exit_code"], 0);
  EXPECT_EQ(j["summary"]["errors"], 0);
  EXPECT_GT(j["reports"].size(), 0u);
}

TEST(Cli, BatchTextSummaryPinned) {
  CliResult res =
      run_cli("verify-all --max-weight 4 --identities eds --mode symbolic");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.out.find(
                "total 6: proven 1, exact zero 5, not in span 0, errors 0"),
            std::string::npos)
      << res.out;
  EXPECT_NE(res.out.find(
                "numeric: checked 0, failures 0, precision failures 0"),
            std::string::npos);
  EXPECT_NE(res.out.find("exit 0"), std::string::npos);
}

TEST(Cli, OutWritesFile) {
  const std::string path = "cli_out_test.tmp";
  CliResult res = run_cli("--out " + path + " eval single 4");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_TRUE(res.out.empty()) << res.out;
  std::ifstream f(path);
  ASSERT_TRUE(f.good());
  std::string content((std::istreambuf_iterator<char>(f)),
                      std::istreambuf_iterator<char>());
  EXPECT_NE(content.find("zeta(4) = 1.082323233711138191516003696541"),
            std::string::npos)
      << content;
  std::remove(path.c_str());
}

TEST(Cli, EnvironmentSetsPrecision) {
  CliResult res = run_cli("eval single 2", "DZETA_PREC=20");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.out.find("(20 digits, err <= "), std::string::npos) << res.out;

  res = run_cli("--prec 25 eval single 2", "DZETA_PREC=20");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.out.find("(25 digits, err <= "), std::string::npos) << res.out;
}

TEST(Cli, FitHarmonicTextShape) {
  CliResult res =
      run_cli("--prec 15 fit --kind harmonic --a 2 --max-n 16000");
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_NE(res.out.find("fit harmonic a=2 (5 samples)"), std::string::npos)
      << res.out;
  EXPECT_NE(res.out.find("  double word (2,1):"), std::string::npos);
  EXPECT_NE(res.out.find("    b1 = "), std::string::npos);
  EXPECT_NE(res.out.find("  single word (2):"), std::string::npos);
  EXPECT_NE(res.out.find("    c1 = "), std::string::npos);
  EXPECT_EQ(res.out.find("    b2 = "), std::string::npos);
}

TEST(Cli, FitJsonSchemaAndEstimates) {
  CliResult res =
      run_cli("--prec 15 --format json fit --kind harmonic --a 1 "
              "--max-n 16000");
  ASSERT_EQ(res.exit_code, 0);
  Json j = Json::parse(res.out);
  EXPECT_TRUE(matches_schema(j, load_schema("fit.schema.json")));
  EXPECT_EQ(j["kind"], "harmonic");
  EXPECT_EQ(j["quadratic"], true);
  ASSERT_TRUE(j["double_word"].contains("b2"));
  double b2 = std::strtod(j["double_word"]["b2"].get<std::string>().c_str(),
                          nullptr);
  EXPECT_NEAR(b2, 0.5, 2e-2);
  double c1 =
      std::strtod(j["single_word"]["c1"].get<std::string>().c_str(), nullptr);
  EXPECT_NEAR(c1, 1.0, 2e-2);
  EXPECT_EQ(j["xs"].size(), 5u);
}

}  // namespace
