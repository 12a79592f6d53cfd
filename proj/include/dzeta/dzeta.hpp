#pragma once

// Umbrella header: exact double zeta algebra, relation spans, generating
// function identities, arbitrary-precision evaluation and verification.

#include "dzeta/algebra.hpp"
#include "dzeta/errors.hpp"
#include "dzeta/fit.hpp"
#include "dzeta/genfun.hpp"
#include "dzeta/json_io.hpp"
#include "dzeta/numerics.hpp"
#include "dzeta/rational.hpp"
#include "dzeta/real.hpp"
#include "dzeta/relations.hpp"
#include "dzeta/verify.hpp"
