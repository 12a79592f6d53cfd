#pragma once

#include <stdexcept>

namespace dzeta {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// request for an unregularized divergent value, e.g. zeta(1) or zeta(a,1)
struct DivergentValue : Error {
  using Error::Error;
};

// weight() on a value whose monomials do not share one weight
struct NotHomogeneous : Error {
  using Error::Error;
};

// membership query against a relation set of a different weight
struct WeightMismatch : Error {
  using Error::Error;
};

// membership query on a value carrying T-monomials (never spanned)
struct NotTFree : Error {
  using Error::Error;
};

// regression fit asked to run on fewer than 3 sample points
struct ScheduleTooShort : Error {
  using Error::Error;
};

// identity parameters outside the kind's domain
struct DomainError : Error {
  using Error::Error;
};

}  // namespace dzeta
