// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mixing polynomials from rings of different variable counts.
struct RingMismatchError : Error {
  using Error::Error;
};

// exact_div requested for a non-divisible pair.
struct NotDivisibleError : Error {
  using Error::Error;
};

struct DivisionByZeroError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  using Error::Error;
};

// A claimed forward/inverse pair failed the composition identity; the
// message carries the primitivized residual tuple.
struct VerificationError : Error {
  using Error::Error;
};

// A hypersurface was mapped into the exceptional locus: the stripped
// pushforward degenerated to a constant.
struct HypersurfaceContractedError : Error {
  using Error::Error;
};

struct WitnessMismatchError : Error {
  using Error::Error;
};

// No candidate inverse tuple for a lifted map verified.
struct InverseCandidateError : Error {
  using Error::Error;
};

// A singular point (possibly infinitely near) has non-rational
// coordinates; carries the degree of the unresolved univariate factor.
struct NonRationalSingularityError : Error {
  NonRationalSingularityError(const std::string& msg, int residual_degree)
      : Error(msg), residual_degree(residual_degree) {}
  int residual_degree = 0;
};

// Computed genus came out negative: the input was not irreducible.
struct NegativeGenusError : Error {
  using Error::Error;
};

struct RetriesExhaustedError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, int line, int column)
      : Error(msg), line(line), column(column) {}
  int line = 0;
  int column = 0;
};

// A job-file declaration failed to load or verify.
struct JobError : Error {
  using Error::Error;
};

}  // namespace cremona
