#pragma once

#include <stdexcept>
#include <string>

namespace recdiff {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Sequence definition errors.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};
class DegenerateSequence : public Error {
 public:
  using Error::Error;
};
class BadRange : public Error {
 public:
  using Error::Error;
};

// Numeric certification errors.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};
class NoDominantRoot : public Error {
 public:
  using Error::Error;
};

// Algebraic-number errors.
class NotPrimitive : public Error {
 public:
  using Error::Error;
};
class MultipleRootsUnsupported : public Error {
 public:
  using Error::Error;
};
class IllConditioned : public Error {
 public:
  using Error::Error;
};

// Bounds / window errors.
class BadEpsilon : public Error {
 public:
  using Error::Error;
};
class BadX : public Error {
 public:
  using Error::Error;
};
class BadEta : public Error {
 public:
  using Error::Error;
};
class BadInput : public Error {
 public:
  using Error::Error;
};
class LambdaZero : public Error {
 public:
  using Error::Error;
};
class NotFound : public Error {
 public:
  using Error::Error;
};
class CertificateExhausted : public Error {
 public:
  using Error::Error;
};

// Configuration errors. SchemaError carries line-referenced issues.
class ParseError : public Error {
 public:
  using Error::Error;
};
class SchemaError : public Error {
 public:
  using Error::Error;
};

// A paper hypothesis (dominant root, mutual dominance, independence,
// monotone growth) failed for the configured pair.
class HypothesisFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace recdiff
