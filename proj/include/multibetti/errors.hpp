#pragma once

#include <stdexcept>
#include <string>

namespace multibetti {

// Base for everything thrown by the library. Callers that only want a
// pass/fail answer can catch this one type.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidPresentation : Error {
  using Error::Error;
};

// Computed beta_0/beta_1 disagree with the presentation sizes, so the input
// was not a minimal presentation even though it passed structural validation.
struct MinimalityBroken : Error {
  using Error::Error;
};

struct IndexTooSmall : Error {
  using Error::Error;
};

struct NegativeDegrees : Error {
  using Error::Error;
};

struct FieldTooSmall : Error {
  using Error::Error;
};

struct NotUniform : Error {
  using Error::Error;
};

struct ConstraintViolated : Error {
  using Error::Error;
};

struct GeneratorExceedsA : Error {
  using Error::Error;
};

struct GroundSetTooLarge : Error {
  using Error::Error;
};

struct BoxTooLarge : Error {
  using Error::Error;
};

}  // namespace multibetti
