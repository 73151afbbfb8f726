#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace equiwitt {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input data: bad JSON, reducible modulus, invalid permutation, ...
struct ParseError : Error {
  using Error::Error;
};

/// A configured resource cap was exceeded (group closure, dimension, budget).
struct CapError : Error {
  using Error::Error;
};

/// An internal cross-check failed. Signals an implementation bug, not a
/// mathematical outcome.
struct VerifyError : Error {
  using Error::Error;
};

/// A form failed invariance or non-degeneracy validation. Carries the
/// offending vector when one exists.
struct InvalidFormError : Error {
  explicit InvalidFormError(const std::string& what,
                            std::vector<std::uint16_t> witness = {})
      : Error(what), witness(std::move(witness)) {}
  std::vector<std::uint16_t> witness;
};

}  // namespace equiwitt
