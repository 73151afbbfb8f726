#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "equiwitt/errors.hpp"

namespace equiwitt {

/// A field element: the bit pattern of a polynomial residue, little-endian
/// (bit i is the coefficient of X^i).
using scalar_t = std::uint16_t;

/// Arithmetic in K = GF(2^e), e <= 16, with a fixed irreducible modulus.
///
/// Also houses the Artin-Schreier subgroup wp(K) = {x^2 + x} and the
/// distinguished element alpha with X^2 + X + alpha irreducible over K,
/// i.e. the smallest element of absolute trace 1.
class Field {
 public:
  static constexpr int kMaxDegree = 16;

  /// If the modulus is omitted, the smallest (as a bit pattern) monic
  /// irreducible polynomial of degree e is chosen; for e = 1 this is X,
  /// giving the prime field F_2.
  static Field make(int e,
                    std::optional<std::uint32_t> modulus_bits = std::nullopt);

  int degree() const { return e_; }
  std::uint32_t modulus_bits() const { return modulus_; }
  scalar_t alpha() const { return alpha_; }
  std::uint32_t order() const { return 1u << e_; }

  scalar_t add(scalar_t a, scalar_t b) const { return a ^ b; }
  scalar_t mul(scalar_t a, scalar_t b) const;
  scalar_t inv(scalar_t a) const;  // throws Error on a == 0
  scalar_t pow(scalar_t a, std::uint64_t n) const;
  /// The unique square root; squaring is a field automorphism.
  scalar_t sqrt(scalar_t a) const;
  /// Absolute trace K -> F_2.
  int trace(scalar_t a) const;
  /// a in wp(K), equivalently trace(a) == 0.
  bool in_wp(scalar_t a) const { return trace(a) == 0; }
  /// The two solutions {x0, x0 + 1} of x^2 + x = c, if c lies in wp(K).
  std::optional<std::pair<scalar_t, scalar_t>> artin_schreier_solve(
      scalar_t c) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  Field(int e, std::uint32_t modulus, scalar_t alpha)
      : e_(e), modulus_(modulus), alpha_(alpha) {}

  int e_;
  std::uint32_t modulus_;
  scalar_t alpha_;
};

/// Irreducibility over F_2 of the polynomial with the given bit pattern.
bool poly2_is_irreducible(std::uint32_t bits);

}  // namespace equiwitt
