#pragma once

#include <cstdint>
#include <vector>

#include "equiwitt/exactla.hpp"

namespace equiwitt {

/// Dense univariate polynomials over GF(2^e), little-endian coefficients.
/// Only what the module-splitting code needs: ring arithmetic, gcd, minimal
/// polynomials of matrices and factorization into distinct irreducibles.
class KPoly {
 public:
  KPoly(Field f, std::vector<scalar_t> coeffs);
  static KPoly zero(Field f) { return KPoly(f, {}); }
  static KPoly one(Field f) { return KPoly(f, {1}); }
  static KPoly x(Field f) { return KPoly(f, {0, 1}); }

  const Field& field() const { return f_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  scalar_t coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
  }
  const std::vector<scalar_t>& coeffs() const { return c_; }

  KPoly operator+(const KPoly& o) const;
  KPoly operator*(const KPoly& o) const;
  KPoly operator%(const KPoly& o) const;
  KPoly operator/(const KPoly& o) const;
  bool operator==(const KPoly& o) const { return c_ == o.c_; }

  KPoly monic() const;
  KPoly derivative() const;
  /// Evaluate the polynomial at a square matrix.
  Mat eval(const Mat& m) const;

 private:
  void trim();
  Field f_;
  std::vector<scalar_t> c_;
};

KPoly poly_gcd(KPoly a, KPoly b);  // monic
/// Minimal polynomial of a square matrix (monic).
KPoly min_poly(const Mat& m);
/// The distinct monic irreducible factors, sorted by (degree, coefficients).
std::vector<KPoly> irreducible_factors(const KPoly& f, std::uint64_t seed);

}  // namespace equiwitt
