#include "equiwitt/gfield.hpp"

namespace equiwitt {

namespace {

int poly2_degree(std::uint32_t bits) {
  int d = -1;
  while (bits) {
    ++d;
    bits >>= 1;
  }
  return d;
}

std::uint32_t poly2_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = poly2_degree(m);
  int da = poly2_degree(a);
  while (da >= dm) {
    a ^= m << (da - dm);
    da = poly2_degree(a);
  }
  return a;
}

}  // namespace

bool poly2_is_irreducible(std::uint32_t bits) {
  const int d = poly2_degree(bits);
  if (d < 1) return false;
  if (d == 1) return true;
  // Trial division by every polynomial of degree 1 .. d/2.
  for (int k = 1; 2 * k <= d; ++k) {
    for (std::uint32_t p = 1u << k; p < (2u << k); ++p) {
      if (poly2_mod(bits, p) == 0) return false;
    }
  }
  return true;
}

Field Field::make(int e, std::optional<std::uint32_t> modulus_bits) {
  if (e < 1 || e > kMaxDegree)
    throw CapError("field degree must be in [1, 16], got " + std::to_string(e));
  std::uint32_t m;
  if (modulus_bits) {
    m = *modulus_bits;
    if (poly2_degree(m) != e)
      throw ParseError("modulus has degree " +
                       std::to_string(poly2_degree(m)) + ", expected " +
                       std::to_string(e));
    if (!poly2_is_irreducible(m))
      throw ParseError("modulus bit pattern " + std::to_string(m) +
                       " is reducible over F_2");
  } else {
    m = 0;
    for (std::uint32_t c = 1u << e; c < (2u << e); ++c) {
      if (poly2_is_irreducible(c)) {
        m = c;
        break;
      }
    }
    if (m == 0) throw VerifyError("no irreducible modulus found");
  }
  Field f(e, m, 0);
  for (std::uint32_t a = 0; a < f.order(); ++a) {
    if (f.trace(static_cast<scalar_t>(a)) == 1) {
      f.alpha_ = static_cast<scalar_t>(a);
      return f;
    }
  }
  throw VerifyError("no trace-1 element found");
}

scalar_t Field::mul(scalar_t a, scalar_t b) const {
  std::uint32_t acc = 0;
  std::uint32_t x = a;
  for (std::uint32_t y = b; y; y >>= 1) {
    if (y & 1) acc ^= x;
    x <<= 1;
    if (x & (1u << e_)) x ^= modulus_;
  }
  return static_cast<scalar_t>(acc);
}

scalar_t Field::pow(scalar_t a, std::uint64_t n) const {
  scalar_t r = 1;
  scalar_t base = a;
  while (n) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

scalar_t Field::inv(scalar_t a) const {
  if (a == 0) throw Error("division by zero in GF(2^" + std::to_string(e_) + ")");
  return pow(a, order() - 2);
}

scalar_t Field::sqrt(scalar_t a) const {
  // a^(2^(e-1)): the inverse of the squaring automorphism.
  scalar_t r = a;
  for (int i = 0; i < e_ - 1; ++i) r = mul(r, r);
  return r;
}

int Field::trace(scalar_t a) const {
  scalar_t t = a;
  scalar_t p = a;
  for (int i = 1; i < e_; ++i) {
    p = mul(p, p);
    t ^= p;
  }
  return t;  // always 0 or 1
}

std::optional<std::pair<scalar_t, scalar_t>> Field::artin_schreier_solve(
    scalar_t c) const {
  if (!in_wp(c)) return std::nullopt;
  for (std::uint32_t x = 0; x < order(); ++x) {
    const scalar_t s = static_cast<scalar_t>(x);
    if (static_cast<scalar_t>(mul(s, s) ^ s) == c)
      return std::make_pair(s, static_cast<scalar_t>(s ^ 1));
  }
  return std::nullopt;  // unreachable for c in wp(K)
}

}  // namespace equiwitt
