#include "equiwitt/kpoly.hpp"

#include <algorithm>
#include <random>

namespace equiwitt {

KPoly::KPoly(Field f, std::vector<scalar_t> coeffs)
    : f_(f), c_(std::move(coeffs)) {
  trim();
}

void KPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

KPoly KPoly::operator+(const KPoly& o) const {
  std::vector<scalar_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = static_cast<scalar_t>(coeff(static_cast<int>(i)) ^
                                 o.coeff(static_cast<int>(i)));
  return KPoly(f_, std::move(c));
}

KPoly KPoly::operator*(const KPoly& o) const {
  if (is_zero() || o.is_zero()) return zero(f_);
  std::vector<scalar_t> c(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      c[i + j] ^= f_.mul(c_[i], o.c_[j]);
  }
  return KPoly(f_, std::move(c));
}

KPoly KPoly::operator%(const KPoly& o) const {
  if (o.is_zero()) throw Error("polynomial division by zero");
  std::vector<scalar_t> r = c_;
  const int dn = o.degree();
  const scalar_t lead_inv = f_.inv(o.c_.back());
  for (int d = static_cast<int>(r.size()) - 1; d >= dn; --d) {
    if (!r[d]) continue;
    const scalar_t q = f_.mul(r[d], lead_inv);
    for (int j = 0; j <= dn; ++j) r[d - dn + j] ^= f_.mul(q, o.c_[j]);
  }
  return KPoly(f_, std::move(r));
}

KPoly KPoly::operator/(const KPoly& o) const {
  if (o.is_zero()) throw Error("polynomial division by zero");
  if (degree() < o.degree()) return zero(f_);
  std::vector<scalar_t> r = c_;
  std::vector<scalar_t> q(static_cast<std::size_t>(degree() - o.degree()) + 1, 0);
  const int dn = o.degree();
  const scalar_t lead_inv = f_.inv(o.c_.back());
  for (int d = static_cast<int>(r.size()) - 1; d >= dn; --d) {
    if (!r[d]) continue;
    const scalar_t c = f_.mul(r[d], lead_inv);
    q[d - dn] = c;
    for (int j = 0; j <= dn; ++j) r[d - dn + j] ^= f_.mul(c, o.c_[j]);
  }
  return KPoly(f_, std::move(q));
}

KPoly KPoly::monic() const {
  if (is_zero()) return *this;
  const scalar_t s = f_.inv(c_.back());
  std::vector<scalar_t> c = c_;
  for (auto& x : c) x = f_.mul(s, x);
  return KPoly(f_, std::move(c));
}

KPoly KPoly::derivative() const {
  std::vector<scalar_t> c;
  for (std::size_t i = 1; i < c_.size(); ++i)
    c.push_back((i % 2) ? c_[i] : 0);  // characteristic 2
  return KPoly(f_, std::move(c));
}

Mat KPoly::eval(const Mat& m) const {
  if (m.rows() != m.cols()) throw Error("polynomial of non-square matrix");
  Mat r(f_, m.rows(), m.rows());
  for (int i = degree(); i >= 0; --i) {
    r = r * m;
    const scalar_t ci = coeff(i);
    if (ci)
      for (int k = 0; k < m.rows(); ++k) r.at(k, k) ^= ci;
  }
  return r;
}

KPoly poly_gcd(KPoly a, KPoly b) {
  while (!b.is_zero()) {
    KPoly r = a % b;
    a = b;
    b = r;
  }
  return a.monic();
}

KPoly min_poly(const Mat& m) {
  if (m.rows() != m.cols()) throw Error("min_poly of non-square matrix");
  const Field& f = m.field();
  const int n = m.rows();
  KPoly mp = KPoly::one(f);
  for (int s = 0; s < n && mp.degree() < n; ++s) {
    // relation polynomial of the Krylov sequence of e_s
    std::vector<Row> basis;
    std::vector<KPoly> polys;
    Row cur(n, 0);
    cur[s] = 1;
    int k = 0;
    while (true) {
      Row r = cur;
      std::vector<scalar_t> qc(static_cast<std::size_t>(k) + 1, 0);
      qc[k] = 1;
      KPoly q(f, qc);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        int c = 0;
        while (c < n && basis[i][c] == 0) ++c;
        if (c == n || r[c] == 0) continue;
        const scalar_t lam = f.mul(r[c], f.inv(basis[i][c]));
        for (int j = 0; j < n; ++j) r[j] ^= f.mul(lam, basis[i][j]);
        q = q + polys[i] * KPoly(f, {lam});
      }
      if (row_is_zero(r)) {
        mp = (mp * q) / poly_gcd(mp, q);  // lcm
        break;
      }
      basis.push_back(r);
      polys.push_back(q);
      cur = row_apply(cur, m);
      ++k;
    }
  }
  return mp.monic();
}

namespace {

KPoly powmod_q(const KPoly& h, const KPoly& mod, int e) {
  // h^(2^e) mod `mod`
  KPoly r = h;
  for (int i = 0; i < e; ++i) r = (r * r) % mod;
  return r;
}

void edf(const KPoly& g, int d, std::mt19937_64& rng,
         std::vector<KPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const Field& f = g.field();
  const int e = f.degree();
  for (int tries = 0; tries < 200; ++tries) {
    std::vector<scalar_t> ac(static_cast<std::size_t>(g.degree()), 0);
    for (auto& c : ac) c = static_cast<scalar_t>(rng() % f.order());
    KPoly a(f, std::move(ac));
    if (a.is_zero()) continue;
    // F_2-trace of a down from the degree-d factor fields
    KPoly t = a;
    KPoly b = a;
    for (int i = 1; i < e * d; ++i) {
      b = (b * b) % g;
      t = t + b;
    }
    KPoly c = poly_gcd(t, g);
    if (c.degree() > 0 && c.degree() < g.degree()) {
      edf(c, d, rng, out);
      edf(g / c, d, rng, out);
      return;
    }
  }
  throw VerifyError("equal-degree factorization failed to split");
}

void ddf(KPoly s, std::mt19937_64& rng, std::vector<KPoly>& out) {
  const Field& f = s.field();
  KPoly h = KPoly::x(f) % s;
  for (int d = 1; 2 * d <= s.degree(); ++d) {
    h = powmod_q(h, s, f.degree());
    KPoly g = poly_gcd(h + KPoly::x(f), s);
    if (g.degree() > 0) {
      edf(g, d, rng, out);
      s = s / g;
      h = h % s;
    }
  }
  if (s.degree() > 0) out.push_back(s.monic());
}

void collect_factors(const KPoly& fin, std::mt19937_64& rng,
                     std::vector<KPoly>& out) {
  KPoly f = fin.monic();
  if (f.degree() <= 0) return;
  KPoly fd = f.derivative();
  if (fd.is_zero()) {
    // f(x) = g(x)^2 with g obtained by taking square roots of even coeffs
    std::vector<scalar_t> gc;
    for (int i = 0; i <= f.degree(); i += 2)
      gc.push_back(f.field().sqrt(f.coeff(i)));
    collect_factors(KPoly(f.field(), std::move(gc)), rng, out);
    return;
  }
  KPoly g = poly_gcd(f, fd);
  if (g.degree() == 0) {
    ddf(f, rng, out);
  } else {
    collect_factors(f / g, rng, out);
    collect_factors(g, rng, out);
  }
}

}  // namespace

std::vector<KPoly> irreducible_factors(const KPoly& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<KPoly> out;
  collect_factors(f, rng, out);
  std::sort(out.begin(), out.end(), [](const KPoly& a, const KPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(),
                                        b.coeffs().rbegin(), b.coeffs().rend());
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const KPoly& a, const KPoly& b) { return a == b; }),
            out.end());
  return out;
}

}  // namespace equiwitt
