#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equiwitt/quadspace.hpp"

using namespace equiwitt;

namespace {

QuadForm random_nondeg_form(const Field& f, int n, std::mt19937_64& rng) {
  while (true) {
    Mat u(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        u.at(i, j) = static_cast<scalar_t>(rng() % f.order());
    QuadForm q(u);
    if (radical(q).rows() == 0) return q;
  }
}

QuadForm hyperbolic_plane(Field f) {
  Mat u(f, 2, 2);
  u.at(0, 1) = 1;
  return QuadForm(u);
}

}  // namespace

TEST_CASE("form storage and evaluation") {
  Field f = Field::make(2);
  Mat u = Mat::from_rows(f, {{1, 2}, {0, 3}}, 2);
  QuadForm q(u);
  // Q(x, y) = x^2 + 2xy + 3y^2
  CHECK(q.eval({1, 0}) == 1);
  CHECK(q.eval({0, 1}) == 3);
  CHECK(q.eval({1, 1}) == f.add(f.add(1, 2), 3));
  CHECK_THROWS_AS(QuadForm(Mat::from_rows(f, {{1, 0}, {1, 1}}, 2)), Error);
}

TEST_CASE("polarization is alternating and change_basis is functorial") {
  std::mt19937_64 rng(5);
  Field f = Field::make(3);
  QuadForm q = random_nondeg_form(f, 4, rng);
  Mat b = polarize(q);
  CHECK(b == b.transposed());
  for (int i = 0; i < 4; ++i) CHECK(b.at(i, i) == 0);
  // Q'(x) = Q(x m) pointwise
  Mat m = Mat::from_rows(f, {{1, 0, 2, 0}, {0, 1, 0, 5}, {3, 0, 1, 0}}, 4);
  QuadForm qm = change_basis(q, m);
  for (int trial = 0; trial < 20; ++trial) {
    Row x(3);
    for (auto& v : x) v = static_cast<scalar_t>(rng() % f.order());
    CHECK(qm.eval(x) == q.eval(row_apply(x, m)));
  }
}

TEST_CASE("norm form is the anisotropic plane") {
  for (int e : {1, 2, 3}) {
    Field f = Field::make(e);
    QuadForm n = norm_form(f);
    CHECK(radical(n).rows() == 0);
    CHECK_FALSE(isotropic_vector(n).has_value());
    // its Arf invariant lies outside wp(K)
    CHECK_FALSE(f.in_wp(arf_invariant(n)));
    CHECK(f.in_wp(arf_invariant(hyperbolic_plane(f))));
  }
}

TEST_CASE("symplectic basis has the standard Gram matrix") {
  std::mt19937_64 rng(23);
  for (int e : {1, 2}) {
    Field f = Field::make(e);
    for (int n : {2, 4, 6}) {
      QuadForm q = random_nondeg_form(f, n, rng);
      Mat b = polarize(q);
      Mat sb = symplectic_basis(b);
      const int m = n / 2;
      REQUIRE(sb.rows() == n);
      Mat gram = sb * b * sb.transposed();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const scalar_t want =
              (i < m && j == m + i) || (i >= m && j == i - m) ? 1 : 0;
          CHECK(gram.at(i, j) == want);
        }
    }
  }
}

TEST_CASE("isotropic_vector: exhaustive cross-check on small forms") {
  Field f = Field::make(1);
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      Mat u(f, n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          u.at(i, j) = static_cast<scalar_t>(rng() % 2);
      QuadForm q(u);
      bool exists = false;
      for (int bits = 1; bits < (1 << n); ++bits) {
        Row v(n);
        for (int i = 0; i < n; ++i) v[i] = (bits >> i) & 1;
        if (q.eval(v) == 0) exists = true;
      }
      auto found = isotropic_vector(q);
      CHECK(found.has_value() == exists);
      if (found) {
        CHECK_FALSE(row_is_zero(*found));
        CHECK(q.eval(*found) == 0);
      }
    }
  }
}

TEST_CASE("isotropic_vector over bigger fields") {
  std::mt19937_64 rng(37);
  for (int e : {2, 3}) {
    Field f = Field::make(e);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 3);
      Mat u(f, n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          u.at(i, j) = static_cast<scalar_t>(rng() % f.order());
      QuadForm q(u);
      auto v = isotropic_vector(q);
      // every form of dimension >= 3 over a finite field is isotropic
      REQUIRE(v.has_value());
      CHECK(q.eval(*v) == 0);
      CHECK_FALSE(row_is_zero(*v));
    }
  }
}

TEST_CASE("witt_decompose splits into hyperbolic planes plus residue") {
  std::mt19937_64 rng(41);
  for (int e : {1, 2}) {
    Field f = Field::make(e);
    for (int n : {2, 4, 6}) {
      for (int trial = 0; trial < 25; ++trial) {
        QuadForm q = random_nondeg_form(f, n, rng);
        WittSplit ws = witt_decompose(q);
        const int residue_dim =
            ws.residue == WittSplit::Residue::kNormForm ? 2 : 0;
        CHECK(2 * ws.hyperbolic_count + residue_dim == n);
        REQUIRE(ws.witness.rows() == n);
        QuadForm split = change_basis(q, ws.witness);
        // pairs (f_i, e_i): Q(f_i) = Q(e_i) = 0, B(f_i, e_i) = 1
        Mat b = polarize(split);
        for (int i = 0; i < ws.hyperbolic_count; ++i) {
          Row fi(n, 0), ei(n, 0);
          fi[2 * i] = 1;
          ei[2 * i + 1] = 1;
          CHECK(split.eval(fi) == 0);
          CHECK(split.eval(ei) == 0);
          CHECK(b.at(2 * i, 2 * i + 1) == 1);
        }
        if (residue_dim == 2) {
          Mat res = Mat::from_rows(
              f, {ws.witness.row(n - 2), ws.witness.row(n - 1)}, n);
          CHECK_FALSE(isotropic_vector(change_basis(q, res)).has_value());
        }
        // Arf criterion agrees with the residue
        CHECK((ws.residue == WittSplit::Residue::kNormForm) ==
              !f.in_wp(arf_invariant(q)));
      }
    }
  }
}

TEST_CASE("dickson invariant of elementary isometries") {
  Field f = Field::make(2);
  // R-shaped plane: Q(f) = 0, Q(e) = 1, B(f, e) = 1
  Mat u(f, 2, 2);
  u.at(0, 1) = 1;
  u.at(1, 1) = 1;
  QuadForm q(u);
  CHECK(dickson(Mat::identity(f, 2), q) == 0);
  Mat h(f, 2, 2);  // f -> f + e, e -> e
  h.at(0, 0) = 1;
  h.at(0, 1) = 1;
  h.at(1, 1) = 1;
  CHECK(dickson(h, q) == 1);
  // non-isometries are rejected with a witness
  Mat bad(f, 2, 2);
  bad.at(0, 0) = 2;
  bad.at(1, 1) = 1;
  CHECK_THROWS_AS(dickson(bad, q), InvalidFormError);
}

namespace {

/// Orthogonal transvection t_a(x) = x + (B(x,a)/Q(a)) a; Dickson 1.
Mat transvection(const QuadForm& q, const Row& a) {
  const Field& f = q.field();
  const int n = q.dim();
  Mat b = polarize(q);
  Mat t = Mat::identity(f, n);
  const scalar_t qa_inv = f.inv(q.eval(a));
  for (int i = 0; i < n; ++i) {
    Row e(n, 0);
    e[i] = 1;
    Row be = row_apply(e, b);
    scalar_t coeff = 0;
    for (int j = 0; j < n; ++j) coeff ^= f.mul(be[j], a[j]);
    Row img = row_add(f, e, row_scale(f, f.mul(coeff, qa_inv), a));
    t.set_row(i, img);
  }
  return t;
}

}  // namespace

TEST_CASE("dickson and the Lagrangian formula agree on split spaces") {
  std::mt19937_64 rng(47);
  for (int e : {1, 2}) {
    Field f = Field::make(e);
    for (int m : {1, 2, 3}) {
      const int n = 2 * m;
      // split form: m hyperbolic planes
      Mat u(f, n, n);
      for (int i = 0; i < m; ++i) u.at(2 * i, 2 * i + 1) = 1;
      QuadForm q(u);
      // the span of the f_i is a Lagrangian
      std::vector<Row> wrows;
      for (int i = 0; i < m; ++i) {
        Row r(n, 0);
        r[2 * i] = 1;
        wrows.push_back(r);
      }
      Mat w = Mat::from_rows(f, wrows, n);
      for (int trial = 0; trial < 35; ++trial) {
        // random product of transvections
        Mat g = Mat::identity(f, n);
        const int k = static_cast<int>(rng() % 4);
        for (int i = 0; i < k; ++i) {
          Row a(n);
          do {
            for (auto& v : a) v = static_cast<scalar_t>(rng() % f.order());
          } while (q.eval(a) == 0);
          g = g * transvection(q, a);
        }
        const int d = dickson(g, q);
        CHECK(d == k % 2);  // each transvection has Dickson invariant 1
        CHECK(dickson_lagrangian(g, q, w) == d);
      }
    }
  }
}
