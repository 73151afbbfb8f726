#include "equiwitt/quadspace.hpp"

#include <algorithm>

namespace equiwitt {

QuadForm::QuadForm(Mat u) : upper(std::move(u)) {
  if (upper.rows() != upper.cols())
    throw Error("quadratic form matrix must be square");
  for (int i = 0; i < upper.rows(); ++i)
    for (int j = 0; j < i; ++j)
      if (upper.at(i, j) != 0)
        throw Error("quadratic form matrix must be upper-triangular");
}

scalar_t QuadForm::eval(const Row& v) const {
  if (static_cast<int>(v.size()) != dim())
    throw Error("vector dimension mismatch in Q(v)");
  const Field& f = field();
  scalar_t acc = 0;
  for (int i = 0; i < dim(); ++i) {
    if (!v[i]) continue;
    for (int j = i; j < dim(); ++j) {
      const scalar_t c = upper.at(i, j);
      if (c) acc ^= f.mul(c, f.mul(v[i], v[j]));
    }
  }
  return acc;
}

Mat polarize(const QuadForm& q) { return q.upper + q.upper.transposed(); }

Mat radical(const QuadForm& q) { return rank_kernel(polarize(q)).kernel; }

Mat fold_upper(const Mat& m) {
  Mat u(m.field(), m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    u.at(i, i) = m.at(i, i);
    for (int j = i + 1; j < m.cols(); ++j)
      u.at(i, j) = m.at(i, j) ^ m.at(j, i);
  }
  return u;
}

QuadForm change_basis(const QuadForm& q, const Mat& m) {
  if (m.cols() != q.dim()) throw Error("change_basis width mismatch");
  return QuadForm(fold_upper(m * q.upper * m.transposed()));
}

QuadForm norm_form(Field f) {
  Mat u(f, 2, 2);
  u.at(0, 0) = f.alpha();
  u.at(0, 1) = 1;
  u.at(1, 1) = 1;
  return QuadForm(u);
}

namespace {

scalar_t pairing(const Field& f, const Mat& b, const Row& u, const Row& v) {
  Row ub = row_apply(u, b);
  scalar_t acc = 0;
  for (std::size_t i = 0; i < ub.size(); ++i) acc ^= f.mul(ub[i], v[i]);
  return acc;
}

}  // namespace

Mat symplectic_basis(const Mat& b) {
  const Field& f = b.field();
  const int n = b.rows();
  if (b.cols() != n) throw Error("Gram matrix must be square");
  if (b != b.transposed()) throw Error("Gram matrix must be symmetric");
  for (int i = 0; i < n; ++i)
    if (b.at(i, i) != 0) throw Error("Gram matrix must be alternating");
  std::vector<Row> work;
  for (int i = 0; i < n; ++i) {
    Row e(n, 0);
    e[i] = 1;
    work.push_back(e);
  }
  std::vector<Row> ws, vs;
  while (!work.empty()) {
    Row u = work.front();
    int partner = -1;
    for (std::size_t i = 1; i < work.size(); ++i) {
      if (pairing(f, b, u, work[i]) != 0) {
        partner = static_cast<int>(i);
        break;
      }
    }
    if (partner < 0)
      throw Error("degenerate or odd-dimensional alternating form");
    Row v = row_scale(f, f.inv(pairing(f, b, u, work[partner])), work[partner]);
    std::vector<Row> rest;
    for (std::size_t i = 1; i < work.size(); ++i) {
      if (static_cast<int>(i) == partner) continue;
      Row x = work[i];
      x = row_add(f, x, row_scale(f, pairing(f, b, x, v), u));
      x = row_add(f, x, row_scale(f, pairing(f, b, x, u), v));
      if (!row_is_zero(x)) rest.push_back(x);
    }
    ws.push_back(u);
    vs.push_back(v);
    work = std::move(rest);
  }
  std::vector<Row> all = ws;
  all.insert(all.end(), vs.begin(), vs.end());
  return Mat::from_rows(f, all, n);
}

std::optional<Row> isotropic_vector(const QuadForm& q) {
  const Field& f = q.field();
  const int n = q.dim();
  if (n == 0) return std::nullopt;
  Mat rad = radical(q);
  const int k = rad.rows();
  if (k > 0) {
    // Q restricted to the radical is additive: Q(sum c_i r_i) has square root
    // sum c_i sqrt(Q(r_i)), a linear functional. Its kernel is isotropic.
    std::vector<scalar_t> s(k);
    for (int i = 0; i < k; ++i) s[i] = f.sqrt(q.eval(rad.row(i)));
    for (int i = 0; i < k; ++i)
      if (s[i] == 0) return rad.row(i);
    if (k >= 2)
      return row_add(f, row_scale(f, s[1], rad.row(0)),
                     row_scale(f, s[0], rad.row(1)));
    // k == 1 and Q nonzero on the radical: any complement vector can be
    // corrected by a multiple of the radical vector (every scalar is a square)
    QuotientMaps maps = quotient_basis(row_space(rad), n);
    if (maps.lift.rows() == 0) return std::nullopt;  // 1-dim anisotropic
    Row c = maps.lift.row(0);
    const scalar_t d = q.eval(rad.row(0));
    const scalar_t lam = f.sqrt(f.mul(q.eval(c), f.inv(d)));
    return row_add(f, c, row_scale(f, lam, rad.row(0)));
  }
  // Non-degenerate: inspect the hyperbolic planes of a symplectic basis.
  Mat sb = symplectic_basis(polarize(q));
  const int m = sb.rows() / 2;
  std::vector<Row> aniso_reps;  // one Q = 1 vector per anisotropic plane
  for (int i = 0; i < m; ++i) {
    Row w = sb.row(i);
    Row v = sb.row(m + i);
    const scalar_t a = q.eval(w);
    const scalar_t b = q.eval(v);
    if (a == 0) return w;
    if (b == 0) return v;
    const scalar_t ab = f.mul(a, b);
    if (auto sol = f.artin_schreier_solve(ab)) {
      // Q(w + t v) = a + t + t^2 b vanishes at t = x0 / b.
      return row_add(f, w, row_scale(f, f.mul(sol->first, f.inv(b)), v));
    }
    aniso_reps.push_back(row_scale(f, f.sqrt(f.inv(b)), v));  // Q = 1
  }
  if (aniso_reps.size() >= 2)
    return row_add(f, aniso_reps[0], aniso_reps[1]);
  return std::nullopt;
}

WittSplit witt_decompose(const QuadForm& q) {
  const Field& f = q.field();
  if (radical(q).rows() != 0)
    throw Error("witt_decompose requires a non-degenerate form");
  const int n = q.dim();
  Mat basis = Mat::identity(f, n);  // rows: current coordinates in ambient
  std::vector<Row> witness_rows;
  int m = 0;
  while (basis.rows() > 0) {
    QuadForm cur = change_basis(q, basis);
    auto v = isotropic_vector(cur);
    if (!v) {
      if (basis.rows() != 2)
        throw VerifyError("anisotropic residue of dimension != 2");
      witness_rows.push_back(basis.row(0));
      witness_rows.push_back(basis.row(1));
      Mat w = Mat::from_rows(f, witness_rows, n);
      return WittSplit{m, WittSplit::Residue::kNormForm, w};
    }
    // hyperbolic partner: some vector with B(v, .) = 1, then kill its Q value
    Mat bcur = polarize(cur);
    Row vb = row_apply(*v, bcur);
    int j = 0;
    while (vb[j] == 0) ++j;
    Row w(basis.rows(), 0);
    w[j] = f.inv(vb[j]);
    w = row_add(f, w, row_scale(f, cur.eval(w), *v));
    witness_rows.push_back(row_apply(*v, basis));
    witness_rows.push_back(row_apply(w, basis));
    ++m;
    // B-complement of <v, w> inside the current space
    std::vector<Row> rest;
    for (int i = 0; i < basis.rows(); ++i) {
      Row x(basis.rows(), 0);
      x[i] = 1;
      x = row_add(f, x, row_scale(f, pairing(f, bcur, x, w), *v));
      x = row_add(f, x, row_scale(f, pairing(f, bcur, x, *v), w));
      rest.push_back(x);
    }
    Mat comp = row_space(Mat::from_rows(f, rest, basis.rows()));
    if (comp.rows() != basis.rows() - 2)
      throw VerifyError("hyperbolic complement has wrong dimension");
    basis = comp * basis;
  }
  Mat w = witness_rows.empty() ? Mat(f, 0, n)
                               : Mat::from_rows(f, witness_rows, n);
  return WittSplit{m, WittSplit::Residue::kZero, w};
}

scalar_t arf_invariant(const QuadForm& q) {
  if (radical(q).rows() != 0)
    throw Error("Arf invariant requires a non-degenerate form");
  if (q.dim() == 0) return 0;
  const Field& f = q.field();
  Mat sb = symplectic_basis(polarize(q));
  const int m = sb.rows() / 2;
  scalar_t acc = 0;
  for (int i = 0; i < m; ++i)
    acc ^= f.mul(q.eval(sb.row(i)), q.eval(sb.row(m + i)));
  return acc;
}

namespace {

void check_isometry(const Mat& g, const QuadForm& q) {
  if (g.rows() != q.dim() || g.cols() != q.dim())
    throw Error("isometry dimension mismatch");
  const int n = q.dim();
  // Q(u+v) is determined by Q(u), Q(v), B(u,v), so basis vectors and
  // pairwise sums suffice.
  for (int i = 0; i < n; ++i) {
    Row e(n, 0);
    e[i] = 1;
    if (q.eval(row_apply(e, g)) != q.eval(e))
      throw InvalidFormError("matrix is not an isometry", e);
    for (int j = i + 1; j < n; ++j) {
      Row s = e;
      s[j] = 1;
      if (q.eval(row_apply(s, g)) != q.eval(s))
        throw InvalidFormError("matrix is not an isometry", s);
    }
  }
}

}  // namespace

int dickson(const Mat& g, const QuadForm& q) {
  check_isometry(g, q);
  Mat d = g + Mat::identity(g.field(), g.rows());
  return rank_of(d) % 2;
}

int dickson_lagrangian(const Mat& g, const QuadForm& q, const Mat& w) {
  check_isometry(g, q);
  const Field& f = q.field();
  const int n = q.dim();
  if (w.cols() != n) throw Error("Lagrangian width mismatch");
  Mat wr = row_space(w);
  if (2 * wr.rows() != n)
    throw Error("subspace is not middle-dimensional");
  for (int i = 0; i < wr.rows(); ++i) {
    if (q.eval(wr.row(i)) != 0)
      throw InvalidFormError("subspace is not isotropic", wr.row(i));
    for (int j = i + 1; j < wr.rows(); ++j) {
      Row s = row_add(f, wr.row(i), wr.row(j));
      if (q.eval(s) != 0)
        throw InvalidFormError("subspace is not isotropic", s);
    }
  }
  Mat sum = row_space(vstack(wr, wr * g));
  return (sum.rows() - wr.rows()) % 2;
}

}  // namespace equiwitt
