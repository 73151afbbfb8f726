#include "equiwitt/exactla.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace equiwitt {

namespace {

void check_same_field(const Field& a, const Field& b) {
  if (a != b) throw Error("field mismatch between matrices");
}

}  // namespace

Mat::Mat(Field f, int rows, int cols)
    : rows_(rows), cols_(cols), field_(f),
      a_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
}

Mat Mat::identity(Field f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(Field f, const std::vector<Row>& rows, int cols) {
  Mat m(f, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw Error("row length mismatch");
    m.set_row(i, rows[i]);
  }
  return m;
}

Row Mat::row(int i) const {
  return Row(a_.begin() + static_cast<std::size_t>(i) * cols_,
             a_.begin() + static_cast<std::size_t>(i + 1) * cols_);
}

void Mat::set_row(int i, const Row& v) {
  std::copy(v.begin(), v.end(), a_.begin() + static_cast<std::size_t>(i) * cols_);
}

Mat Mat::operator*(const Mat& o) const {
  check_same_field(field_, o.field_);
  if (cols_ != o.rows_) throw Error("shape mismatch in matrix product");
  Mat r(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const scalar_t c = at(i, k);
      if (!c) continue;
      for (int j = 0; j < o.cols_; ++j) {
        r.at(i, j) ^= field_.mul(c, o.at(k, j));
      }
    }
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  check_same_field(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("shape mismatch in matrix sum");
  Mat r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] ^= o.a_[i];
  return r;
}

Mat Mat::operator*(scalar_t c) const {
  Mat r = *this;
  for (auto& x : r.a_) x = field_.mul(c, x);
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ &&
         a_ == o.a_;
}

Mat Mat::transposed() const {
  Mat r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](scalar_t x) { return x == 0; });
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Mat vstack(const Mat& a, const Mat& b) {
  check_same_field(a.field(), b.field());
  if (a.cols() != b.cols()) throw Error("vstack column mismatch");
  Mat r(a.field(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) r.set_row(i, a.row(i));
  for (int i = 0; i < b.rows(); ++i) r.set_row(a.rows() + i, b.row(i));
  return r;
}

Mat hstack(const Mat& a, const Mat& b) {
  check_same_field(a.field(), b.field());
  if (a.rows() != b.rows()) throw Error("hstack row mismatch");
  Mat r(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

Mat block_diag(const Mat& a, const Mat& b) {
  check_same_field(a.field(), b.field());
  Mat r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return r;
}

Row row_apply(const Row& v, const Mat& m) {
  if (static_cast<int>(v.size()) != m.rows())
    throw Error("vector/matrix shape mismatch");
  const Field& f = m.field();
  Row r(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    const scalar_t c = v[i];
    if (!c) continue;
    for (int j = 0; j < m.cols(); ++j) r[j] ^= f.mul(c, m.at(i, j));
  }
  return r;
}

Row row_add(const Field&, const Row& a, const Row& b) {
  Row r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] ^= b[i];
  return r;
}

Row row_scale(const Field& f, scalar_t c, const Row& a) {
  Row r = a;
  for (auto& x : r) x = f.mul(c, x);
  return r;
}

bool row_is_zero(const Row& v) {
  return std::all_of(v.begin(), v.end(), [](scalar_t x) { return x == 0; });
}

namespace {

// Full reduction of [a | t] on the columns of a. Returns the rank; on exit
// the first `rank` rows of a are its RREF.
int eliminate(Mat& a, Mat* t) {
  const Field& f = a.field();
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i) {
      if (a.at(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) {
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
      if (t)
        for (int j = 0; j < t->cols(); ++j) std::swap(t->at(p, j), t->at(r, j));
    }
    const scalar_t s = f.inv(a.at(r, c));
    if (s != 1) {
      for (int j = 0; j < a.cols(); ++j) a.at(r, j) = f.mul(s, a.at(r, j));
      if (t)
        for (int j = 0; j < t->cols(); ++j) t->at(r, j) = f.mul(s, t->at(r, j));
    }
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const scalar_t m = a.at(i, c);
      if (!m) continue;
      for (int j = 0; j < a.cols(); ++j)
        a.at(i, j) ^= f.mul(m, a.at(r, j));
      if (t)
        for (int j = 0; j < t->cols(); ++j)
          t->at(i, j) ^= f.mul(m, t->at(r, j));
    }
    ++r;
  }
  return r;
}

}  // namespace

RankKernel rank_kernel(const Mat& m) {
  Mat a = m;
  Mat t = Mat::identity(m.field(), m.rows());
  const int r = eliminate(a, &t);
  Mat ker(m.field(), m.rows() - r, m.rows());
  for (int i = r; i < m.rows(); ++i) ker.set_row(i - r, t.row(i));
  return RankKernel{r, row_space(ker)};
}

int rank_of(const Mat& m) {
  Mat a = m;
  return eliminate(a, nullptr);
}

Mat row_space(const Mat& m) {
  Mat a = m;
  const int r = eliminate(a, nullptr);
  Mat b(m.field(), r, m.cols());
  for (int i = 0; i < r; ++i) b.set_row(i, a.row(i));
  return b;
}

std::optional<Mat> solve_linear(const Mat& coeffs, const Mat& rhs) {
  check_same_field(coeffs.field(), rhs.field());
  if (coeffs.cols() != rhs.cols()) throw Error("solve_linear shape mismatch");
  const Field& f = coeffs.field();
  Mat a = coeffs;
  Mat t = Mat::identity(f, coeffs.rows());
  const int r = eliminate(a, &t);
  std::vector<int> pivot_col(r);
  for (int i = 0; i < r; ++i) {
    int c = 0;
    while (c < a.cols() && a.at(i, c) == 0) ++c;
    pivot_col[i] = c;
  }
  Mat x(f, rhs.rows(), coeffs.rows());
  for (int k = 0; k < rhs.rows(); ++k) {
    Row b = rhs.row(k);
    Row combo(coeffs.rows(), 0);
    for (int i = 0; i < r; ++i) {
      const scalar_t lam = b[pivot_col[i]];
      if (!lam) continue;
      for (int j = 0; j < a.cols(); ++j) b[j] ^= f.mul(lam, a.at(i, j));
      for (int j = 0; j < t.cols(); ++j) combo[j] ^= f.mul(lam, t.at(i, j));
    }
    if (!row_is_zero(b)) return std::nullopt;
    x.set_row(k, combo);
  }
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
  auto x = solve_linear(m, Mat::identity(m.field(), m.rows()));
  if (!x) return std::nullopt;
  if (!(*x * m).is_identity()) return std::nullopt;
  return x;
}

bool in_row_space(const Mat& basis, const Row& v) {
  const Field& f = basis.field();
  Row b = v;
  for (int i = 0; i < basis.rows(); ++i) {
    int c = 0;
    while (c < basis.cols() && basis.at(i, c) == 0) ++c;
    if (c == basis.cols()) continue;
    const scalar_t lam = b[c];
    if (!lam) continue;
    for (int j = 0; j < basis.cols(); ++j) b[j] ^= f.mul(lam, basis.at(i, j));
  }
  return row_is_zero(b);
}

Mat spin(const Mat& seeds, std::span<const Mat> action) {
  const Field& f = seeds.field();
  const int n = seeds.cols();
  for (const Mat& g : action) {
    check_same_field(f, g.field());
    if (g.rows() != n || g.cols() != n)
      throw Error("spin: action matrix dimension mismatch");
  }
  std::vector<Row> basis;  // kept in echelon order (not fully reduced)
  std::deque<Row> queue;
  auto insert = [&](const Row& v) {
    Row b = v;
    for (const Row& w : basis) {
      int c = 0;
      while (c < n && w[c] == 0) ++c;
      if (c < n && b[c] != 0) {
        const scalar_t lam = f.mul(b[c], f.inv(w[c]));
        for (int j = 0; j < n; ++j) b[j] ^= f.mul(lam, w[j]);
      }
    }
    if (row_is_zero(b)) return;
    // normalize leading entry, keep rows sorted by pivot column
    int c = 0;
    while (b[c] == 0) ++c;
    b = row_scale(f, f.inv(b[c]), b);
    auto pos = basis.begin();
    for (; pos != basis.end(); ++pos) {
      int pc = 0;
      while (pc < n && (*pos)[pc] == 0) ++pc;
      if (pc > c) break;
    }
    basis.insert(pos, b);
    queue.push_back(b);
  };
  for (int i = 0; i < seeds.rows(); ++i) insert(seeds.row(i));
  while (!queue.empty()) {
    Row v = queue.front();
    queue.pop_front();
    for (const Mat& g : action) insert(row_apply(v, g));
  }
  return row_space(Mat::from_rows(f, basis, n));
}

QuotientMaps quotient_basis(const Mat& sub, int ambient_dim) {
  const Field& f = sub.field();
  if (sub.cols() != ambient_dim) throw Error("quotient_basis: width mismatch");
  std::vector<int> pivots;
  int last = -1;
  for (int i = 0; i < sub.rows(); ++i) {
    int c = 0;
    while (c < ambient_dim && sub.at(i, c) == 0) ++c;
    if (c == ambient_dim || c <= last || sub.at(i, c) != 1)
      throw Error("quotient_basis: sub is not in reduced echelon form");
    for (int k = 0; k < sub.rows(); ++k)
      if (k != i && sub.at(k, c) != 0)
        throw Error("quotient_basis: sub is not in reduced echelon form");
    pivots.push_back(c);
    last = c;
  }
  std::vector<int> free_cols;
  {
    std::size_t pi = 0;
    for (int c = 0; c < ambient_dim; ++c) {
      if (pi < pivots.size() && pivots[pi] == c) {
        ++pi;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  const int q = static_cast<int>(free_cols.size());
  Mat lift(f, q, ambient_dim);
  for (int i = 0; i < q; ++i) lift.at(i, free_cols[i]) = 1;
  Mat project(f, ambient_dim, q);
  for (int c = 0; c < ambient_dim; ++c) {
    // residue of e_c modulo sub, read off at the free columns
    Row b(ambient_dim, 0);
    b[c] = 1;
    for (int i = 0; i < sub.rows(); ++i) {
      const scalar_t lam = b[pivots[i]];
      if (!lam) continue;
      for (int j = 0; j < ambient_dim; ++j) b[j] ^= f.mul(lam, sub.at(i, j));
    }
    for (int i = 0; i < q; ++i) project.at(c, i) = b[free_cols[i]];
  }
  return QuotientMaps{lift, project};
}

}  // namespace equiwitt
