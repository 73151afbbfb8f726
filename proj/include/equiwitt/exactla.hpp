#pragma once

#include <optional>
#include <span>
#include <vector>

#include "equiwitt/gfield.hpp"

namespace equiwitt {

using Row = std::vector<scalar_t>;

/// Dense matrix over GF(2^e), row-major. Vectors are rows throughout and act
/// on the right: v -> v * m.
class Mat {
 public:
  Mat(Field f, int rows, int cols);
  static Mat identity(Field f, int n);
  static Mat from_rows(Field f, const std::vector<Row>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  scalar_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  scalar_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  Row row(int i) const;
  void set_row(int i, const Row& v);

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator*(scalar_t c) const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transposed() const;
  bool is_zero() const;
  bool is_identity() const;

 private:
  int rows_, cols_;
  Field field_;
  std::vector<scalar_t> a_;
};

Mat vstack(const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);
/// Block-diagonal sum.
Mat block_diag(const Mat& a, const Mat& b);
/// v * m for a row vector v.
Row row_apply(const Row& v, const Mat& m);
Row row_add(const Field& f, const Row& a, const Row& b);
Row row_scale(const Field& f, scalar_t c, const Row& a);
bool row_is_zero(const Row& v);

struct RankKernel {
  int rank;
  Mat kernel;  ///< RREF basis of the left kernel {v : v * m = 0}.
};
RankKernel rank_kernel(const Mat& m);
int rank_of(const Mat& m);
/// RREF basis of the row space (zero rows dropped).
Mat row_space(const Mat& m);
/// One solution X of X * coeffs = rhs, or nullopt if inconsistent.
/// Deterministic: pivots on the first nonzero column, free coordinates zero.
std::optional<Mat> solve_linear(const Mat& coeffs, const Mat& rhs);
std::optional<Mat> inverse(const Mat& m);
/// v in the row space of an RREF basis.
bool in_row_space(const Mat& rref_basis, const Row& v);
/// RREF basis of the smallest subspace containing the seed rows and stable
/// under every action matrix.
Mat spin(const Mat& seeds, std::span<const Mat> action);

struct QuotientMaps {
  Mat lift;     ///< quotient coords -> ambient coset representatives
  Mat project;  ///< ambient coords -> quotient coords; lift * project = I
};
/// Coordinates on ambient/sub for a subspace given by an RREF basis.
QuotientMaps quotient_basis(const Mat& sub, int ambient_dim);

}  // namespace equiwitt
