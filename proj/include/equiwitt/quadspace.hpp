#pragma once

#include <optional>

#include "equiwitt/exactla.hpp"

namespace equiwitt {

/// A quadratic form over K, stored as an upper-triangular coefficient matrix:
/// Q(v) = sum_{i<=j} upper[i][j] v_i v_j. In characteristic 2 the triangular
/// data is the source of truth; the polarization does not determine Q.
struct QuadForm {
  Mat upper;

  explicit QuadForm(Mat u);
  static QuadForm zero(Field f, int dim) { return QuadForm(Mat(f, dim, dim)); }

  int dim() const { return upper.rows(); }
  const Field& field() const { return upper.field(); }
  scalar_t eval(const Row& v) const;
};

/// B_Q = upper + upper^T: symmetric with zero diagonal (alternating).
Mat polarize(const QuadForm& q);
/// Kernel basis of the polarization; the form is non-degenerate iff empty.
Mat radical(const QuadForm& q);
/// The form in the coordinates of the row basis m: Q'(x) = Q(x * m).
QuadForm change_basis(const QuadForm& q, const Mat& m);
/// Fold a square matrix to upper-triangular quadratic-form coefficients.
Mat fold_upper(const Mat& m);
/// The norm form of the quadratic extension: basis (f, e) with Q(f) = alpha,
/// Q(e) = 1, B(e, f) = 1. The unique nonzero anisotropic form over K.
QuadForm norm_form(Field f);

/// For an alternating non-degenerate Gram matrix b, a basis
/// (w_1..w_m, v_1..v_m) with B(w_i, v_j) = delta_ij and all other pairings 0.
Mat symplectic_basis(const Mat& b);

/// Some nonzero vector with Q(v) = 0, or nullopt if the form is anisotropic.
/// Handles degenerate forms.
std::optional<Row> isotropic_vector(const QuadForm& q);

struct WittSplit {
  enum class Residue { kZero, kNormForm };
  int hyperbolic_count;
  Residue residue;
  /// Basis rows (f_1, e_1, ..., f_m, e_m [, residue pair]) splitting the form.
  Mat witness;
};
/// Witt decomposition of a non-degenerate form: hyperbolic planes plus an
/// anisotropic residue, which is zero or the norm form class.
WittSplit witt_decompose(const QuadForm& q);
/// Arf invariant sum Q(w_i) Q(v_i) over a symplectic basis of B_Q; the class
/// is the norm form iff this lies outside wp(K).
scalar_t arf_invariant(const QuadForm& q);

/// Dickson invariant rank(g - id) mod 2 of an isometry g of q.
/// Throws InvalidFormError if g is not an isometry.
int dickson(const Mat& g, const QuadForm& q);
/// Dickson invariant via a Lagrangian w = w^perp: dim(W / W ∩ Wg) mod 2.
int dickson_lagrangian(const Mat& g, const QuadForm& q, const Mat& w);

}  // namespace equiwitt
