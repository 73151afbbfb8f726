#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "equiwitt/grouprep.hpp"
#include "equiwitt/quadspace.hpp"

namespace equiwitt {

/// A non-degenerate G-invariant quadratic form on a right KG-module, plus
/// the catalog of simple modules of its group algebra. Immutable.
struct EquivForm {
  Rep rep;
  QuadForm form;
  std::shared_ptr<const Catalog> catalog;

  int dim() const { return form.dim(); }
  const Field& field() const { return form.field(); }
};

/// Validated constructor: shapes agree, Q(v g) = Q(v) for every generator
/// (checked on basis vectors and pairwise sums), radical zero.
/// Throws InvalidFormError with a witness vector on violation.
EquivForm eq_make(Rep rep, QuadForm form,
                  std::shared_ptr<const Catalog> catalog);
/// The zero form on the zero module.
EquivForm eq_zero(std::shared_ptr<const Catalog> catalog);
/// Block-diagonal orthogonal sum; in characteristic 2 this is also the
/// difference of Witt classes.
EquivForm orth_sum(const EquivForm& x, const EquivForm& y);

/// The hyperbolic module H(M) = M + M^dual with Q(v, phi) = phi(v);
/// metabolic for every module M.
EquivForm hyperbolic_module(const Rep& m,
                            std::shared_ptr<const Catalog> catalog);

enum class SearchOrder { kForward, kReversed };

/// RREF basis of a simple submodule U with Q(U) = {0}, or nullopt if none
/// exists (then the form is anisotropic). Searches the socle: per simple
/// class, projective combinations of hom_space(S, V).
std::optional<Mat> find_isotropic_simple(
    const EquivForm& x, SearchOrder order = SearchOrder::kForward);
/// The induced form on U^perp / U for a submodule with Q(U) = 0;
/// Witt-equivalent to x, dimension drops by 2 dim U.
EquivForm reduce_by(const EquivForm& x, const Mat& u);

struct ReductionStep {
  int dim_before;
  Mat submodule;  ///< isotropic simple in the coordinates of its stage
};

/// The unique anisotropic representative of the Witt class of x.
EquivForm anisotropic_rep(const EquivForm& x,
                          SearchOrder order = SearchOrder::kForward,
                          std::vector<ReductionStep>* transcript = nullptr);
/// The class of x is zero, i.e. its anisotropic representative is 0-dim.
bool is_metabolic(const EquivForm& x);
bool witt_equal(const EquivForm& x, const EquivForm& y);

/// Invariant A: the class of the underlying form in WQ(K), forgetting G.
int inv_A(const EquivForm& x);
/// Invariant C: composition multiplicities mod 2 over the self-dual simple
/// classes, in catalog order (trivial class included).
std::vector<int> inv_C(const EquivForm& x);
/// Invariant D: Dickson invariant of the generator actions, as images of the
/// group generators. Requires inv_A(x) = 0; throws Error otherwise.
std::vector<int> inv_D(const EquivForm& x);

struct WittInvariants {
  int a;
  std::vector<int> c;
  std::optional<std::vector<int>> d;  ///< present iff a == 0
};
WittInvariants invariants(const EquivForm& x);

/// The three shapes of an anisotropic module: the trivial socle part is
/// zero, the norm form N(K), or a single line <e> with indecomposable rump.
enum class AnisoCase { kNoTrivial, kNormPart, kRump };

struct AnisoStructure {
  AnisoCase shape;
  std::vector<int> orthogonal_ids;  ///< classes split off into V_0
  std::vector<int> symplectic_ids;  ///< case kRump: factors of <e>^perp/<e>
};
/// Structure of an anisotropic form per the socle trichotomy; verifies the
/// multiplicity-free orthogonal/symplectic constraints. Throws Error if x is
/// not anisotropic, VerifyError if a structural constraint fails.
AnisoStructure aniso_structure(const EquivForm& x);

/// Brute-force metabolicity by exhaustive isotropic-submodule search.
/// Requires |K|^dim <= 2^20 (CapError otherwise). Test oracle.
bool oracle_metabolic(const EquivForm& x);

}  // namespace equiwitt
