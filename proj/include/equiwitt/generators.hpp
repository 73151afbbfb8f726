#pragma once

#include "equiwitt/equiforms.hpp"

namespace equiwitt {

/// N(K) with trivial G-action: the unique 2-dim anisotropic space.
EquivForm gen_norm(std::shared_ptr<const Catalog> catalog);

/// (S, Q_S) for a simple class of orthogonal type; Q_S is the first
/// invariant-quadratic basis element, normalized to leading coefficient 1.
EquivForm gen_orthogonal_simple(std::shared_ptr<const Catalog> catalog,
                                int class_id);

enum class RtauSign { kPlus, kMinus };

/// The 2-dim module R^+(tau) / R^-(tau) on basis (f, e): Q(e) = 1,
/// B(f, e) = 1, Q(f) = 0 (plus) or alpha (minus); a generator acts as
/// [[1,1],[0,1]] when tau maps it to 1, as the identity otherwise.
/// tau lists the generator images and must be a surjective character.
EquivForm gen_rtau(std::shared_ptr<const Catalog> catalog,
                   const std::vector<int>& tau, RtauSign sign);

/// The quadratic envelope R^+(W) of W = direct sum of pairwise distinct
/// simple symplectic classes: the (2m+2)-dim split space on basis
/// (f, w_1..w_m, v_1..v_m, e) with the G-action lifted from Sp_2m(K) so
/// that e is fixed and every lift has trivial Dickson invariant.
EquivForm gen_envelope(std::shared_ptr<const Catalog> catalog,
                       const std::vector<int>& class_ids);

}  // namespace equiwitt
