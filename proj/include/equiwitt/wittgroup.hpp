#pragma once

#include <string>

#include "equiwitt/generators.hpp"

namespace equiwitt {

/// Coordinates of a Witt class in the decomposition
/// WQ(K,G) = F_2^{S_0} x WQ(K) x Hom(G, C_2).
struct WittCoords {
  std::vector<int> c0;  ///< flags over S_0 (self-dual nontrivial classes)
  int a;                ///< the N(K) coordinate
  std::vector<int> d;   ///< flags over the tau basis of Hom(G, C_2)

  bool operator==(const WittCoords& o) const = default;
};

struct LabeledForm {
  std::string label;  ///< "N", "S:<id>", "Env:<id>" or "Rtau:<j>:+"
  EquivForm form;
};

/// The computed presentation of WQ(K,G) = C_2^{s+t}.
struct GroupWittDescription {
  std::shared_ptr<const Catalog> catalog;
  TwoTorsion torsion;
  int s;
  int t;
  int rank;
  std::vector<int> s0_ids;  ///< catalog ids of the S_0 members, in order
  /// One generator per S_0 member (simple orthogonal form or singleton
  /// envelope), then N(K), then R^+(tau_j) per torsion basis element.
  std::vector<LabeledForm> generators;
};

GroupWittDescription describe(std::shared_ptr<const PermGroup> g, Field f,
                              const MeataxeOptions& opts = {});

/// Coordinates of the class of x; verifies that the residual after peeling
/// all coordinates is metabolic (VerifyError otherwise).
WittCoords coordinates(const GroupWittDescription& desc, const EquivForm& x);
/// The anisotropic representative of the coordinate sum.
EquivForm from_coordinates(const GroupWittDescription& desc,
                           const WittCoords& coords);

struct CheckResult {
  std::string name;
  bool pass;
  double ms;
};

struct TheoremReport {
  int s;
  int t;
  int rank;
  bool pass;
  std::vector<CheckResult> checks;
};

/// Checks that the generators have order 2 and are anisotropic, that all
/// 2^(s+t) coordinate vectors give pairwise distinct classes (round-trip
/// through coordinates), and that `samples` random invariant forms
/// decompose over the generators.
TheoremReport verify_theorem(const GroupWittDescription& desc, int samples,
                             std::uint64_t seed = kMeataxeSeed);

}  // namespace equiwitt
