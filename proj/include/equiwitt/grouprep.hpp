#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "equiwitt/exactla.hpp"

namespace equiwitt {

using Perm = std::vector<int>;

/// A finite group given by permutation generators, with the element closure
/// enumerated in deterministic BFS order and a generator word cached for
/// every element.
class PermGroup {
 public:
  static constexpr std::size_t kDefaultCap = 20000;

  static std::shared_ptr<const PermGroup> make(int degree,
                                               std::vector<Perm> gens,
                                               std::size_t cap = kDefaultCap);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t num_generators() const { return gens_.size(); }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elements_; }
  /// Word in the generators for element i; identity has the empty word.
  const std::vector<int>& word(std::size_t i) const { return words_[i]; }
  /// Index of elements[i] * generator[j] (apply element, then generator).
  std::size_t mul_gen(std::size_t i, std::size_t j) const {
    return table_[i][j];
  }
  std::size_t index_of(const Perm& p) const;

 private:
  PermGroup() = default;
  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<std::size_t>> table_;
};

struct TwoTorsion {
  int t;
  /// Basis of Hom(G, C_2), each given by its values on the generators.
  std::vector<std::vector<int>> taus;
};
/// The F_2-dual of G modulo commutators and squares.
TwoTorsion two_torsion_characters(const PermGroup& g);

/// A right KG-module: one invertible matrix per generator, acting on rows.
struct Rep {
  std::shared_ptr<const PermGroup> group;
  Field field;
  int dim;
  std::vector<Mat> mats;

  /// Matrix of an arbitrary element via its generator word.
  Mat act(std::size_t element_index) const;
  /// Invertibility of the generator matrices and consistency with the
  /// multiplication table. Throws ParseError on failure.
  void validate() const;
};

constexpr int kDimCap = 256;
constexpr std::uint64_t kMeataxeSeed = 0x571717;

struct MeataxeOptions {
  std::uint64_t seed = kMeataxeSeed;
  int budget = 200;
};

Rep regular_rep(std::shared_ptr<const PermGroup> g, Field f);
/// Natural permutation module on the points.
Rep natural_perm_rep(std::shared_ptr<const PermGroup> g, Field f);
Rep dual_rep(const Rep& v);
/// Restriction to a submodule given by an RREF row basis.
Rep sub_rep(const Rep& v, const Mat& basis);
/// Action on the quotient by a submodule given by an RREF row basis.
Rep quotient_rep(const Rep& v, const Mat& basis);
/// Composition factors with Jordan-Hoelder multiplicity (one entry each).
std::vector<Rep> chop(const Rep& v, const MeataxeOptions& opts = {});
/// Basis of the intertwiner space {X : G_a X = X G_b} (maps v -> v X).
std::vector<Mat> hom_space(const Rep& a, const Rep& b);
/// An invertible intertwiner, or nullopt.
std::optional<Mat> iso_test(const Rep& a, const Rep& b);
/// RREF basis of the fixed space {v : v g = v for all g}.
Mat fixed_space(const Rep& v);
/// Basis of G-invariant symmetric bilinear forms (full symmetric matrices).
std::vector<Mat> invariant_bilinear(const Rep& v);
/// Basis of G-invariant quadratic forms (upper-triangular matrices).
std::vector<Mat> invariant_quadratic(const Rep& v);

enum class ModuleType { kTrivial, kOrthogonal, kSymplectic, kNonSelfDual };

struct SimpleClass {
  int id;
  Rep rep;
  bool self_dual;
  ModuleType mtype;
  std::vector<Mat> inv_bilinear;
  std::vector<Mat> inv_quadratic;
};

struct Catalog {
  Field field;
  std::shared_ptr<const PermGroup> group;
  std::vector<SimpleClass> simples;
  int s;  ///< number of self-dual classes, trivial included
};

/// All isomorphism classes of simple KG-modules (chopped from the regular
/// module), with self-duality and orthogonal/symplectic classification.
Catalog simple_catalog(std::shared_ptr<const PermGroup> g, Field f,
                       const MeataxeOptions& opts = {});
/// Catalog index of a simple module, or -1.
int class_of(const Catalog& cat, const Rep& simple);
/// Composition-factor multiplicities of v per catalog class.
std::vector<int> multiplicities(const Catalog& cat, const Rep& v,
                                const MeataxeOptions& opts = {});
/// RREF basis of the socle (sum of images of all simples).
Mat socle(const Catalog& cat, const Rep& v);

const char* module_type_name(ModuleType t);

}  // namespace equiwitt
