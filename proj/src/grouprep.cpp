#include "equiwitt/grouprep.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "equiwitt/kpoly.hpp"

namespace equiwitt {

namespace {

Perm perm_mul(const Perm& p, const Perm& q) {
  // apply p, then q
  Perm r(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) r[a] = q[p[a]];
  return r;
}

}  // namespace

std::shared_ptr<const PermGroup> PermGroup::make(int degree,
                                                 std::vector<Perm> gens,
                                                 std::size_t cap) {
  if (degree < 1) throw ParseError("group degree must be positive");
  for (const Perm& p : gens) {
    if (static_cast<int>(p.size()) != degree)
      throw ParseError("generator has wrong degree");
    std::vector<bool> seen(degree, false);
    for (int x : p) {
      if (x < 0 || x >= degree || seen[x])
        throw ParseError("generator is not a permutation");
      seen[x] = true;
    }
  }
  auto g = std::shared_ptr<PermGroup>(new PermGroup());
  g->degree_ = degree;
  g->gens_ = std::move(gens);
  Perm id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  std::map<Perm, std::size_t> index;
  g->elements_.push_back(id);
  g->words_.push_back({});
  index[id] = 0;
  for (std::size_t head = 0; head < g->elements_.size(); ++head) {
    g->table_.push_back(std::vector<std::size_t>(g->gens_.size()));
    for (std::size_t j = 0; j < g->gens_.size(); ++j) {
      Perm next = perm_mul(g->elements_[head], g->gens_[j]);
      auto it = index.find(next);
      if (it == index.end()) {
        if (g->elements_.size() >= cap)
          throw CapError("group closure exceeds cap of " + std::to_string(cap));
        std::size_t idx = g->elements_.size();
        g->elements_.push_back(next);
        std::vector<int> w = g->words_[head];
        w.push_back(static_cast<int>(j));
        g->words_.push_back(std::move(w));
        index[next] = idx;
        g->table_[head][j] = idx;
      } else {
        g->table_[head][j] = it->second;
      }
    }
  }
  return g;
}

std::size_t PermGroup::index_of(const Perm& p) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == p) return i;
  throw Error("permutation not in group");
}

TwoTorsion two_torsion_characters(const PermGroup& g) {
  const Field f2 = Field::make(1);
  const int k = static_cast<int>(g.num_generators());
  std::vector<Row> rows;
  auto word_parity = [&](std::size_t i) {
    Row r(k, 0);
    for (int letter : g.word(i)) r[letter] ^= 1;
    return r;
  };
  for (std::size_t i = 0; i < g.order(); ++i) {
    Row wi = word_parity(i);
    for (int j = 0; j < k; ++j) {
      Row r = word_parity(g.mul_gen(i, j));
      for (int c = 0; c < k; ++c) r[c] ^= wi[c];
      r[j] ^= 1;
      if (!row_is_zero(r)) rows.push_back(r);
    }
  }
  Mat relations = Mat::from_rows(f2, rows, k);
  Mat taus = rank_kernel(relations.transposed()).kernel;
  TwoTorsion out;
  out.t = taus.rows();
  for (int i = 0; i < taus.rows(); ++i) {
    std::vector<int> tau(k);
    for (int j = 0; j < k; ++j) tau[j] = taus.at(i, j);
    out.taus.push_back(std::move(tau));
  }
  return out;
}

Mat Rep::act(std::size_t element_index) const {
  Mat m = Mat::identity(field, dim);
  for (int letter : group->word(element_index)) m = m * mats[letter];
  return m;
}

void Rep::validate() const {
  if (static_cast<std::size_t>(mats.size()) != group->num_generators())
    throw ParseError("representation has wrong number of matrices");
  for (const Mat& m : mats) {
    if (m.rows() != dim || m.cols() != dim || m.field() != field)
      throw ParseError("representation matrix has wrong shape or field");
    if (!inverse(m)) throw ParseError("representation matrix is singular");
  }
  // consistency with the whole multiplication table
  std::vector<Mat> elem_mats;
  elem_mats.reserve(group->order());
  elem_mats.push_back(Mat::identity(field, dim));
  for (std::size_t i = 1; i < group->order(); ++i) {
    const auto& w = group->word(i);
    Mat m = elem_mats[0];
    // words are built by BFS, so the prefix is an earlier element
    for (int letter : w) m = m * mats[letter];
    elem_mats.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < group->order(); ++i)
    for (std::size_t j = 0; j < group->num_generators(); ++j)
      if (elem_mats[i] * mats[j] != elem_mats[group->mul_gen(i, j)])
        throw ParseError("matrices do not satisfy the group relations");
}

Rep regular_rep(std::shared_ptr<const PermGroup> g, Field f) {
  const int n = static_cast<int>(g->order());
  if (n > kDimCap) throw CapError("regular module exceeds dimension cap");
  Rep r{g, f, n, {}};
  for (std::size_t j = 0; j < g->num_generators(); ++j) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, static_cast<int>(g->mul_gen(i, j))) = 1;
    r.mats.push_back(std::move(m));
  }
  return r;
}

Rep natural_perm_rep(std::shared_ptr<const PermGroup> g, Field f) {
  const int n = g->degree();
  Rep r{g, f, n, {}};
  for (const Perm& p : g->generators()) {
    Mat m(f, n, n);
    for (int a = 0; a < n; ++a) m.at(a, p[a]) = 1;
    r.mats.push_back(std::move(m));
  }
  return r;
}

Rep dual_rep(const Rep& v) {
  Rep r{v.group, v.field, v.dim, {}};
  for (const Mat& m : v.mats) {
    auto mi = inverse(m);
    if (!mi) throw Error("singular matrix in representation");
    r.mats.push_back(mi->transposed());
  }
  return r;
}

Rep sub_rep(const Rep& v, const Mat& basis) {
  Rep r{v.group, v.field, basis.rows(), {}};
  for (const Mat& m : v.mats) {
    auto x = solve_linear(basis, basis * m);
    if (!x) throw Error("basis does not span a submodule");
    r.mats.push_back(*x);
  }
  return r;
}

Rep quotient_rep(const Rep& v, const Mat& basis) {
  QuotientMaps maps = quotient_basis(basis, v.dim);
  Rep r{v.group, v.field, maps.lift.rows(), {}};
  for (const Mat& m : v.mats) r.mats.push_back(maps.lift * m * maps.project);
  return r;
}

namespace {

void chop_rec(const Rep& v, std::vector<Rep>& out, std::mt19937_64& rng,
              int budget) {
  if (v.dim == 0) return;
  if (v.dim == 1) {
    out.push_back(v);
    return;
  }
  const Field& f = v.field;
  const std::size_t order = v.group->order();
  for (int attempt = 0; attempt < budget; ++attempt) {
    Mat theta(f, v.dim, v.dim);
    const int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
      const scalar_t c =
          static_cast<scalar_t>(1 + rng() % (f.order() - 1));
      theta = theta + v.act(rng() % order) * c;
    }
    KPoly p = min_poly(theta);
    auto factors = irreducible_factors(p, rng());
    if (factors.empty()) continue;
    const KPoly& fac = factors.front();
    Mat ker = rank_kernel(fac.eval(theta)).kernel;
    if (ker.rows() == 0) continue;
    for (int i = 0; i < ker.rows(); ++i) {
      Mat u = spin(Mat::from_rows(f, {ker.row(i)}, v.dim), v.mats);
      if (u.rows() < v.dim) {
        chop_rec(sub_rep(v, u), out, rng, budget);
        chop_rec(quotient_rep(v, u), out, rng, budget);
        return;
      }
    }
    if (ker.rows() != fac.degree()) continue;  // inconclusive, resample
    // Norton's test: spin a kernel vector in the transpose module.
    std::vector<Mat> tmats;
    for (const Mat& m : v.mats) tmats.push_back(m.transposed());
    Mat kert = rank_kernel(fac.eval(theta.transposed())).kernel;
    Mat ut = spin(Mat::from_rows(f, {kert.row(0)}, v.dim), tmats);
    if (ut.rows() == v.dim) {
      out.push_back(v);  // irreducible
      return;
    }
    // the annihilator of a proper transpose submodule is a proper submodule
    Mat w = rank_kernel(ut.transposed()).kernel;
    chop_rec(sub_rep(v, w), out, rng, budget);
    chop_rec(quotient_rep(v, w), out, rng, budget);
    return;
  }
  throw CapError("meataxe: split budget exhausted");
}

}  // namespace

std::vector<Rep> chop(const Rep& v, const MeataxeOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::vector<Rep> out;
  chop_rec(v, out, rng, opts.budget);
  return out;
}

std::vector<Mat> hom_space(const Rep& a, const Rep& b) {
  if (a.group != b.group || a.field != b.field)
    throw Error("hom_space requires the same group and field");
  const Field& f = a.field;
  const int na = a.dim, nb = b.dim;
  const int ng = static_cast<int>(a.mats.size());
  const int unknowns = na * nb;
  // equivariance G_a X = X G_b per generator, unknowns X row-major
  Mat sys(f, unknowns, ng * unknowns);
  for (int g = 0; g < ng; ++g) {
    const Mat& ga = a.mats[g];
    const Mat& gb = b.mats[g];
    for (int i = 0; i < na; ++i) {
      for (int j = 0; j < nb; ++j) {
        const int eq = (g * na + i) * nb + j;
        for (int k = 0; k < na; ++k)
          sys.at(k * nb + j, eq) ^= ga.at(i, k);
        for (int l = 0; l < nb; ++l)
          sys.at(i * nb + l, eq) ^= gb.at(l, j);
      }
    }
  }
  Mat kernel = rank_kernel(sys).kernel;
  std::vector<Mat> out;
  for (int r = 0; r < kernel.rows(); ++r) {
    Mat x(f, na, nb);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j) x.at(i, j) = kernel.at(r, i * nb + j);
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<Mat> iso_test(const Rep& a, const Rep& b) {
  if (a.dim != b.dim) return std::nullopt;
  auto homs = hom_space(a, b);
  if (homs.empty()) return std::nullopt;
  for (const Mat& x : homs)
    if (inverse(x)) return x;
  // enumerate projective combinations, capped
  constexpr int kCap = 1 << 12;
  const Field& f = a.field;
  const int h = static_cast<int>(homs.size());
  std::vector<scalar_t> c(h, 0);
  int tried = 0;
  // first nonzero coefficient normalized to 1
  for (int lead = 0; lead < h; ++lead) {
    std::vector<scalar_t> tail(h - lead - 1, 0);
    while (true) {
      Mat x = homs[lead];
      for (int i = 0; i < h - lead - 1; ++i)
        if (tail[i]) x = x + homs[lead + 1 + i] * tail[i];
      if (++tried > kCap)
        throw CapError("iso_test: combination cap exceeded");
      if (inverse(x)) return x;
      // odometer over the tail coefficients
      int pos = 0;
      while (pos < h - lead - 1) {
        tail[pos] = static_cast<scalar_t>((tail[pos] + 1) % f.order());
        if (tail[pos] != 0) break;
        ++pos;
      }
      if (pos == h - lead - 1) break;
    }
  }
  return std::nullopt;
}

Mat fixed_space(const Rep& v) {
  const Field& f = v.field;
  Mat stacked(f, v.dim, 0);
  for (const Mat& m : v.mats)
    stacked = hstack(stacked, m + Mat::identity(f, v.dim));
  if (v.mats.empty()) return Mat::identity(f, v.dim);
  return rank_kernel(stacked).kernel;
}

std::vector<Mat> invariant_bilinear(const Rep& v) {
  const Field& f = v.field;
  const int n = v.dim;
  const int ng = static_cast<int>(v.mats.size());
  // unknowns b_{uv} for u <= v, row-major over the triangle
  std::vector<std::pair<int, int>> idx;
  for (int u = 0; u < n; ++u)
    for (int w = u; w < n; ++w) idx.push_back({u, w});
  const int unknowns = static_cast<int>(idx.size());
  Mat sys(f, unknowns, ng * unknowns);
  for (int g = 0; g < ng; ++g) {
    const Mat& m = v.mats[g];
    for (int e = 0; e < unknowns; ++e) {
      const auto [i, j] = idx[e];
      const int eq = g * unknowns + e;
      for (int t = 0; t < unknowns; ++t) {
        const auto [u, w] = idx[t];
        scalar_t coeff = f.mul(m.at(i, u), m.at(j, w));
        if (u != w) coeff ^= f.mul(m.at(i, w), m.at(j, u));
        if (t == e) coeff ^= 1;
        sys.at(t, eq) = coeff;
      }
    }
  }
  Mat kernel = rank_kernel(sys).kernel;
  std::vector<Mat> out;
  for (int r = 0; r < kernel.rows(); ++r) {
    Mat b(f, n, n);
    for (int t = 0; t < unknowns; ++t) {
      const auto [u, w] = idx[t];
      b.at(u, w) = kernel.at(r, t);
      b.at(w, u) = kernel.at(r, t);
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<Mat> invariant_quadratic(const Rep& v) {
  const Field& f = v.field;
  const int n = v.dim;
  const int ng = static_cast<int>(v.mats.size());
  std::vector<std::pair<int, int>> idx;
  for (int u = 0; u < n; ++u)
    for (int w = u; w < n; ++w) idx.push_back({u, w});
  const int unknowns = static_cast<int>(idx.size());
  // fold(g U g^T) = U per generator; fold is linear in U
  Mat sys(f, unknowns, ng * unknowns);
  for (int g = 0; g < ng; ++g) {
    const Mat& m = v.mats[g];
    for (int e = 0; e < unknowns; ++e) {
      const auto [i, j] = idx[e];
      const int eq = g * unknowns + e;
      for (int t = 0; t < unknowns; ++t) {
        const auto [u, w] = idx[t];
        scalar_t coeff;
        if (i == j) {
          coeff = f.mul(m.at(i, u), m.at(i, w));
        } else {
          coeff = static_cast<scalar_t>(f.mul(m.at(i, u), m.at(j, w)) ^
                                        f.mul(m.at(j, u), m.at(i, w)));
        }
        if (t == e) coeff ^= 1;
        sys.at(t, eq) = coeff;
      }
    }
  }
  Mat kernel = rank_kernel(sys).kernel;
  std::vector<Mat> out;
  for (int r = 0; r < kernel.rows(); ++r) {
    Mat u_mat(f, n, n);
    for (int t = 0; t < unknowns; ++t) {
      const auto [u, w] = idx[t];
      u_mat.at(u, w) = kernel.at(r, t);
    }
    out.push_back(std::move(u_mat));
  }
  return out;
}

namespace {

bool is_trivial_rep(const Rep& r) {
  if (r.dim != 1) return false;
  for (const Mat& m : r.mats)
    if (!m.is_identity()) return false;
  return true;
}

}  // namespace

Catalog simple_catalog(std::shared_ptr<const PermGroup> g, Field f,
                       const MeataxeOptions& opts) {
  std::vector<Rep> factors = chop(regular_rep(g, f), opts);
  std::vector<Rep> reps;  // one per isomorphism class, in first-appearance order
  for (const Rep& fac : factors) {
    bool known = false;
    for (const Rep& r : reps) {
      if (r.dim == fac.dim && iso_test(r, fac)) {
        known = true;
        break;
      }
    }
    if (!known) reps.push_back(fac);
  }
  std::stable_sort(reps.begin(), reps.end(),
                   [](const Rep& a, const Rep& b) { return a.dim < b.dim; });
  Catalog cat{f, g, {}, 0};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    SimpleClass cls{static_cast<int>(i), reps[i], false,
                    ModuleType::kTrivial, {}, {}};
    cls.self_dual = iso_test(reps[i], dual_rep(reps[i])).has_value();
    cls.inv_bilinear = invariant_bilinear(reps[i]);
    cls.inv_quadratic = invariant_quadratic(reps[i]);
    if (is_trivial_rep(reps[i])) {
      cls.mtype = ModuleType::kTrivial;
    } else if (!cls.self_dual) {
      cls.mtype = ModuleType::kNonSelfDual;
    } else if (!cls.inv_quadratic.empty()) {
      cls.mtype = ModuleType::kOrthogonal;
      // every nonzero invariant quadratic on a nontrivial simple module has
      // non-degenerate polarization
      Mat b = cls.inv_quadratic.front() +
              cls.inv_quadratic.front().transposed();
      if (rank_of(b) != reps[i].dim)
        throw VerifyError("degenerate invariant quadratic on a simple module");
    } else {
      cls.mtype = ModuleType::kSymplectic;
    }
    if (cls.self_dual) ++cat.s;
    cat.simples.push_back(std::move(cls));
  }
  return cat;
}

int class_of(const Catalog& cat, const Rep& simple) {
  for (const SimpleClass& c : cat.simples)
    if (c.rep.dim == simple.dim && iso_test(c.rep, simple)) return c.id;
  return -1;
}

std::vector<int> multiplicities(const Catalog& cat, const Rep& v,
                                const MeataxeOptions& opts) {
  std::vector<int> mult(cat.simples.size(), 0);
  for (const Rep& fac : chop(v, opts)) {
    const int id = class_of(cat, fac);
    if (id < 0) throw VerifyError("composition factor missing from catalog");
    ++mult[id];
  }
  return mult;
}

Mat socle(const Catalog& cat, const Rep& v) {
  std::vector<Row> rows;
  for (const SimpleClass& c : cat.simples) {
    for (const Mat& x : hom_space(c.rep, v))
      for (int i = 0; i < x.rows(); ++i) rows.push_back(x.row(i));
  }
  return row_space(Mat::from_rows(v.field, rows, v.dim));
}

const char* module_type_name(ModuleType t) {
  switch (t) {
    case ModuleType::kTrivial: return "trivial";
    case ModuleType::kOrthogonal: return "orthogonal";
    case ModuleType::kSymplectic: return "symplectic";
    case ModuleType::kNonSelfDual: return "nonselfdual";
  }
  return "?";
}

}  // namespace equiwitt
