#include "equiwitt/equiforms.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace equiwitt {

namespace {

/// Q vanishes on a subspace iff the restricted coefficient matrix is zero.
bool q_vanishes_on(const QuadForm& q, const Mat& basis) {
  return change_basis(q, basis).upper.is_zero();
}

bool is_submodule(const Rep& rep, const Mat& rref_basis) {
  for (const Mat& m : rep.mats)
    for (int i = 0; i < rref_basis.rows(); ++i)
      if (!in_row_space(rref_basis, row_apply(rref_basis.row(i), m)))
        return false;
  return true;
}

}  // namespace

EquivForm eq_make(Rep rep, QuadForm form,
                  std::shared_ptr<const Catalog> catalog) {
  if (!catalog) throw Error("equivariant form requires a catalog");
  if (rep.dim != form.dim() || rep.field != form.field() ||
      rep.field != catalog->field)
    throw ParseError("module and form shapes disagree");
  const int n = form.dim();
  for (const Mat& g : rep.mats) {
    for (int i = 0; i < n; ++i) {
      Row e(n, 0);
      e[i] = 1;
      if (form.eval(row_apply(e, g)) != form.eval(e))
        throw InvalidFormError("form is not G-invariant", e);
      for (int j = i + 1; j < n; ++j) {
        Row s = e;
        s[j] = 1;
        if (form.eval(row_apply(s, g)) != form.eval(s))
          throw InvalidFormError("form is not G-invariant", s);
      }
    }
  }
  Mat rad = radical(form);
  if (rad.rows() != 0)
    throw InvalidFormError("form is degenerate", rad.row(0));
  return EquivForm{std::move(rep), std::move(form), std::move(catalog)};
}

EquivForm eq_zero(std::shared_ptr<const Catalog> catalog) {
  const Field f = catalog->field;
  Rep rep{catalog->group, f, 0, {}};
  for (std::size_t j = 0; j < catalog->group->num_generators(); ++j)
    rep.mats.push_back(Mat(f, 0, 0));
  return EquivForm{std::move(rep), QuadForm::zero(f, 0), std::move(catalog)};
}

EquivForm orth_sum(const EquivForm& x, const EquivForm& y) {
  if (x.catalog->group != y.catalog->group || x.field() != y.field())
    throw ParseError("orthogonal sum requires the same group and field");
  Rep rep{x.rep.group, x.rep.field, x.dim() + y.dim(), {}};
  for (std::size_t j = 0; j < x.rep.mats.size(); ++j)
    rep.mats.push_back(block_diag(x.rep.mats[j], y.rep.mats[j]));
  QuadForm q(block_diag(x.form.upper, y.form.upper));
  return EquivForm{std::move(rep), std::move(q), x.catalog};
}

EquivForm hyperbolic_module(const Rep& m,
                            std::shared_ptr<const Catalog> catalog) {
  const Field f = m.field;
  const int k = m.dim;
  Rep dual = dual_rep(m);
  Rep rep{m.group, f, 2 * k, {}};
  for (std::size_t j = 0; j < m.mats.size(); ++j)
    rep.mats.push_back(block_diag(m.mats[j], dual.mats[j]));
  Mat u(f, 2 * k, 2 * k);
  for (int i = 0; i < k; ++i) u.at(i, k + i) = 1;
  return eq_make(std::move(rep), QuadForm(u), std::move(catalog));
}

namespace {

/// Projective enumeration of nonzero combinations of the hom basis; returns
/// the first combination whose image is totally isotropic.
std::optional<Mat> isotropic_image(const QuadForm& q,
                                   const std::vector<Mat>& homs) {
  if (homs.empty()) return std::nullopt;
  constexpr int kCap = 1 << 14;
  const Field& f = homs.front().field();
  const int h = static_cast<int>(homs.size());
  int tried = 0;
  for (int lead = 0; lead < h; ++lead) {
    std::vector<scalar_t> tail(h - lead - 1, 0);
    while (true) {
      Mat x = homs[lead];
      for (int i = 0; i < h - lead - 1; ++i)
        if (tail[i]) x = x + homs[lead + 1 + i] * tail[i];
      if (++tried > kCap)
        throw CapError("isotropic submodule search: combination cap exceeded");
      if (q_vanishes_on(q, x)) return row_space(x);
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

/// First projective combination whose image carries a non-degenerate
/// restriction of q.
std::optional<Mat> nondegenerate_image(const QuadForm& q,
                                       const std::vector<Mat>& homs) {
  if (homs.empty()) return std::nullopt;
  constexpr int kCap = 1 << 14;
  const Field& f = homs.front().field();
  const int h = static_cast<int>(homs.size());
  int tried = 0;
  for (int lead = 0; lead < h; ++lead) {
    std::vector<scalar_t> tail(h - lead - 1, 0);
    while (true) {
      Mat x = homs[lead];
      for (int i = 0; i < h - lead - 1; ++i)
        if (tail[i]) x = x + homs[lead + 1 + i] * tail[i];
      if (++tried > kCap)
        throw CapError("submodule search: combination cap exceeded");
      Mat u = row_space(x);
      if (u.rows() == x.rows() &&
          radical(change_basis(q, u)).rows() == 0)
        return u;
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

}  // namespace

std::optional<Mat> find_isotropic_simple(const EquivForm& x,
                                         SearchOrder order) {
  const Catalog& cat = *x.catalog;
  std::vector<int> ids;
  for (const SimpleClass& c : cat.simples) ids.push_back(c.id);
  if (order == SearchOrder::kReversed) std::reverse(ids.begin(), ids.end());
  for (int id : ids) {
    const SimpleClass& cls = cat.simples[id];
    if (cls.mtype == ModuleType::kTrivial) {
      // the trivial component of the socle is the fixed space; an isotropic
      // fixed vector is an isotropic vector of the restricted form
      Mat fix = fixed_space(x.rep);
      if (fix.rows() == 0) continue;
      if (auto v = isotropic_vector(change_basis(x.form, fix)))
        return row_space(Mat::from_rows(x.field(), {row_apply(*v, fix)},
                                        x.dim()));
      continue;
    }
    auto homs = hom_space(cls.rep, x.rep);
    if (auto u = isotropic_image(x.form, homs)) return u;
  }
  return std::nullopt;
}

EquivForm reduce_by(const EquivForm& x, const Mat& u_in) {
  Mat u = row_space(u_in);
  if (u.rows() == 0) throw Error("reduce_by requires a nonzero submodule");
  if (u.cols() != x.dim()) throw Error("reduce_by width mismatch");
  if (!is_submodule(x.rep, u))
    throw InvalidFormError("subspace is not G-stable", u.row(0));
  if (!q_vanishes_on(x.form, u))
    throw InvalidFormError("submodule is not isotropic", u.row(0));
  Mat b = polarize(x.form);
  Mat perp = rank_kernel(b * u.transposed()).kernel;
  Rep sub = sub_rep(x.rep, perp);
  auto uc = solve_linear(perp, u);
  if (!uc) throw VerifyError("isotropic submodule outside its perp");
  Mat ucr = row_space(*uc);
  Rep quo = quotient_rep(sub, ucr);
  QuotientMaps maps = quotient_basis(ucr, perp.rows());
  QuadForm q = change_basis(x.form, maps.lift * perp);
  EquivForm out = eq_make(std::move(quo), std::move(q), x.catalog);
  if (out.dim() != x.dim() - 2 * u.rows())
    throw VerifyError("reduction dropped the wrong dimension");
  return out;
}

EquivForm anisotropic_rep(const EquivForm& x, SearchOrder order,
                          std::vector<ReductionStep>* transcript) {
  EquivForm cur = x;
  while (auto u = find_isotropic_simple(cur, order)) {
    if (transcript) transcript->push_back({cur.dim(), *u});
    cur = reduce_by(cur, *u);
  }
  return cur;
}

bool is_metabolic(const EquivForm& x) {
  return anisotropic_rep(x).dim() == 0;
}

bool witt_equal(const EquivForm& x, const EquivForm& y) {
  return is_metabolic(orth_sum(x, y));
}

int inv_A(const EquivForm& x) {
  return witt_decompose(x.form).residue == WittSplit::Residue::kNormForm ? 1
                                                                         : 0;
}

std::vector<int> inv_C(const EquivForm& x) {
  std::vector<int> mult = multiplicities(*x.catalog, x.rep);
  std::vector<int> out;
  for (const SimpleClass& c : x.catalog->simples)
    if (c.self_dual) out.push_back(mult[c.id] % 2);
  return out;
}

std::vector<int> inv_D(const EquivForm& x) {
  if (inv_A(x) != 0)
    throw Error("invariant D is only defined on the kernel of A");
  std::vector<int> d;
  for (const Mat& g : x.rep.mats) d.push_back(dickson(g, x.form));
  // homomorphism consistency over random closure elements
  std::mt19937_64 rng(kMeataxeSeed);
  const std::size_t order = x.rep.group->order();
  for (int k = 0; k < 100; ++k) {
    const std::size_t i = rng() % order;
    int expect = 0;
    for (int letter : x.rep.group->word(i)) expect ^= d[letter];
    if (dickson(x.rep.act(i), x.form) != expect)
      throw VerifyError("Dickson invariant is not a homomorphism");
  }
  return d;
}

WittInvariants invariants(const EquivForm& x) {
  WittInvariants w{inv_A(x), inv_C(x), std::nullopt};
  if (w.a == 0) w.d = inv_D(x);
  return w;
}

AnisoStructure aniso_structure(const EquivForm& x) {
  if (find_isotropic_simple(x))
    throw Error("structure report requires an anisotropic form");
  AnisoStructure out{AnisoCase::kNoTrivial, {}, {}};
  // split off simple submodules with non-degenerate restriction into V_0
  EquivForm cur = x;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const SimpleClass& cls : x.catalog->simples) {
      if (cls.mtype == ModuleType::kTrivial) continue;
      auto homs = hom_space(cls.rep, cur.rep);
      auto split = nondegenerate_image(cur.form, homs);
      if (!split) continue;
      out.orthogonal_ids.push_back(cls.id);
      Mat perp =
          rank_kernel(polarize(cur.form) * split->transposed()).kernel;
      cur = eq_make(sub_rep(cur.rep, perp), change_basis(cur.form, perp),
                    x.catalog);
      progress = true;
      break;
    }
  }
  std::sort(out.orthogonal_ids.begin(), out.orthogonal_ids.end());
  if (std::adjacent_find(out.orthogonal_ids.begin(),
                         out.orthogonal_ids.end()) !=
      out.orthogonal_ids.end())
    throw VerifyError("orthogonal part of an anisotropic form has a repeat");
  // the remainder has all-trivial socle of dimension 0, 1 or 2
  Mat fix = fixed_space(cur.rep);
  if (fix.rows() == 0) {
    if (cur.dim() != 0)
      throw VerifyError("fixed-free remainder after splitting the socle");
    out.shape = AnisoCase::kNoTrivial;
    return out;
  }
  if (fix.rows() == 2) {
    QuadForm t = change_basis(cur.form, fix);
    if (radical(t).rows() != 0 || isotropic_vector(t))
      throw VerifyError("2-dim trivial socle part is not the norm form");
    if (cur.dim() != 2)
      throw VerifyError("norm part does not exhaust the remainder");
    out.shape = AnisoCase::kNormPart;
    return out;
  }
  if (fix.rows() != 1)
    throw VerifyError("trivial socle part of dimension > 2");
  out.shape = AnisoCase::kRump;
  // W = <e>^perp / <e> must be zero or multiplicity-free symplectic
  Row e = fix.row(0);
  Mat perp =
      rank_kernel(polarize(cur.form) *
                  Mat::from_rows(cur.field(), {e}, cur.dim()).transposed())
          .kernel;
  Rep sub = sub_rep(cur.rep, perp);
  auto ec = solve_linear(perp, Mat::from_rows(cur.field(), {e}, cur.dim()));
  if (!ec) throw VerifyError("socle line outside its own perp");
  Rep w = quotient_rep(sub, row_space(*ec));
  if (w.dim == 0) return out;
  std::vector<int> mult = multiplicities(*x.catalog, w);
  for (const SimpleClass& cls : x.catalog->simples) {
    if (mult[cls.id] == 0) continue;
    if (mult[cls.id] > 1 || cls.mtype != ModuleType::kSymplectic)
      throw VerifyError("rump quotient is not multiplicity-free symplectic");
    out.symplectic_ids.push_back(cls.id);
  }
  return out;
}

namespace {

std::vector<scalar_t> flatten(const Mat& m) {
  std::vector<scalar_t> key;
  key.reserve(static_cast<std::size_t>(m.rows()) * m.cols() + 1);
  key.push_back(static_cast<scalar_t>(m.rows()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) key.push_back(m.at(i, j));
  return key;
}

bool oracle_rec(const EquivForm& x, const Mat& cur,
                const std::vector<Row>& iso_vecs,
                std::set<std::vector<scalar_t>>& seen) {
  if (2 * cur.rows() == x.dim()) return true;
  for (const Row& v : iso_vecs) {
    if (in_row_space(cur, v)) continue;
    Mat next = spin(vstack(cur, Mat::from_rows(x.field(), {v}, x.dim())),
                    x.rep.mats);
    if (2 * next.rows() > x.dim()) continue;
    if (!q_vanishes_on(x.form, next)) continue;
    if (!seen.insert(flatten(next)).second) continue;
    if (oracle_rec(x, next, iso_vecs, seen)) return true;
  }
  return false;
}

}  // namespace

bool oracle_metabolic(const EquivForm& x) {
  const int n = x.dim();
  if (n == 0) return true;
  if (n % 2 != 0) return false;
  const Field& f = x.field();
  double size = 1;
  for (int i = 0; i < n; ++i) size *= f.order();
  if (size > static_cast<double>(1 << 20))
    throw CapError("oracle domain exceeds 2^20 vectors");
  // all nonzero isotropic vectors, by odometer enumeration
  std::vector<Row> iso_vecs;
  Row v(n, 0);
  while (true) {
    int pos = 0;
    while (pos < n) {
      v[pos] = static_cast<scalar_t>((v[pos] + 1) % f.order());
      if (v[pos] != 0) break;
      ++pos;
    }
    if (pos == n) break;
    if (x.form.eval(v) == 0) iso_vecs.push_back(v);
  }
  std::set<std::vector<scalar_t>> seen;
  return oracle_rec(x, Mat(f, 0, n), iso_vecs, seen);
}

}  // namespace equiwitt
