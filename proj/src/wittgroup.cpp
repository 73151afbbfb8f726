#include "equiwitt/wittgroup.hpp"

#include <chrono>
#include <random>

namespace equiwitt {

namespace {

std::string int_str(int v) { return std::to_string(v); }

}  // namespace

GroupWittDescription describe(std::shared_ptr<const PermGroup> g, Field f,
                              const MeataxeOptions& opts) {
  auto catalog =
      std::make_shared<const Catalog>(simple_catalog(g, f, opts));
  GroupWittDescription desc{catalog, two_torsion_characters(*g),
                            catalog->s,  0, 0, {}, {}};
  desc.t = desc.torsion.t;
  desc.rank = desc.s + desc.t;
  for (const SimpleClass& cls : catalog->simples) {
    if (!cls.self_dual || cls.mtype == ModuleType::kTrivial) continue;
    desc.s0_ids.push_back(cls.id);
    if (cls.mtype == ModuleType::kOrthogonal) {
      desc.generators.push_back(
          {"S:" + int_str(cls.id), gen_orthogonal_simple(catalog, cls.id)});
    } else {
      desc.generators.push_back(
          {"Env:" + int_str(cls.id), gen_envelope(catalog, {cls.id})});
    }
  }
  desc.generators.push_back({"N", gen_norm(catalog)});
  for (int j = 0; j < desc.t; ++j) {
    std::vector<int> tau = desc.torsion.taus[j];
    desc.generators.push_back({"Rtau:" + int_str(j) + ":+",
                               gen_rtau(catalog, tau, RtauSign::kPlus)});
  }
  if (static_cast<int>(desc.generators.size()) != desc.rank)
    throw VerifyError("generator count differs from s + t");
  return desc;
}

WittCoords coordinates(const GroupWittDescription& desc, const EquivForm& x) {
  if (x.catalog->group != desc.catalog->group ||
      x.field() != desc.catalog->field)
    throw ParseError("form does not live over the described group and field");
  // restrict C to S_0
  std::vector<int> c_full = inv_C(x);
  std::vector<int> self_dual_ids;
  for (const SimpleClass& cls : desc.catalog->simples)
    if (cls.self_dual) self_dual_ids.push_back(cls.id);
  WittCoords coords{{}, 0, {}};
  for (std::size_t k = 0; k < self_dual_ids.size(); ++k)
    if (desc.catalog->simples[self_dual_ids[k]].mtype != ModuleType::kTrivial)
      coords.c0.push_back(c_full[k]);
  // peel the S_0 part
  EquivForm x1 = x;
  for (std::size_t k = 0; k < coords.c0.size(); ++k)
    if (coords.c0[k]) x1 = orth_sum(x1, desc.generators[k].form);
  coords.a = inv_A(x1);
  EquivForm x2 = coords.a
                     ? orth_sum(x1, desc.generators[coords.c0.size()].form)
                     : x1;
  // express D(x2) in the tau basis over F_2
  std::vector<int> dvals = inv_D(x2);
  const Field f2 = Field::make(1);
  const int ng = static_cast<int>(dvals.size());
  std::vector<Row> tau_rows;
  for (const auto& tau : desc.torsion.taus) {
    Row r(ng);
    for (int j = 0; j < ng; ++j) r[j] = static_cast<scalar_t>(tau[j]);
    tau_rows.push_back(r);
  }
  Mat taus = Mat::from_rows(f2, tau_rows, ng);
  Row dv(ng);
  for (int j = 0; j < ng; ++j) dv[j] = static_cast<scalar_t>(dvals[j]);
  auto sol = solve_linear(taus, Mat::from_rows(f2, {dv}, ng));
  if (!sol)
    throw VerifyError("residual Dickson map outside the character lattice");
  for (int j = 0; j < desc.t; ++j) coords.d.push_back(sol->at(0, j));
  // the fully peeled class must vanish
  EquivForm x3 = x2;
  for (int j = 0; j < desc.t; ++j)
    if (coords.d[j])
      x3 = orth_sum(x3, desc.generators[coords.c0.size() + 1 + j].form);
  if (!is_metabolic(x3))
    throw VerifyError("coordinate residual is not metabolic");
  return coords;
}

EquivForm from_coordinates(const GroupWittDescription& desc,
                           const WittCoords& coords) {
  if (static_cast<int>(coords.c0.size()) != desc.s - 1 ||
      static_cast<int>(coords.d.size()) != desc.t)
    throw ParseError("coordinate lengths do not match s - 1 and t");
  EquivForm sum = eq_zero(desc.catalog);
  for (std::size_t k = 0; k < coords.c0.size(); ++k)
    if (coords.c0[k]) sum = orth_sum(sum, desc.generators[k].form);
  if (coords.a)
    sum = orth_sum(sum, desc.generators[coords.c0.size()].form);
  for (int j = 0; j < desc.t; ++j)
    if (coords.d[j])
      sum = orth_sum(sum, desc.generators[coords.c0.size() + 1 + j].form);
  return anisotropic_rep(sum);
}

namespace {

Mat random_invertible(const Field& f, int n, std::mt19937_64& rng) {
  while (true) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.at(i, j) = static_cast<scalar_t>(rng() % f.order());
    if (inverse(m)) return m;
  }
}

EquivForm random_conjugate(const EquivForm& x, std::mt19937_64& rng) {
  if (x.dim() == 0) return x;
  Mat m = random_invertible(x.field(), x.dim(), rng);
  Mat mi = *inverse(m);
  Rep rep{x.rep.group, x.rep.field, x.dim(), {}};
  for (const Mat& g : x.rep.mats) rep.mats.push_back(m * g * mi);
  return eq_make(std::move(rep), change_basis(x.form, m), x.catalog);
}

EquivForm random_metabolic(const GroupWittDescription& desc,
                           std::mt19937_64& rng) {
  const auto& cat = *desc.catalog;
  const Field f = cat.field;
  switch (rng() % 3) {
    case 0: {  // hyperbolic over the trivial module
      Rep triv{cat.group, f, 1,
               std::vector<Mat>(cat.group->num_generators(),
                                Mat::identity(f, 1))};
      return hyperbolic_module(triv, desc.catalog);
    }
    case 1:
      return hyperbolic_module(natural_perm_rep(cat.group, f), desc.catalog);
    default: {
      const auto& cls = cat.simples[rng() % cat.simples.size()];
      return hyperbolic_module(cls.rep, desc.catalog);
    }
  }
}

}  // namespace

TheoremReport verify_theorem(const GroupWittDescription& desc, int samples,
                             std::uint64_t seed) {
  TheoremReport report{desc.s, desc.t, desc.rank, true, {}};
  auto run = [&](const std::string& name, auto&& body) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
      pass = body();
    } catch (const Error&) {
      pass = false;
    }
    const auto stop = std::chrono::steady_clock::now();
    const double ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    report.checks.push_back({name, pass, ms});
    report.pass = report.pass && pass;
  };

  run("generators_order_2_and_anisotropic", [&] {
    for (const LabeledForm& g : desc.generators) {
      if (anisotropic_rep(g.form).dim() != g.form.dim()) return false;
      if (!is_metabolic(orth_sum(g.form, g.form))) return false;
    }
    return true;
  });

  run("coordinate_classes_distinct", [&] {
    for (std::uint32_t bits = 0; bits < (1u << desc.rank); ++bits) {
      WittCoords coords{{}, 0, {}};
      int pos = 0;
      for (int k = 0; k < desc.s - 1; ++k)
        coords.c0.push_back((bits >> pos++) & 1);
      coords.a = (bits >> pos++) & 1;
      for (int j = 0; j < desc.t; ++j)
        coords.d.push_back((bits >> pos++) & 1);
      EquivForm y = from_coordinates(desc, coords);
      if (!(coordinates(desc, y) == coords)) return false;
      if (bits != 0 && y.dim() == 0) return false;
    }
    return true;
  });

  run("random_forms_decompose", [&] {
    std::mt19937_64 rng(seed);
    for (int k = 0; k < samples; ++k) {
      EquivForm x = eq_zero(desc.catalog);
      for (const LabeledForm& g : desc.generators)
        if (rng() % 2) x = orth_sum(x, g.form);
      const int pads = 1 + static_cast<int>(rng() % 2);
      for (int p = 0; p < pads; ++p)
        x = orth_sum(x, random_metabolic(desc, rng));
      x = random_conjugate(x, rng);
      WittCoords coords = coordinates(desc, x);
      if (!witt_equal(x, from_coordinates(desc, coords))) return false;
    }
    return true;
  });

  return report;
}

}  // namespace equiwitt
