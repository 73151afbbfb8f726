#include "equiwitt/generators.hpp"

#include <algorithm>

namespace equiwitt {

EquivForm gen_norm(std::shared_ptr<const Catalog> catalog) {
  const Field f = catalog->field;
  Rep rep{catalog->group, f, 2, {}};
  for (std::size_t j = 0; j < catalog->group->num_generators(); ++j)
    rep.mats.push_back(Mat::identity(f, 2));
  return eq_make(std::move(rep), norm_form(f), std::move(catalog));
}

EquivForm gen_orthogonal_simple(std::shared_ptr<const Catalog> catalog,
                                int class_id) {
  if (class_id < 0 ||
      class_id >= static_cast<int>(catalog->simples.size()))
    throw ParseError("unknown simple class id");
  const SimpleClass& cls = catalog->simples[class_id];
  if (cls.mtype != ModuleType::kOrthogonal)
    throw Error("simple class is not of orthogonal type");
  if (cls.inv_quadratic.empty())
    throw VerifyError("orthogonal class without an invariant quadratic form");
  const Field& f = catalog->field;
  Mat u = cls.inv_quadratic.front();
  scalar_t lead = 0;
  for (int i = 0; i < u.rows() && !lead; ++i)
    for (int j = i; j < u.cols() && !lead; ++j) lead = u.at(i, j);
  u = u * f.inv(lead);
  return eq_make(cls.rep, QuadForm(u), catalog);
}

EquivForm gen_rtau(std::shared_ptr<const Catalog> catalog,
                   const std::vector<int>& tau, RtauSign sign) {
  if (tau.size() != catalog->group->num_generators())
    throw ParseError("tau has the wrong number of generator images");
  if (std::all_of(tau.begin(), tau.end(), [](int v) { return v == 0; }))
    throw Error("tau must be a surjective character");
  const Field f = catalog->field;
  Mat flip(f, 2, 2);  // f -> f + e, e -> e
  flip.at(0, 0) = 1;
  flip.at(0, 1) = 1;
  flip.at(1, 1) = 1;
  Rep rep{catalog->group, f, 2, {}};
  for (int v : tau)
    rep.mats.push_back(v ? flip : Mat::identity(f, 2));
  rep.validate();  // fails iff tau is not a character of the group
  Mat u(f, 2, 2);
  u.at(0, 0) = sign == RtauSign::kMinus ? f.alpha() : 0;
  u.at(0, 1) = 1;
  u.at(1, 1) = 1;
  return eq_make(std::move(rep), QuadForm(u), std::move(catalog));
}

EquivForm gen_envelope(std::shared_ptr<const Catalog> catalog,
                       const std::vector<int>& class_ids) {
  if (class_ids.empty()) throw Error("envelope of an empty symplectic sum");
  {
    std::vector<int> sorted = class_ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("envelope classes must be pairwise distinct");
  }
  const Field f = catalog->field;
  const std::size_t ng = catalog->group->num_generators();
  // W = direct sum of the classes with its block-diagonal invariant
  // alternating form
  Rep w{catalog->group, f, 0, std::vector<Mat>(ng, Mat(f, 0, 0))};
  Mat bw(f, 0, 0);
  for (int id : class_ids) {
    if (id < 0 || id >= static_cast<int>(catalog->simples.size()))
      throw ParseError("unknown simple class id");
    const SimpleClass& cls = catalog->simples[id];
    if (cls.mtype != ModuleType::kSymplectic)
      throw Error("envelope requires symplectic classes");
    if (cls.inv_bilinear.empty())
      throw VerifyError("symplectic class without an invariant form");
    for (std::size_t j = 0; j < ng; ++j)
      w.mats[j] = block_diag(w.mats[j], cls.rep.mats[j]);
    bw = block_diag(bw, cls.inv_bilinear.front());
    w.dim += cls.rep.dim;
  }
  if (w.dim % 2 != 0) throw VerifyError("symplectic module of odd dimension");
  const int m = w.dim / 2;
  // standard symplectic coordinates (w_1..w_m, v_1..v_m)
  Mat sb = symplectic_basis(bw);
  auto sbi = inverse(sb);
  if (!sbi) throw VerifyError("symplectic basis is singular");
  // the split quadratic space on (f, w_1..w_m, v_1..v_m, e)
  const int n = 2 * m + 2;
  Mat upper(f, n, n);
  upper.at(0, n - 1) = 1;      // B(f, e) = 1
  upper.at(n - 1, n - 1) = 1;  // Q(e) = 1
  for (int i = 0; i < m; ++i) upper.at(1 + i, 1 + m + i) = 1;
  QuadForm q(upper);
  Rep rep{catalog->group, f, n, {}};
  for (std::size_t j = 0; j < ng; ++j) {
    Mat sp = sb * w.mats[j] * *sbi;  // symplectic matrix [[A,B],[C,D]]
    // c_i^2 = (A B^tr)_ii, d_i^2 = (C D^tr)_ii
    Row c(m), d(m);
    for (int i = 0; i < m; ++i) {
      scalar_t ab = 0, cd = 0;
      for (int k = 0; k < m; ++k) {
        ab ^= f.mul(sp.at(i, k), sp.at(i, m + k));
        cd ^= f.mul(sp.at(m + i, k), sp.at(m + i, m + k));
      }
      c[i] = f.sqrt(ab);
      d[i] = f.sqrt(cd);
    }
    // (c; d) = [[A,B],[C,D]] (b^tr; a^tr) determines a, b
    Mat cd_col(f, 2 * m, 1);
    for (int i = 0; i < m; ++i) {
      cd_col.at(i, 0) = c[i];
      cd_col.at(m + i, 0) = d[i];
    }
    auto spi = inverse(sp);
    if (!spi) throw VerifyError("singular symplectic matrix");
    Mat ba = *spi * cd_col;
    Row b(m), a(m);
    for (int i = 0; i < m; ++i) {
      b[i] = ba.at(i, 0);
      a[i] = ba.at(m + i, 0);
    }
    scalar_t abtr = 0;
    for (int i = 0; i < m; ++i) abtr ^= f.mul(a[i], b[i]);
    auto x0 = f.artin_schreier_solve(abtr);
    if (!x0)
      throw VerifyError("envelope lift: a b^tr outside the image of wp");
    Mat g(f, n, n);
    g.at(0, 0) = 1;
    g.at(n - 1, n - 1) = 1;
    for (int i = 0; i < m; ++i) {
      g.at(0, 1 + i) = a[i];
      g.at(0, 1 + m + i) = b[i];
      g.at(1 + i, n - 1) = c[i];
      g.at(1 + m + i, n - 1) = d[i];
    }
    for (int i = 0; i < 2 * m; ++i)
      for (int k = 0; k < 2 * m; ++k) g.at(1 + i, 1 + k) = sp.at(i, k);
    g.at(0, n - 1) = x0->first;
    if (dickson(g, q) != 0) g.at(0, n - 1) = x0->second;  // g_0 h
    if (dickson(g, q) != 0)
      throw VerifyError("neither envelope lift has trivial Dickson invariant");
    rep.mats.push_back(std::move(g));
  }
  return eq_make(std::move(rep), std::move(q), std::move(catalog));
}

}  // namespace equiwitt
