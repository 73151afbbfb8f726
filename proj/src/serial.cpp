#include "equiwitt/serial.hpp"

namespace equiwitt {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int need_int(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string(key) + ": not an integer");
  return v.get<int>();
}

scalar_t to_scalar(const Json& v, const Field& f) {
  if (!v.is_number_integer() || v.get<long long>() < 0 ||
      v.get<long long>() >= f.order())
    throw ParseError("scalar out of range for the field");
  return static_cast<scalar_t>(v.get<long long>());
}

}  // namespace

Json field_to_json(const Field& f) {
  return Json{{"e", f.degree()}, {"modulus_bits", f.modulus_bits()}};
}

Field field_from_json(const Json& j) {
  const int e = need_int(j, "e");
  std::optional<std::uint32_t> modulus;
  if (j.contains("modulus_bits"))
    modulus = static_cast<std::uint32_t>(need_int(j, "modulus_bits"));
  return Field::make(e, modulus);
}

Json mat_to_json(const Mat& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()},
              {"entries", std::move(entries)}};
}

Mat mat_from_json(const Json& j, Field f) {
  const int rows = need_int(j, "rows");
  const int cols = need_int(j, "cols");
  const Json& entries = need(j, "entries");
  if (rows < 0 || cols < 0 || !entries.is_array() ||
      static_cast<int>(entries.size()) != rows)
    throw ParseError("matrix shape mismatch");
  Mat m(f, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = entries.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError("matrix shape mismatch");
    for (int c = 0; c < cols; ++c) m.at(i, c) = to_scalar(row.at(c), f);
  }
  return m;
}

Json group_to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const Perm& p : g.generators()) gens.push_back(p);
  return Json{{"degree", g.degree()}, {"gens", std::move(gens)}};
}

std::shared_ptr<const PermGroup> group_from_json(const Json& j) {
  const int degree = need_int(j, "degree");
  const Json& gens = need(j, "gens");
  if (!gens.is_array()) throw ParseError("gens: not an array");
  std::vector<Perm> perms;
  for (const Json& g : gens) {
    if (!g.is_array()) throw ParseError("generator: not an array");
    Perm p;
    for (const Json& v : g) {
      if (!v.is_number_integer()) throw ParseError("permutation image: not an integer");
      p.push_back(v.get<int>());
    }
    perms.push_back(std::move(p));
  }
  return PermGroup::make(degree, std::move(perms));
}

namespace {

Json upper_to_json(const Mat& u) {
  Json rows = Json::array();
  for (int i = 0; i < u.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < u.cols(); ++j) row.push_back(u.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat upper_from_json(const Json& j, Field f, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParseError("upper: shape mismatch");
  Mat u(f, dim, dim);
  for (int i = 0; i < dim; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw ParseError("upper: shape mismatch");
    for (int c = 0; c < dim; ++c) u.at(i, c) = to_scalar(row.at(c), f);
  }
  return u;
}

}  // namespace

Json quadform_to_json(const QuadForm& q) {
  return Json{{"field", field_to_json(q.field())},
              {"dim", q.dim()},
              {"upper", upper_to_json(q.upper)}};
}

QuadForm quadform_from_json(const Json& j) {
  Field f = field_from_json(need(j, "field"));
  const int dim = need_int(j, "dim");
  if (dim < 0 || dim > kDimCap) throw CapError("form dimension outside caps");
  return QuadForm(upper_from_json(need(j, "upper"), f, dim));
}

Json equivform_to_json(const EquivForm& x, const std::string& label) {
  Json mats = Json::array();
  for (const Mat& m : x.rep.mats) mats.push_back(mat_to_json(m));
  Json j{{"group", group_to_json(*x.rep.group)},
         {"field", field_to_json(x.field())},
         {"rep_mats", std::move(mats)},
         {"upper", upper_to_json(x.form.upper)}};
  if (!label.empty()) j["label"] = label;
  return j;
}

EquivForm equivform_from_json(const Json& j, const MeataxeOptions& opts) {
  auto group = group_from_json(need(j, "group"));
  Field f = field_from_json(need(j, "field"));
  const Json& mats = need(j, "rep_mats");
  if (!mats.is_array() || mats.size() != group->num_generators())
    throw ParseError("rep_mats: one matrix per generator required");
  Rep rep{group, f, 0, {}};
  for (const Json& m : mats) rep.mats.push_back(mat_from_json(m, f));
  rep.dim = rep.mats.empty() ? 0 : rep.mats.front().rows();
  if (rep.dim > kDimCap) throw CapError("module dimension outside caps");
  rep.validate();
  QuadForm q(upper_from_json(need(j, "upper"), f, rep.dim));
  auto catalog =
      std::make_shared<const Catalog>(simple_catalog(group, f, opts));
  return eq_make(std::move(rep), std::move(q), std::move(catalog));
}

Json catalog_to_json(const Catalog& cat) {
  Json simples = Json::array();
  for (const SimpleClass& c : cat.simples)
    simples.push_back(Json{{"id", c.id},
                           {"dim", c.rep.dim},
                           {"self_dual", c.self_dual},
                           {"type", module_type_name(c.mtype)}});
  return Json{{"field", field_to_json(cat.field)},
              {"s", cat.s},
              {"simples", std::move(simples)}};
}

Json coords_to_json(const WittCoords& c) {
  return Json{{"c0", c.c0}, {"a", c.a}, {"d", c.d}};
}

Json transcript_to_json(const std::vector<ReductionStep>& steps) {
  Json out = Json::array();
  for (const ReductionStep& s : steps)
    out.push_back(Json{{"dim_before", s.dim_before},
                       {"submodule", mat_to_json(s.submodule)}});
  return out;
}

Json report_to_json(const TheoremReport& r,
                    const GroupWittDescription& desc) {
  Json gens = Json::array();
  for (const LabeledForm& g : desc.generators) gens.push_back(g.label);
  Json checks = Json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"ms", c.ms}});
  return Json{{"s", r.s},
              {"t", r.t},
              {"rank", r.rank},
              {"pass", r.pass},
              {"generators", std::move(gens)},
              {"checks", std::move(checks)}};
}

}  // namespace equiwitt
