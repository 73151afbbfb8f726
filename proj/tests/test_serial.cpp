#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equiwitt/serial.hpp"

using namespace equiwitt;

TEST_CASE("field round-trip") {
  Field f = Field::make(3, 0b1101);
  Field g = field_from_json(field_to_json(f));
  CHECK(f == g);
  // default modulus when omitted
  CHECK(field_from_json(Json{{"e", 2}}) == Field::make(2));
  CHECK_THROWS_AS(field_from_json(Json{{"e", 2}, {"modulus_bits", 6}}),
                  ParseError);
  CHECK_THROWS_AS(field_from_json(Json::array()), ParseError);
}

TEST_CASE("matrix round-trip and validation") {
  Field f = Field::make(2);
  Mat m = Mat::from_rows(f, {{0, 1, 2}, {3, 0, 1}}, 3);
  Mat back = mat_from_json(mat_to_json(m), f);
  CHECK(back == m);
  Json bad = mat_to_json(m);
  bad["entries"][0][1] = 7;  // out of range for GF(4)
  CHECK_THROWS_AS(mat_from_json(bad, f), ParseError);
  bad = mat_to_json(m);
  bad["rows"] = 5;
  CHECK_THROWS_AS(mat_from_json(bad, f), ParseError);
}

TEST_CASE("group round-trip") {
  auto g = PermGroup::make(3, {{1, 2, 0}, {1, 0, 2}});
  auto back = group_from_json(group_to_json(*g));
  CHECK(back->order() == 6);
  CHECK(back->generators() == g->generators());
  CHECK_THROWS_AS(group_from_json(Json{{"degree", 3}, {"gens", Json::array({Json::array({0, 0, 1})})}}),
                  ParseError);
}

TEST_CASE("quadratic form round-trip") {
  Field f = Field::make(2);
  Mat u = Mat::from_rows(f, {{1, 2}, {0, 3}}, 2);
  QuadForm q(u);
  QuadForm back = quadform_from_json(quadform_to_json(q));
  CHECK(back.upper == q.upper);
  CHECK(back.field() == f);
}

TEST_CASE("equivariant form round-trip re-validates everything") {
  auto group = PermGroup::make(2, {{1, 0}});
  Field f = Field::make(1);
  auto cat = std::make_shared<const Catalog>(simple_catalog(group, f));
  // R+(tau) data
  Mat flip = Mat::from_rows(f, {{1, 1}, {0, 1}}, 2);
  Mat u = Mat::from_rows(f, {{0, 1}, {0, 1}}, 2);
  EquivForm x = eq_make(Rep{group, f, 2, {flip}}, QuadForm(u), cat);
  Json j = equivform_to_json(x, "Rtau:0:+");
  CHECK(j["label"] == "Rtau:0:+");
  EquivForm back = equivform_from_json(j);
  CHECK(back.dim() == 2);
  CHECK(back.form.upper == x.form.upper);
  CHECK(back.rep.mats[0] == x.rep.mats[0]);
  CHECK(back.catalog->s == 1);
  // a tampered, non-invariant form fails with a witness
  Json bad = j;
  bad["upper"][1][1] = 0;  // hyperbolic form, not flip-invariant
  CHECK_THROWS_AS(equivform_from_json(bad), InvalidFormError);
  // a singular matrix fails representation validation
  bad = j;
  bad["rep_mats"][0]["entries"][0] = Json::array({0, 0});
  CHECK_THROWS_AS(equivform_from_json(bad), ParseError);
}

TEST_CASE("reports serialize with the documented keys") {
  auto group = PermGroup::make(2, {{1, 0}});
  Field f = Field::make(1);
  GroupWittDescription desc = describe(group, f);
  TheoremReport rep = verify_theorem(desc, 3);
  Json j = report_to_json(rep, desc);
  CHECK(j["s"] == 1);
  CHECK(j["t"] == 1);
  CHECK(j["rank"] == 2);
  CHECK(j["pass"] == true);
  CHECK(j["generators"].size() == 2);
  CHECK(j["checks"].size() == 3);
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("pass"));
    CHECK(c.contains("ms"));
  }
  Json cj = coords_to_json(WittCoords{{1, 0}, 1, {0, 1}});
  CHECK(cj["c0"] == Json::array({1, 0}));
  CHECK(cj["a"] == 1);
  CHECK(cj["d"] == Json::array({0, 1}));
  Json cat = catalog_to_json(*desc.catalog);
  CHECK(cat["s"] == 1);
  CHECK(cat["simples"][0]["type"] == "trivial");
}
