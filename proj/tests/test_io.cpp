#include <doctest.h>

#include "palw/errors.hpp"
#include "palw/io.hpp"

using namespace palw;

TEST_CASE("group specs round trip") {
  const char* texts[] = {
      R"({"kind":"cyclic","n":4})",
      R"({"kind":"dihedral","n":5})",
      R"({"kind":"sym3_fink"})",
      R"({"kind":"abelian","moduli":[2,2]})",
      R"({"kind":"direct_product","factors":[{"kind":"cyclic","n":4},{"kind":"cyclic","n":4}]})",
      R"({"kind":"nilprod","factors":[{"moduli":[2]},{"moduli":[3]}]})",
      R"({"generators":[{"element":1,"label":"a"}],"kind":"table","table":[[0,1],[1,0]]})",
  };
  for (const char* t : texts) {
    json j = json::parse(t);
    GroupSpec spec = parse_group_spec(j);
    CHECK(to_json(spec) == j);
    CHECK(parse_group_spec(to_json(spec)) == spec);
    CHECK(to_json(spec).dump() == json::parse(t).dump());
  }
}

TEST_CASE("building groups from specs") {
  CHECK(build_group(parse_group_spec(json::parse(R"({"kind":"cyclic","n":7})"))).order() == 7);
  FiniteGroup d = build_group(parse_group_spec(
      json::parse(R"({"kind":"direct_product","factors":[{"kind":"cyclic","n":2},{"kind":"dihedral","n":3}]})")));
  CHECK(d.order() == 12);
  FiniteGroup n = build_group(
      parse_group_spec(json::parse(R"({"kind":"nilprod","factors":[{"moduli":[2]},{"moduli":[2]}]})")));
  CHECK(find_isomorphism(n, dihedral(4)).has_value());

  GroupLimits small{.max_order = 8, .verify_cap = 512};
  CHECK_THROWS_AS(build_group(parse_group_spec(json::parse(R"({"kind":"cyclic","n":9})")), small),
                  CapExceeded);
}

TEST_CASE("malformed specs are input errors") {
  const char* bad[] = {
      R"([1,2])",
      R"({"n":3})",
      R"({"kind":"klein"})",
      R"({"kind":"cyclic"})",
      R"({"kind":"cyclic","n":0})",
      R"({"kind":"cyclic","n":"four"})",
      R"({"kind":"direct_product","factors":[]})",
      R"({"kind":"nilprod","factors":[{"moduli":[]}]})",
  };
  for (const char* t : bad) CHECK_THROWS_AS(parse_group_spec(json::parse(t)), InputError);
  CHECK_THROWS_AS(build_group(parse_group_spec(json::parse(
                      R"({"kind":"table","table":[[0,1],[1]],"generators":[{"label":"a","element":1}]})"))),
                  InputError);
}

TEST_CASE("abelian lists accept both layouts") {
  auto a = parse_abelian_list(json::parse(R"([{"moduli":[2]},{"moduli":[2,2]}])"));
  auto b = parse_abelian_list(json::parse(R"({"factors":[{"moduli":[2]},{"moduli":[2,2]}]})"));
  CHECK(a == b);
  CHECK(a[1].order() == 4);
  CHECK(to_json(a[1]) == json::parse(R"({"moduli":[2,2]})"));
  CHECK_THROWS_AS(parse_abelian_list(json::parse("[]")), InputError);
  CHECK_THROWS_AS(parse_abelian_list(json::parse(R"([{"moduli":[0]}])")), InputError);
}

TEST_CASE("report payloads") {
  FiniteGroup z4z4 = direct_product(cyclic(4), cyclic(4));
  json w = to_json(palindromic_width(z4z4, Notion::word), z4z4, true);
  CHECK(w["width"] == 2);
  CHECK(w["order"] == 16);
  CHECK(w["lengths"].size() == 16);
  CHECK(w["lengths"][0]["length"] == 0);
  CHECK_FALSE(to_json(palindromic_width(z4z4, Notion::group), z4z4, false).contains("lengths"));

  WreathGroup g(2, sym3_fink());
  WreathElement q60 = q_sequence(g, 60);
  json qh = to_json(g, certify_cw_lower_bound(g, q60), delta(q60));
  CHECK(qh["delta"] == 360);
  CHECK(qh["certificate"]["commutator_length_at_least"] == 4);
  CHECK(to_json(g, std::nullopt, 6)["certificate"].is_null());

  json dec = to_json(g, decompose(g.parse("[[x,y]; 1; 1; 1; 1; 1] 1")));
  CHECK(dec["factor_count"] == 1);
  CHECK(dec["factors"][0]["palindrome"] == true);
  CHECK(dec["verified"]["product_matches"] == true);

  json b = to_json(width_bounds({1, 1}, {1, 1}));
  CHECK(b["upper"] == 8);
  CHECK(b["exact"].is_null());
}

TEST_CASE("digest is FNV-1a") {
  CHECK(digest("") == "cbf29ce484222325");
  CHECK(digest("a") == "af63dc4c8601ec8c");
  CHECK(digest("foobar") == "85944171f73967e8");
}
