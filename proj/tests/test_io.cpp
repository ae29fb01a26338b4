#include <catch2/catch_amalgamated.hpp>

#include "digitop/curves.hpp"
#include "digitop/json_io.hpp"
#include "test_util.hpp"

using namespace digitop;

TEST_CASE("image files use the fixed field names") {
  json j = image_to_json(sc8_2_4().to_image());
  CHECK(j.contains("dim"));
  CHECK(j.contains("t"));
  CHECK(j.contains("points"));
  CHECK(j["dim"] == 2);
  CHECK(j["t"] == 2);

  json cj = curve_to_json(msc18());
  CHECK(cj["ordered"] == true);
  CHECK(cj["points"][0] == json::array({0, 0, 0}));  // file order is circular order
}

TEST_CASE("image round-trip preserves the image") {
  std::mt19937 rng(11501);
  for (int iter = 0; iter < 50; ++iter) {
    DigitalImage X = testutil::random_image(rng);
    ImageFile back = parse_image_json(image_to_json(X));
    CHECK(back.image.points == X.points);
    CHECK(back.image.adj == X.adj);
    CHECK_FALSE(back.ordered);
  }
  for (const SimpleClosedCurve& c : curve_library()) {
    ImageFile back = parse_image_json(curve_to_json(c));
    REQUIRE(back.curve.has_value());
    CHECK(back.curve->seq == c.seq);
  }
}

TEST_CASE("ordered files must really be curves") {
  json j = {{"dim", 2}, {"t", 1}, {"points", {{0, 0}, {1, 0}, {5, 5}, {0, 1}}}, {"ordered", true}};
  CHECK_THROWS_AS(parse_image_json(j), std::invalid_argument);
  json missing = {{"dim", 2}, {"points", json::array()}};
  CHECK_THROWS_AS(parse_image_json(missing), std::invalid_argument);
}

TEST_CASE("map files parse and enforce totality") {
  json dom = image_to_json(DigitalImage({{0, 0}, {1, 0}}, 1));
  json cod = image_to_json(DigitalImage({{0, 0}, {0, 1}}, 1));
  json good = {{"domain_image", dom},
               {"codomain_image", cod},
               {"pairs", {{{0, 0}, {0, 0}}, {{1, 0}, {0, 1}}}}};
  MapFile f = parse_map_json(good);
  CHECK(f.map.value_at(Point{1, 0}) == Point{0, 1});

  json partial = good;
  partial["pairs"] = {{{0, 0}, {0, 0}}};
  CHECK_THROWS_AS(parse_map_json(partial), std::invalid_argument);

  json outside = good;
  outside["pairs"] = {{{0, 0}, {0, 0}}, {{1, 0}, {7, 7}}};
  CHECK_THROWS_AS(parse_map_json(outside), std::invalid_argument);
}

TEST_CASE("group files: cyclic shorthand and explicit tables") {
  ImageFile curve = parse_image_json(curve_to_json(sc8_2_4()));
  GroupTable cyc = parse_group_json(json{{"cyclic", true}}, curve);
  CHECK(verify_group(cyc).valid);

  json table = {
      {"carrier", {{0, 0}, {1, -1}, {2, 0}, {1, 1}}},
      {"table", {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}},
  };
  GroupTable g = parse_group_json(table, curve);
  CHECK(verify_group(g).valid);
  CHECK(g.identity == 0);
  CHECK(g.inverse == std::vector<int>{0, 3, 2, 1});

  ImageFile plain = parse_image_json(image_to_json(sc8_2_4().to_image()));
  CHECK_THROWS_AS(parse_group_json(json{{"cyclic", true}}, plain), std::invalid_argument);
}

TEST_CASE("existence reports serialize with the documented fields") {
  DigitalImage S8 = sc8_2_4().to_image();
  ExistenceReport rep = adjacency_existence(make_product({S8, S8}), ProductKind::ap, 1);
  json j = existence_report_to_json(rep);
  CHECK(j["kind"] == "ap");
  CHECK(j["u"] == 1);
  CHECK(j["admissible_t"] == json::array({2, 3}));
  CHECK(j["admissible_k"] == json::array({32, 64}));
  CHECK(j["star_k"] == 32);
  CHECK(j["witnesses"].contains("1"));
  CHECK(j["witnesses"].contains("4"));
  CHECK_FALSE(j["witnesses"].contains("2"));

  ExistenceReport empty = adjacency_existence(make_product({msc18().to_image(), msc18().to_image()}),
                                              ProductKind::c_compatible);
  json je = existence_report_to_json(empty);
  CHECK(je["star_k"].is_null());
  CHECK(je["u"].is_null());
  CHECK(je["admissible_k"].empty());
}

TEST_CASE("group verdicts serialize with witness coordinates") {
  GroupVerdict v = window_group_check(2, 1, 2, 2);
  json j = group_verdict_to_json(v);
  CHECK(j["holds"] == false);
  CHECK(j["multiplication"]["continuous"] == false);
  CHECK(j["multiplication"]["witness"].contains("p"));
  CHECK(j["multiplication"]["witness"].contains("fq"));
  CHECK(j["inverse"]["continuous"] == true);
}
