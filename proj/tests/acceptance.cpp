// Acceptance suite: every check is an exact combinatorial equality, one
// pass/fail line per criterion. Exit status is the number of failed criteria.

#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "digitop/corpus.hpp"
#include "digitop/curves.hpp"
#include "digitop/group.hpp"
#include "test_util.hpp"

using namespace digitop;

namespace {

struct Criterion {
  std::string name;
  std::function<void(std::ostringstream&)> run;  // throws or appends to the failure log
};

#define REQUIRE_EQ(a, b)                                                                     \
  do {                                                                                       \
    if (!((a) == (b))) fail << "  mismatch at " << __LINE__ << ": " #a " vs " #b << "\n";    \
  } while (0)
#define REQUIRE_TRUE(cond)                                                                   \
  do {                                                                                       \
    if (!(cond)) fail << "  failed at " << __LINE__ << ": " #cond << "\n";                   \
  } while (0)

using K = std::vector<std::int64_t>;

void criterion_adjacency_table(std::ostringstream& fail) {
  const std::vector<std::array<std::int64_t, 3>> triples = {
      {1, 1, 2},   {2, 1, 4},   {2, 2, 8},   {3, 1, 6},   {3, 2, 18},  {3, 3, 26},  {4, 1, 8},
      {4, 2, 32},  {4, 3, 64},  {4, 4, 80},  {5, 1, 10},  {5, 2, 50},  {5, 3, 130}, {5, 4, 210},
      {5, 5, 242}, {6, 1, 12},  {6, 2, 72},  {6, 3, 232}, {6, 4, 472}, {6, 5, 664}, {6, 6, 728}};
  REQUIRE_EQ(triples.size(), std::size_t{21});
  for (const auto& [n, t, k] : triples) REQUIRE_EQ(k_value(static_cast<int>(t), static_cast<int>(n)), k);
}

void criterion_msc18_square(std::ostringstream& fail) {
  ProductSpace prod = make_product({msc18().to_image(), msc18().to_image()});
  for (ProductKind kind : {ProductKind::normal, ProductKind::c_compatible}) {
    ExistenceReport rep = adjacency_existence(prod, kind);
    REQUIRE_TRUE(rep.admissible_t.empty());
    REQUIRE_EQ(rep.witnesses.size(), std::size_t{6});
  }
  // (x_2, x_2) refutes both neighborhood characterizations at every t.
  const Point x2x2{1, -1, 1, 1, -1, 1};
  for (int t = 1; t <= 6; ++t) {
    REQUIRE_TRUE(!neighborhood_form_holds_at(prod, ProductKind::normal, 0, t, x2x2));
    REQUIRE_TRUE(!neighborhood_form_holds_at(prod, ProductKind::c_compatible, 0, t, x2x2));
  }
}

void criterion_c_compatible_pairs(std::ostringstream& fail) {
  ExistenceReport a =
      adjacency_existence(make_product({sc8_2_4().to_image(), sc8_2_4().to_image()}), ProductKind::c_compatible);
  REQUIRE_EQ(a.admissible_k, (K{32, 64}));
  CStarResult ca = c_star(sc8_2_4().to_image(), sc8_2_4().to_image());
  REQUIRE_TRUE(ca.adjacency.has_value());
  REQUIRE_EQ(ca.adjacency->k, 32);

  ExistenceReport b =
      adjacency_existence(make_product({sc8_2_4().to_image(), sc26_3_4().to_image()}), ProductKind::c_compatible);
  REQUIRE_EQ(b.admissible_k, (K{130, 210}));
  CStarResult cb = c_star(sc8_2_4().to_image(), sc26_3_4().to_image());
  REQUIRE_TRUE(cb.adjacency.has_value());
  REQUIRE_EQ(cb.adjacency->k, 130);
}

void criterion_c_star_neighborhoods(std::ostringstream& fail) {
  const std::vector<std::pair<DigitalImage, DigitalImage>> pairs = {
      {sc8_2_4().to_image(), sc8_2_4().to_image()},   {sc8_2_4().to_image(), sc26_3_4().to_image()},
      {sc4_2_4().to_image(), sc4_2_4().to_image()},   {sc4_2_4().to_image(), sc4_2_8().to_image()},
      {sc6_3_6().to_image(), sc4_2_4().to_image()},   {sc4_2_8().to_image(), sc4_2_8().to_image()},
  };
  int with_c = 0;
  for (const auto& [X1, X2] : pairs) {
    CStarResult cs = c_star(X1, X2);
    if (!cs.adjacency) continue;
    ++with_c;
    ProductSpace prod = make_product({X1, X2});
    GStar gs = g_star(X1, X2);
    for (const Point& p : prod.points) {
      Neighborhood via_c = lattice_neighborhood(p, cs.adjacency->t, prod.points);
      Neighborhood via_g = relation_neighborhood(gs.relation, p);
      Neighborhood via_k = lattice_neighborhood(p, gs.k_star.t, prod.points);
      REQUIRE_TRUE(via_c.closed == via_g.closed && via_g.closed == via_k.closed);
    }
  }
  REQUIRE_EQ(with_c, 6);  // every pair in this roster admits C_{k*}
}

void criterion_section4_counterexample(std::ostringstream& fail) {
  DigitalImage X1({{0, 0}, {1, 0}, {1, 1}}, 1);
  DigitalImage X2({{0, 0}, {1, 1}}, 2);
  ProductSpace prod = make_product({X1, X2});
  const Point p{0, 0, 0, 0};

  Neighborhood u1 = relation_neighborhood(ap_relation(prod, 1), p);
  REQUIRE_EQ(u1.proper.size(), std::size_t{2});
  Neighborhood u2 = relation_neighborhood(ap_relation(prod, 2), p);
  REQUIRE_EQ(u2.proper.size(), std::size_t{3});
  REQUIRE_TRUE(!std::binary_search(u2.proper.begin(), u2.proper.end(), Point{1, 1, 0, 0}));

  const std::vector<std::int64_t> ks = {8, 32, 64, 80};
  const std::vector<std::size_t> sizes = {1, 3, 4, 5};
  for (int t = 1; t <= 4; ++t) {
    REQUIRE_EQ(k_value(t, 4), ks[static_cast<std::size_t>(t - 1)]);
    REQUIRE_EQ(lattice_neighborhood(p, t, prod.points).proper.size(), sizes[static_cast<std::size_t>(t - 1)]);
  }
  REQUIRE_TRUE(!adjacency_existence(prod, ProductKind::ap, 1).exists());
  REQUIRE_TRUE(!adjacency_existence(prod, ProductKind::ap, 2).exists());
}

void criterion_six_curve_products(std::ostringstream& fail) {
  DigitalImage X = sc18_3_6().to_image();
  ProductSpace sq = make_product({X, X});
  ExistenceReport ap1 = adjacency_existence(sq, ProductKind::ap, 1);
  REQUIRE_EQ(ap1.admissible_k, (K{72, 232}));
  REQUIRE_EQ(*ap1.star_k, 72);
  ExistenceReport ap2 = adjacency_existence(sq, ProductKind::ap, 2);
  REQUIRE_EQ(ap2.admissible_k, (K{472, 664, 728}));
  REQUIRE_EQ(*ap2.star_k, 472);

  ProductSpace cube = make_product({X, X, X});
  REQUIRE_EQ(*adjacency_existence(cube, ProductKind::ap, 1).star_k, k_value(2, 9));
  REQUIRE_EQ(*adjacency_existence(cube, ProductKind::ap, 2).star_k, k_value(4, 9));
  ExistenceReport ap3 = adjacency_existence(cube, ProductKind::ap, 3);
  REQUIRE_EQ(ap3.admissible_k, (K{k_value(6, 9), k_value(7, 9), k_value(8, 9), k_value(9, 9)}));
  REQUIRE_EQ(*ap3.star_k, k_value(6, 9));
}

void criterion_triple_products(std::ostringstream& fail) {
  DigitalImage S4 = sc4_2_4().to_image();
  DigitalImage S48 = sc4_2_8().to_image();
  DigitalImage S8 = sc8_2_4().to_image();
  DigitalImage S86 = sc8_2_6().to_image();
  DigitalImage S6 = sc6_3_6().to_image();

  // City-block triple: only the 2(n1+n2+n3)-adjacency realizes u = 1.
  ProductSpace city = make_product({S4, S48, S4});
  REQUIRE_EQ(adjacency_existence(city, ProductKind::ap, 1).admissible_k, (K{12}));
  REQUIRE_TRUE(!adjacency_existence(city, ProductKind::ap, 2).exists());
  REQUIRE_TRUE(!adjacency_existence(city, ProductKind::ap, 3).exists());

  ProductSpace mixed = make_product({S8, S86, S8});
  REQUIRE_EQ(*adjacency_existence(mixed, ProductKind::ap, 2).star_k, k_value(4, 6));
  REQUIRE_EQ(adjacency_existence(mixed, ProductKind::ap, 3).admissible_k, (K{728}));

  ProductSpace broken = make_product({S48, S86, S48});
  for (int u = 1; u <= 3; ++u) REQUIRE_TRUE(!adjacency_existence(broken, ProductKind::ap, u).exists());

  ProductSpace seven = make_product({S86, S86, S6});
  for (int u = 1; u <= 3; ++u) REQUIRE_TRUE(!adjacency_existence(seven, ProductKind::ap, u).exists());

  // All-diagonal triple and square: every star value is realized.
  ProductSpace diag = make_product({S8, S8, S8});
  REQUIRE_EQ(*adjacency_existence(diag, ProductKind::ap, 1).star_k, k_value(2, 6));
  REQUIRE_EQ(*adjacency_existence(diag, ProductKind::ap, 2).star_k, k_value(4, 6));
  REQUIRE_EQ(*adjacency_existence(diag, ProductKind::ap, 3).star_k, k_value(6, 6));
  ProductSpace square = make_product({S8, S8});
  REQUIRE_EQ(*adjacency_existence(square, ProductKind::ap, 1).star_k, 32);
  REQUIRE_EQ(*adjacency_existence(square, ProductKind::ap, 2).star_k, 80);
}

void criterion_binary_equivalences(std::ostringstream& fail) {
  std::mt19937 rng(120601);
  for (int iter = 0; iter < 100; ++iter) {
    ProductSpace prod = make_product({testutil::random_image(rng), testutil::random_image(rng)});
    REQUIRE_TRUE(adjacency_existence(prod, ProductKind::ap, 1).admissible_t ==
                 adjacency_existence(prod, ProductKind::c_compatible).admissible_t);
    REQUIRE_TRUE(adjacency_existence(prod, ProductKind::ap, 2).admissible_t ==
                 adjacency_existence(prod, ProductKind::normal).admissible_t);
  }
  ProductSpace prod = make_product({sc8_2_6().to_image(), sc18_3_6().to_image()});
  ExistenceReport nrm = adjacency_existence(prod, ProductKind::normal);
  REQUIRE_EQ(nrm.admissible_k, (K{210, 242}));
  ExistenceReport ap2 = adjacency_existence(prod, ProductKind::ap, 2);
  REQUIRE_EQ(*ap2.star_k, 210);
  REQUIRE_TRUE(*ap2.star_k != 242);
  std::int64_t full = 1;
  for (int i = 0; i < 5; ++i) full *= 3;
  REQUIRE_EQ(full - 1, 242);
}

void criterion_city_block_products(std::ostringstream& fail) {
  std::mt19937 rng(120602);
  for (int iter = 0; iter < 50; ++iter) {
    DigitalImage A = testutil::random_image(rng, 6, 1);
    DigitalImage B = testutil::random_image(rng, 6, 1);
    CStarResult cs = c_star(A, B);
    REQUIRE_TRUE(cs.adjacency.has_value());
    if (cs.adjacency) REQUIRE_EQ(cs.adjacency->k, 2 * (A.dim() + B.dim()));
  }
  for (const auto& dims : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 2}, {1, 3}}) {
    std::vector<DigitalImage> ws;
    for (int n : dims) ws.push_back(lattice_window(n, 1, 3));
    REQUIRE_TRUE(pairwise_iff_holds(make_product(ws), ProductKind::ap, 1, 1));
  }
}

void criterion_group_verdicts(std::ostringstream& fail) {
  REQUIRE_TRUE(check_dt_group(msc18().to_image(), GroupTable::cyclic(msc18())).holds);

  GroupVerdict no_ap1 = check_ap1_group(msc18().to_image(), GroupTable::cyclic(msc18()), false);
  REQUIRE_TRUE(!no_ap1.holds);
  REQUIRE_EQ(no_ap1.adjacency_used, std::string("no AP_1 adjacency"));

  REQUIRE_TRUE(check_ap1_group(sc8_2_4().to_image(), GroupTable::cyclic(sc8_2_4()), true).holds);
  REQUIRE_TRUE(check_ap1_group(sc4_2_4().to_image(), GroupTable::cyclic(sc4_2_4()), true).holds);

  REQUIRE_TRUE(window_group_check(2, 1, 3, 1).holds);
  REQUIRE_TRUE(window_group_check(2, 2, 3, 1).holds);

  REQUIRE_TRUE(!window_group_check(2, 1, 2, 2).holds);
  WindowProbe z2 = window_probe(2, 1, 2, 2);
  REQUIRE_TRUE(relation_violates(z2.relation, z2.addition, Point{0, 0, 0, 0}, Point{1, 0, 1, 0}));
  REQUIRE_EQ(z2.addition.value_at(Point{0, 0, 0, 0}), (Point{0, 0}));
  REQUIRE_EQ(z2.addition.value_at(Point{1, 0, 1, 0}), (Point{2, 0}));

  REQUIRE_TRUE(!window_group_check(1, 1, 2, 2).holds);
  WindowProbe z1 = window_probe(1, 1, 2, 2);
  REQUIRE_TRUE(relation_violates(z1.relation, z1.addition, Point{0, 0}, Point{1, 1}));
  REQUIRE_EQ(z1.addition.value_at(Point{0, 0}), (Point{0}));
  REQUIRE_EQ(z1.addition.value_at(Point{1, 1}), (Point{2}));
}

void criterion_product_group(std::ostringstream& fail) {
  GroupVerdict v = product_group_probe(sc4_2_4().to_image(), GroupTable::cyclic(sc4_2_4()),
                                       sc8_2_4().to_image(), GroupTable::cyclic(sc8_2_4()));
  REQUIRE_TRUE(!v.holds);
  REQUIRE_EQ(v.adjacency_used, std::string("no AP_1 adjacency"));
  ProductSpace square =
      make_product({sc4_2_4().to_image(), sc8_2_4().to_image(), sc4_2_4().to_image(), sc8_2_4().to_image()});
  REQUIRE_TRUE(!adjacency_existence(square, ProductKind::ap, 1).exists());
}

void criterion_oracle_equivalence(std::ostringstream& fail) {
  // Corpus products, both existence routes.
  std::vector<ProductSpace> corpus = {
      make_product({msc18().to_image(), msc18().to_image()}),
      make_product({sc8_2_4().to_image(), sc8_2_4().to_image()}),
      make_product({sc8_2_4().to_image(), sc26_3_4().to_image()}),
      make_product({sc4_2_8().to_image(), sc8_2_6().to_image()}),
      make_product({sc18_3_6().to_image(), sc18_3_6().to_image()}),
      make_product({sc8_2_6().to_image(), sc18_3_6().to_image()}),
      make_product({sc4_2_4().to_image(), sc4_2_4().to_image()}),
      make_product({sc8_2_4().to_image(), sc8_2_6().to_image(), sc8_2_4().to_image()}),
      make_product({sc4_2_4().to_image(), sc4_2_8().to_image(), sc4_2_4().to_image()}),
      make_product({sc8_2_6().to_image(), sc8_2_6().to_image(), sc6_3_6().to_image()}),
      make_product({sc18_3_6().to_image(), sc18_3_6().to_image(), sc18_3_6().to_image()}),
  };
  for (const ProductSpace& prod : corpus) {
    if (prod.arity() == 2) {
      for (ProductKind kind : {ProductKind::normal, ProductKind::c_compatible}) {
        REQUIRE_TRUE(adjacency_existence(prod, kind).admissible_t ==
                     existence_by_neighborhood(prod, kind).admissible_t);
      }
    }
    for (int u = 1; u <= prod.arity(); ++u) {
      REQUIRE_TRUE(adjacency_existence(prod, ProductKind::ap, u).admissible_t ==
                   existence_by_neighborhood(prod, ProductKind::ap, u).admissible_t);
    }
  }
  std::mt19937 rng(120603);
  for (int iter = 0; iter < 100; ++iter) {
    ProductSpace prod = make_product({testutil::random_image(rng), testutil::random_image(rng)});
    for (ProductKind kind : {ProductKind::normal, ProductKind::c_compatible}) {
      REQUIRE_TRUE(adjacency_existence(prod, kind).admissible_t ==
                   existence_by_neighborhood(prod, kind).admissible_t);
    }
    for (int u = 1; u <= 2; ++u) {
      REQUIRE_TRUE(adjacency_existence(prod, ProductKind::ap, u).admissible_t ==
                   existence_by_neighborhood(prod, ProductKind::ap, u).admissible_t);
    }
  }

  // Continuity: pair form vs neighborhood form, and the subset-image oracle.
  int maps_checked = 0;
  while (maps_checked < 200) {
    DigitalImage X = testutil::random_image(rng, 8);
    DigitalImage Y = testutil::random_image(rng, 6);
    std::vector<Point> vals;
    for (std::size_t i = 0; i < X.size(); ++i) {
      vals.push_back(Y.points[static_cast<std::size_t>(testutil::bounded(rng, 0, static_cast<int>(Y.size()) - 1))]);
    }
    DigitalMap f(X.points, std::move(vals), Y.adj);
    const bool pair_form = is_continuous_lattice(f, X.adj).continuous;
    REQUIRE_TRUE(pair_form == is_continuous_lattice_neighborhood_form(f, X.adj).continuous);
    REQUIRE_TRUE(pair_form == connected_image_check(f, X.adj, static_cast<int>(X.size())));
    ++maps_checked;
  }
}

void criterion_corpus_replay(std::ostringstream& fail) {
  const std::filesystem::path root = std::filesystem::path(DIGITOP_DATA_DIR) / "corpus";
  CorpusSummary one = run_corpus(root, "", 1);
  REQUIRE_EQ(one.failed, 0);
  REQUIRE_TRUE(one.total >= 80);
  CorpusSummary again = run_corpus(root, "", 1);
  CorpusSummary four = run_corpus(root, "", 4);
  REQUIRE_TRUE(one.text() == again.text());
  REQUIRE_TRUE(one.text() == four.text());
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"adjacency table reproduces all 21 (n,t,k) triples", criterion_adjacency_table},
      {"MSC_18^2 admits neither normal nor c-compatible adjacency; (x2,x2) refutes both forms",
       criterion_msc18_square},
      {"c-compatible sets {32,64}/C_32 and {130,210}/C_130", criterion_c_compatible_pairs},
      {"N_C = N_G = N_{k*} on every corpus product with C_{k*}", criterion_c_star_neighborhoods},
      {"two-factor counterexample: sizes 2/3, exclusion, neighborhood sizes 1/3/4/5, no AP_u(4,8)",
       criterion_section4_counterexample},
      {"six-point 18-curve products: AP_u sets and stars for the square and cube",
       criterion_six_curve_products},
      {"triple products: existence and non-existence facts", criterion_triple_products},
      {"ap(1)=c-compatible and ap(2)=normal on 100 random products; normal {210,242} with star 210 != 242 = 3^5-1",
       criterion_binary_equivalences},
      {"city-block products: C = 2(n1+n2) on 50 random pairs; window iff at t=1",
       criterion_city_block_products},
      {"group verdicts: DT/AP_1*/window certifications and refutation witnesses",
       criterion_group_verdicts},
      {"direct-product group refuted: no AP_1(4,8,4,8) adjacency", criterion_product_group},
      {"oracle equivalence: existence routes, continuity forms, subset-image check",
       criterion_oracle_equivalence},
      {"corpus replays with zero mismatches, identically across runs and thread counts",
       criterion_corpus_replay},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream fail;
    std::string error;
    try {
      criteria[i].run(fail);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = fail.str().empty() && error.empty();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": " << criteria[i].name << "\n";
    if (!ok) {
      ++failed;
      if (!error.empty()) std::cout << "  exception: " << error << "\n";
      std::cout << fail.str();
    }
  }
  std::cout << "acceptance: " << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed;
}
