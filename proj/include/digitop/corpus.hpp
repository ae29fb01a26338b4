#pragma once

#include <algorithm>
#include <filesystem>
#include <future>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "digitop/json_io.hpp"

// Machine-readable corpus: a directory with images/ (fixture point sets),
// maps/ (fixture map tables) and facts/ (JSON fact files, one object or an
// array of objects per file). Every fact names a check type, its inputs by
// fixture name, and a typed expectation; run_corpus replays them all.

namespace digitop {

struct CorpusFact {
  std::string id;
  std::string check;
  std::string provenance;
  json body;
};

struct FactOutcome {
  std::string id;
  std::string provenance;
  bool pass = false;
  std::string detail;
};

struct CorpusSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  std::vector<FactOutcome> results;  // sorted by fact id

  std::string text() const {
    std::ostringstream out;
    out << "corpus: " << passed << "/" << total << " facts passed\n";
    for (const FactOutcome& r : results) {
      if (r.pass) {
        out << "[PASS] " << r.id << "\n";
      } else {
        out << "[FAIL] " << r.id << ": " << r.detail << "\n";
      }
    }
    return out.str();
  }

  json to_json() const {
    json facts = json::array();
    for (const FactOutcome& r : results) {
      facts.push_back(json{{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}, {"provenance", r.provenance}});
    }
    return json{{"total", total}, {"passed", passed}, {"failed", failed}, {"facts", facts}};
  }
};

namespace corpus_detail {

struct Registry {
  std::map<std::string, ImageFile> images;
  std::map<std::string, MapFile> maps;

  const ImageFile& image(const std::string& name) const {
    auto it = images.find(name);
    if (it == images.end()) throw std::invalid_argument("unknown image fixture: " + name);
    return it->second;
  }
  const MapFile& map(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end()) throw std::invalid_argument("unknown map fixture: " + name);
    return it->second;
  }
};

inline std::vector<DigitalImage> resolve_factors(const json& body, const Registry& reg) {
  std::vector<DigitalImage> out;
  for (const auto& name : body.at("factors")) out.push_back(reg.image(name.get<std::string>()).image);
  return out;
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s + "]";
}

inline ProductKind parse_kind(const std::string& s) {
  if (s == "normal") return ProductKind::normal;
  if (s == "c-compatible") return ProductKind::c_compatible;
  if (s == "ap") return ProductKind::ap;
  throw std::invalid_argument("unknown product kind: " + s);
}

inline std::vector<Point> points_from_json(const json& arr) {
  std::vector<Point> out;
  for (const auto& pj : arr) out.push_back(point_from_json(pj));
  std::sort(out.begin(), out.end());
  return out;
}

// --- individual checks ------------------------------------------------------

inline FactOutcome check_k_table(const CorpusFact& fact) {
  for (const auto& triple : fact.body.at("expect").at("triples")) {
    const int n = triple[0].get<int>();
    const int t = triple[1].get<int>();
    const std::int64_t k = triple[2].get<std::int64_t>();
    if (k_value(t, n) != k) {
      return {fact.id, fact.provenance, false,
              "k(" + std::to_string(t) + "," + std::to_string(n) + ") = " + std::to_string(k_value(t, n)) +
                  ", expected " + std::to_string(k)};
    }
  }
  return {fact.id, fact.provenance, true, ""};
}

inline FactOutcome check_curve_valid(const CorpusFact& fact, const Registry& reg) {
  const ImageFile& f = reg.image(fact.body.at("image").get<std::string>());
  if (!f.curve) return {fact.id, fact.provenance, false, "fixture is not an ordered curve"};
  const auto& expect = fact.body.at("expect");
  if (expect.contains("l") && f.curve->length() != expect.at("l").get<std::size_t>()) {
    return {fact.id, fact.provenance, false, "length " + std::to_string(f.curve->length())};
  }
  if (expect.contains("k") && f.curve->adj.k != expect.at("k").get<std::int64_t>()) {
    return {fact.id, fact.provenance, false, "k " + std::to_string(f.curve->adj.k)};
  }
  if (!is_connected(f.image)) return {fact.id, fact.provenance, false, "curve not connected"};
  return {fact.id, fact.provenance, true, ""};
}

inline FactOutcome check_existence(const CorpusFact& fact, const Registry& reg) {
  ProductSpace prod = make_product(resolve_factors(fact.body, reg));
  ProductKind kind = parse_kind(fact.body.at("kind").get<std::string>());
  const int u = fact.body.value("u", 0);
  ExistenceReport rep = adjacency_existence(prod, kind, u);
  const auto& expect = fact.body.at("expect");
  if (expect.contains("admissible_k")) {
    std::vector<std::int64_t> want = expect.at("admissible_k").get<std::vector<std::int64_t>>();
    if (rep.admissible_k != want) {
      return {fact.id, fact.provenance, false,
              "admissible_k " + join(rep.admissible_k) + ", expected " + join(want)};
    }
  }
  if (expect.contains("star_k")) {
    const auto& want = expect.at("star_k");
    if (want.is_null()) {
      if (rep.star_k) return {fact.id, fact.provenance, false, "unexpected star_k " + std::to_string(*rep.star_k)};
    } else {
      if (!rep.star_k || *rep.star_k != want.get<std::int64_t>()) {
        return {fact.id, fact.provenance, false,
                "star_k " + (rep.star_k ? std::to_string(*rep.star_k) : "absent") + ", expected " +
                    std::to_string(want.get<std::int64_t>())};
      }
    }
  }
  return {fact.id, fact.provenance, true, ""};
}

inline FactOutcome check_ap_relation_at(const CorpusFact& fact, const Registry& reg) {
  ProductSpace prod = make_product(resolve_factors(fact.body, reg));
  PairRelation rel = ap_relation(prod, fact.body.at("u").get<int>());
  Point at = point_from_json(fact.body.at("at"));
  Neighborhood nb = relation_neighborhood(rel, at);
  const auto& expect = fact.body.at("expect");
  if (expect.contains("size") && nb.proper.size() != expect.at("size").get<std::size_t>()) {
    return {fact.id, fact.provenance, false, "relation neighborhood size " + std::to_string(nb.proper.size())};
  }
  if (expect.contains("neighbors")) {
    std::vector<Point> want = points_from_json(expect.at("neighbors"));
    if (nb.proper != want) return {fact.id, fact.provenance, false, "relation neighborhood set mismatch"};
  }
  if (expect.contains("not_neighbors")) {
    for (const auto& pj : expect.at("not_neighbors")) {
      Point q = point_from_json(pj);
      if (std::binary_search(nb.proper.begin(), nb.proper.end(), q)) {
        return {fact.id, fact.provenance, false, to_string(q) + " unexpectedly related"};
      }
    }
  }
  return {fact.id, fact.provenance, true, ""};
}

inline FactOutcome check_product_neighborhood_sizes(const CorpusFact& fact, const Registry& reg) {
  ProductSpace prod = make_product(resolve_factors(fact.body, reg));
  Point at = point_from_json(fact.body.at("at"));
  for (const auto& row : fact.body.at("expect").at("sizes")) {
    const int t = row.at("t").get<int>();
    Neighborhood nb = lattice_neighborhood(at, t, prod.points);
    if (row.contains("k") && k_value(t, prod.total_dim()) != row.at("k").get<std::int64_t>()) {
      return {fact.id, fact.provenance, false, "k(t=" + std::to_string(t) + ") mismatch"};
    }
    if (nb.proper.size() != row.at("size").get<std::size_t>()) {
      return {fact.id, fact.provenance, false,
              "t=" + std::to_string(t) + " neighborhood size " + std::to_string(nb.proper.size())};
    }
  }
  return {fact.id, fact.provenance, true, ""};
}

inline FactOutcome check_product_forms_fail_at(const CorpusFact& fact, const Registry& reg) {
  ProductSpace prod = make_product(resolve_factors(fact.body, reg));
  Point at = point_from_json(fact.body.at("at"));
  for (const auto& kj : fact.body.at("kinds")) {
    ProductKind kind = parse_kind(kj.get<std::string>());
    for (int t = 1; t <= prod.total_dim(); ++t) {
      if (neighborhood_form_holds_at(prod, kind, 0, t, at)) {
        return {fact.id, fact.provenance, false,
                kind_name(kind) + " form holds at t=" + std::to_string(t) + ", expected failure"};
      }
    }
  }
  return {fact.id, fact.provenance, true, ""};
}

inline FactOutcome check_g_star(const CorpusFact& fact, const Registry& reg) {
  std::vector<DigitalImage> factors = resolve_factors(fact.body, reg);
  if (factors.size() != 2) return {fact.id, fact.provenance, false, "g_star needs 2 factors"};
  GStar gs = g_star(factors[0], factors[1]);
  const auto& expect = fact.body.at("expect");
  if (expect.contains("k_star") && gs.k_star.k != expect.at("k_star").get<std::int64_t>()) {
    return {fact.id, fact.provenance, false, "k_star " + std::to_string(gs.k_star.k)};
  }
  if (expect.contains("equals_lattice")) {
    bool equal = true;
    for (std::size_t a = 0; a < gs.relation.ground.size() && equal; ++a) {
      for (std::size_t b = a + 1; b < gs.relation.ground.size() && equal; ++b) {
        bool rel = gs.relation.related(static_cast<int>(a), static_cast<int>(b));
        bool lat = lattice_adjacent(gs.relation.ground[a], gs.relation.ground[b], gs.k_star.t);
        equal = (rel == lat);
      }
    }
    if (equal != expect.at("equals_lattice").get<bool>()) {
      return {fact.id, fact.provenance, false, std::string("relation-vs-lattice equality is ") + (equal ? "true" : "false")};
    }
  }
  if (expect.contains("c_exists")) {
    bool exists = c_star(factors[0], factors[1]).adjacency.has_value();
    if (exists != expect.at("c_exists").get<bool>()) {
      return {fact.id, fact.provenance, false, std::string("c_star existence is ") + (exists ? "true" : "false")};
    }
  }
  return {fact.id, fact.provenance, true, ""};
}

inline FactOutcome check_c_star(const CorpusFact& fact, const Registry& reg) {
  std::vector<DigitalImage> factors = resolve_factors(fact.body, reg);
  if (factors.size() != 2) return {fact.id, fact.provenance, false, "c_star needs 2 factors"};
  CStarResult res = c_star(factors[0], factors[1]);
  const auto& want = fact.body.at("expect").at("k");
  if (want.is_null()) {
    if (res.adjacency) return {fact.id, fact.provenance, false, "unexpected C adjacency " + std::to_string(res.adjacency->k)};
  } else if (!res.adjacency || res.adjacency->k != want.get<std::int64_t>()) {
    return {fact.id, fact.provenance, false,
            "c_star " + (res.adjacency ? std::to_string(res.adjacency->k) : "absent")};
  }
  return {fact.id, fact.provenance, true, ""};
}

inline FactOutcome check_c_star_neighborhoods(const CorpusFact& fact, const Registry& reg) {
  std::vector<DigitalImage> factors = resolve_factors(fact.body, reg);
  CStarResult res = c_star(factors[0], factors[1]);
  if (!res.adjacency) return {fact.id, fact.provenance, false, "C_{k*} does not exist"};
  if (fact.body.at("expect").contains("k_star") &&
      res.adjacency->k != fact.body.at("expect").at("k_star").get<std::int64_t>()) {
    return {fact.id, fact.provenance, false, "k_star " + std::to_string(res.adjacency->k)};
  }
  ProductSpace prod = make_product({factors[0], factors[1]});
  GStar gs = g_star(factors[0], factors[1]);
  for (const Point& p : prod.points) {
    Neighborhood via_c = lattice_neighborhood(p, res.adjacency->t, prod.points);
    Neighborhood via_g = relation_neighborhood(gs.relation, p);
    Neighborhood via_k = lattice_neighborhood(p, gs.k_star.t, prod.points);
    if (via_c.closed != via_g.closed || via_g.closed != via_k.closed) {
      return {fact.id, fact.provenance, false, "neighborhood mismatch at " + to_string(p)};
    }
  }
  return {fact.id, fact.provenance, true, ""};
}

inline FactOutcome check_ap_neighborhood_form(const CorpusFact& fact, const Registry& reg) {
  std::vector<DigitalImage> factors = resolve_factors(fact.body, reg);
  const int u = fact.body.at("u").get<int>();
  ProductSpace prod = make_product(factors);
  ExistenceReport rep = adjacency_existence(prod, ProductKind::ap, u);
  if (!rep.exists()) return {fact.id, fact.provenance, false, "no AP_" + std::to_string(u) + " adjacency"};
  if (fact.body.at("expect").contains("star_k") &&
      *rep.star_k != fact.body.at("expect").at("star_k").get<std::int64_t>()) {
    return {fact.id, fact.provenance, false, "star_k " + std::to_string(*rep.star_k)};
  }
  // Explicit factorized forms for binary products: the cross for u = 1, the
  // full product of factor neighborhoods for u = 2.
  if (factors.size() == 2 && (u == 1 || u == 2)) {
    PairRelation rel = ap_relation(prod, u);
    const int n1 = factors[0].dim();
    for (const Point& p : prod.points) {
      Point x(std::vector<Coord>(p.coords.begin(), p.coords.begin() + n1));
      Point y(std::vector<Coord>(p.coords.begin() + n1, p.coords.end()));
      Neighborhood nx = lattice_neighborhood(x, factors[0].adj.t, factors[0].points);
      Neighborhood ny = lattice_neighborhood(y, factors[1].adj.t, factors[1].points);
      std::vector<Point> want;
      auto joined = [&](const Point& a, const Point& b) {
        std::vector<Coord> c(a.coords);
        c.insert(c.end(), b.coords.begin(), b.coords.end());
        return Point(std::move(c));
      };
      if (u == 1) {
        for (const Point& a : nx.closed) want.push_back(joined(a, y));
        for (const Point& b : ny.closed) want.push_back(joined(x, b));
      } else {
        for (const Point& a : nx.closed) {
          for (const Point& b : ny.closed) want.push_back(joined(a, b));
        }
      }
      std::sort(want.begin(), want.end());
      want.erase(std::unique(want.begin(), want.end()), want.end());
      Neighborhood via_rel = relation_neighborhood(rel, p);
      Neighborhood via_lat = lattice_neighborhood(p, *rep.star_t, prod.points);
      if (via_rel.closed != want || via_lat.closed != want) {
        return {fact.id, fact.provenance, false, "factorized neighborhood mismatch at " + to_string(p)};
      }
    }
  }
  return {fact.id, fact.provenance, true, ""};
}

inline FactOutcome check_group_axioms(const CorpusFact& fact, const Registry& reg) {
  const ImageFile& f = reg.image(fact.body.at("image").get<std::string>());
  if (fact.body.at("group").get<std::string>() != "cyclic") {
    throw std::invalid_argument("group_axioms supports cyclic fixtures");
  }
  GroupTable g = parse_group_json(json{{"cyclic", true}}, f);
  GroupCheckResult res = verify_group(g);
  const auto& expect = fact.body.at("expect");
  if (res.valid != expect.value("valid", true)) {
    return {fact.id, fact.provenance, false, "verify_group: " + res.detail};
  }
  if (expect.contains("abelian") && g.is_abelian() != expect.at("abelian").get<bool>()) {
    return {fact.id, fact.provenance, false, "abelian mismatch"};
  }
  return {fact.id, fact.provenance, true, ""};
}

inline FactOutcome check_group_verdict(const CorpusFact& fact, const Registry& reg) {
  const ImageFile& f = reg.image(fact.body.at("image").get<std::string>());
  if (fact.body.at("group").get<std::string>() != "cyclic") {
    return {fact.id, fact.provenance, false, "corpus group fixtures are cyclic"};
  }
  GroupTable g = parse_group_json(json{{"cyclic", true}}, f);
  const std::string structure = fact.body.at("structure").get<std::string>();
  GroupVerdict v;
  if (structure == "dt") v = check_dt_group(f.image, g);
  else if (structure == "ap1") v = check_ap1_group(f.image, g, false);
  else if (structure == "ap1-star") v = check_ap1_group(f.image, g, true);
  else return {fact.id, fact.provenance, false, "unknown structure " + structure};
  const auto& expect = fact.body.at("expect");
  if (v.holds != expect.at("holds").get<bool>()) {
    return {fact.id, fact.provenance, false, std::string("holds is ") + (v.holds ? "true" : "false")};
  }
  if (expect.contains("reason") && v.adjacency_used.find(expect.at("reason").get<std::string>()) == std::string::npos) {
    return {fact.id, fact.provenance, false, "reason \"" + v.adjacency_used + "\""};
  }
  if (expect.contains("star_k")) {
    if (v.per_adjacency.empty() || v.per_adjacency.front().k != expect.at("star_k").get<std::int64_t>()) {
      return {fact.id, fact.provenance, false, "star adjacency mismatch"};
    }
  }
  return {fact.id, fact.provenance, true, ""};
}

inline FactOutcome check_window_group(const CorpusFact& fact) {
  const int n = fact.body.at("n").get<int>();
  const int t = fact.body.at("t").get<int>();
  const int radius = fact.body.at("radius").get<int>();
  const int u = fact.body.at("u").get<int>();
  GroupVerdict v = window_group_check(n, t, radius, u);
  const auto& expect = fact.body.at("expect");
  if (v.holds != expect.at("holds").get<bool>()) {
    return {fact.id, fact.provenance, false, std::string("holds is ") + (v.holds ? "true" : "false")};
  }
  if (expect.contains("violation")) {
    WindowProbe probe = window_probe(n, t, radius, u);
    const auto& viol = expect.at("violation");
    Point p = point_from_json(viol.at("p"));
    Point q = point_from_json(viol.at("q"));
    if (!relation_violates(probe.relation, probe.addition, p, q)) {
      return {fact.id, fact.provenance, false, "named pair is not a violation"};
    }
    if (viol.contains("fp") && probe.addition.value_at(p) != point_from_json(viol.at("fp"))) {
      return {fact.id, fact.provenance, false, "image of p mismatch"};
    }
    if (viol.contains("fq") && probe.addition.value_at(q) != point_from_json(viol.at("fq"))) {
      return {fact.id, fact.provenance, false, "image of q mismatch"};
    }
  }
  return {fact.id, fact.provenance, true, ""};
}

inline FactOutcome check_window_ap1_iff(const CorpusFact& fact) {
  const int radius = fact.body.at("radius").get<int>();
  std::vector<DigitalImage> factors;
  for (const auto& d : fact.body.at("dims")) factors.push_back(lattice_window(d.get<int>(), 1, radius));
  ProductSpace prod = make_product(factors);
  const bool holds = pairwise_iff_holds(prod, ProductKind::ap, 1, 1);
  if (holds != fact.body.at("expect").at("t1_iff").get<bool>()) {
    return {fact.id, fact.provenance, false, std::string("t=1 iff is ") + (holds ? "true" : "false")};
  }
  return {fact.id, fact.provenance, true, ""};
}

inline FactOutcome check_random_city_block_c_star(const CorpusFact& fact) {
  const int samples = fact.body.at("samples").get<int>();
  std::mt19937 rng(fact.body.at("seed").get<std::uint32_t>());
  auto bounded = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint32_t>(hi - lo + 1)); };
  auto random_city_block = [&]() {
    const int n = bounded(1, 3);
    const int count = bounded(2, 6);
    std::vector<Point> pts;
    for (int i = 0; i < count; ++i) {
      std::vector<Coord> c(static_cast<std::size_t>(n));
      for (int d = 0; d < n; ++d) c[static_cast<std::size_t>(d)] = bounded(-2, 2);
      pts.emplace_back(std::move(c));
    }
    return DigitalImage(std::move(pts), 1);
  };
  for (int i = 0; i < samples; ++i) {
    DigitalImage X1 = random_city_block();
    DigitalImage X2 = random_city_block();
    CStarResult res = c_star(X1, X2);
    const std::int64_t want = 2 * (X1.dim() + X2.dim());
    if (!res.adjacency || res.adjacency->k != want) {
      return {fact.id, fact.provenance, false, "sample " + std::to_string(i) + " failed"};
    }
  }
  return {fact.id, fact.provenance, true, ""};
}

inline FactOutcome check_continuity(const CorpusFact& fact, const Registry& reg) {
  const MapFile& f = reg.map(fact.body.at("map").get<std::string>());
  ContinuityReport rep = is_continuous_lattice(f.map, f.domain_image.adj);
  const auto& expect = fact.body.at("expect");
  if (rep.continuous != expect.at("continuous").get<bool>()) {
    return {fact.id, fact.provenance, false, std::string("continuous is ") + (rep.continuous ? "true" : "false")};
  }
  if (expect.contains("witness_p") && (!rep.witness || rep.witness->p != point_from_json(expect.at("witness_p")))) {
    return {fact.id, fact.provenance, false, "witness p mismatch"};
  }
  if (expect.contains("witness_q") && (!rep.witness || rep.witness->q != point_from_json(expect.at("witness_q")))) {
    return {fact.id, fact.provenance, false, "witness q mismatch"};
  }
  return {fact.id, fact.provenance, true, ""};
}

inline FactOutcome check_product_group(const CorpusFact& fact, const Registry& reg) {
  std::vector<DigitalImage> factors = resolve_factors(fact.body, reg);
  if (factors.size() != 2) return {fact.id, fact.provenance, false, "product_group needs 2 factors"};
  std::vector<GroupTable> gs;
  for (const auto& name : fact.body.at("factors")) {
    gs.push_back(parse_group_json(json{{"cyclic", true}}, reg.image(name.get<std::string>())));
  }
  GroupVerdict v = product_group_probe(factors[0], gs[0], factors[1], gs[1]);
  const auto& expect = fact.body.at("expect");
  if (v.holds != expect.at("holds").get<bool>()) {
    return {fact.id, fact.provenance, false, std::string("holds is ") + (v.holds ? "true" : "false")};
  }
  if (expect.contains("reason") && v.adjacency_used.find(expect.at("reason").get<std::string>()) == std::string::npos) {
    return {fact.id, fact.provenance, false, "reason \"" + v.adjacency_used + "\""};
  }
  return {fact.id, fact.provenance, true, ""};
}

inline FactOutcome run_single_fact(const CorpusFact& fact, const Registry& reg) {
  if (fact.check == "k_table") return check_k_table(fact);
  if (fact.check == "curve_valid") return check_curve_valid(fact, reg);
  if (fact.check == "existence") return check_existence(fact, reg);
  if (fact.check == "ap_relation_at") return check_ap_relation_at(fact, reg);
  if (fact.check == "product_neighborhood_sizes") return check_product_neighborhood_sizes(fact, reg);
  if (fact.check == "product_forms_fail_at") return check_product_forms_fail_at(fact, reg);
  if (fact.check == "g_star") return check_g_star(fact, reg);
  if (fact.check == "c_star") return check_c_star(fact, reg);
  if (fact.check == "c_star_neighborhoods") return check_c_star_neighborhoods(fact, reg);
  if (fact.check == "ap_neighborhood_form") return check_ap_neighborhood_form(fact, reg);
  if (fact.check == "group_axioms") return check_group_axioms(fact, reg);
  if (fact.check == "group_verdict") return check_group_verdict(fact, reg);
  if (fact.check == "window_group") return check_window_group(fact);
  if (fact.check == "window_ap1_iff") return check_window_ap1_iff(fact);
  if (fact.check == "random_city_block_c_star") return check_random_city_block_c_star(fact);
  if (fact.check == "continuity") return check_continuity(fact, reg);
  if (fact.check == "product_group") return check_product_group(fact, reg);
  return {fact.id, fact.provenance, false, "unknown check type: " + fact.check};
}

}  // namespace corpus_detail

/// Loads every fixture and fact under `root` (subdirectories images/, maps/,
/// facts/), runs the facts whose id contains `filter`, and aggregates
/// pass/fail results. Facts are independent; `threads` > 1 runs them on a
/// pool, with output identical to the sequential run. Throws on fixture or
/// fact file load failure.
inline CorpusSummary run_corpus(const std::filesystem::path& root, const std::string& filter = "",
                                int threads = 1) {
  namespace fs = std::filesystem;
  corpus_detail::Registry reg;
  if (!fs::is_directory(root / "facts")) {
    throw std::invalid_argument("corpus root has no facts/ directory: " + root.string());
  }
  if (fs::is_directory(root / "images")) {
    for (const auto& entry : fs::directory_iterator(root / "images")) {
      if (entry.path().extension() != ".json") continue;
      reg.images.emplace(entry.path().stem().string(), load_image_file(entry.path().string()));
    }
  }
  if (fs::is_directory(root / "maps")) {
    for (const auto& entry : fs::directory_iterator(root / "maps")) {
      if (entry.path().extension() != ".json") continue;
      reg.maps.emplace(entry.path().stem().string(), parse_map_json(load_json_file(entry.path().string())));
    }
  }

  std::vector<CorpusFact> facts;
  auto add_fact = [&](const json& j) {
    CorpusFact fact;
    fact.id = j.at("id").get<std::string>();
    fact.check = j.at("check").get<std::string>();
    fact.provenance = j.value("provenance", "");
    fact.body = j;
    if (filter.empty() || fact.id.find(filter) != std::string::npos) facts.push_back(std::move(fact));
  };
  std::vector<fs::path> fact_files;
  for (const auto& entry : fs::directory_iterator(root / "facts")) {
    if (entry.path().extension() == ".json") fact_files.push_back(entry.path());
  }
  std::sort(fact_files.begin(), fact_files.end());
  for (const fs::path& path : fact_files) {
    json j = load_json_file(path.string());
    if (j.is_array()) {
      for (const auto& item : j) add_fact(item);
    } else {
      add_fact(j);
    }
  }
  std::sort(facts.begin(), facts.end(), [](const CorpusFact& a, const CorpusFact& b) { return a.id < b.id; });

  std::vector<FactOutcome> results(facts.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        results[i] = corpus_detail::run_single_fact(facts[i], reg);
      } catch (const std::exception& e) {
        results[i] = {facts[i].id, facts[i].provenance, false, std::string("error: ") + e.what()};
      }
    }
  };
  if (threads <= 1 || facts.size() < 2) {
    work(0, facts.size());
  } else {
    const std::size_t n_threads = std::min<std::size_t>(static_cast<std::size_t>(threads), facts.size());
    std::vector<std::future<void>> pool;
    const std::size_t chunk = (facts.size() + n_threads - 1) / n_threads;
    for (std::size_t s = 0; s < facts.size(); s += chunk) {
      pool.push_back(std::async(std::launch::async, work, s, std::min(s + chunk, facts.size())));
    }
    for (auto& f : pool) f.get();
  }

  CorpusSummary summary;
  summary.total = static_cast<int>(results.size());
  summary.results = std::move(results);
  for (const FactOutcome& r : summary.results) (r.pass ? summary.passed : summary.failed)++;
  return summary;
}

}  // namespace digitop
