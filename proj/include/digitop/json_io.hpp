#pragma once

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "digitop/continuity.hpp"
#include "digitop/group.hpp"
#include "digitop/image.hpp"
#include "digitop/product.hpp"

// File formats:
//   image  {"dim": n, "t": t, "points": [[...], ...]}; curves additionally
//          carry "ordered": true (points listed in circular order)
//   map    {"domain_image": ..., "codomain_image": ..., "pairs": [[p, f(p)], ...]}
//   group  {"carrier": [...points...], "table": [[indices]]} or {"cyclic": true}

namespace digitop {

using json = nlohmann::json;

inline json point_to_json(const Point& p) {
  json a = json::array();
  for (Coord c : p.coords) a.push_back(c);
  return a;
}

inline Point point_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("point must be a nonempty array");
  std::vector<Coord> c;
  for (const auto& v : j) c.push_back(v.get<Coord>());
  return Point(std::move(c));
}

/// A parsed image file: the point set plus, when the file is marked
/// "ordered", the validated curve in file order.
struct ImageFile {
  DigitalImage image;
  std::optional<SimpleClosedCurve> curve;
  bool ordered = false;
};

inline ImageFile parse_image_json(const json& j) {
  if (!j.contains("dim") || !j.contains("t") || !j.contains("points")) {
    throw std::invalid_argument("image file needs fields dim, t, points");
  }
  const int dim = j.at("dim").get<int>();
  const int t = j.at("t").get<int>();
  std::vector<Point> pts;
  for (const auto& pj : j.at("points")) {
    Point p = point_from_json(pj);
    if (p.dim() != dim) throw std::invalid_argument("image file: point dimension differs from dim");
    pts.push_back(std::move(p));
  }
  ImageFile f;
  f.ordered = j.value("ordered", false);
  if (f.ordered) {
    CurveValidation v = validate_curve(pts, t);
    if (!v.ok) throw std::invalid_argument("image file: ordered point list is not a simple closed curve: " + v.reason);
    f.curve = *v.curve;
  }
  f.image = DigitalImage(std::move(pts), t);
  return f;
}

inline json image_to_json(const DigitalImage& X) {
  json j;
  j["dim"] = X.dim();
  j["t"] = X.adj.t;
  json pts = json::array();
  for (const Point& p : X.points) pts.push_back(point_to_json(p));
  j["points"] = pts;
  return j;
}

inline json curve_to_json(const SimpleClosedCurve& c) {
  json j;
  j["dim"] = c.adj.n;
  j["t"] = c.adj.t;
  json pts = json::array();
  for (const Point& p : c.seq) pts.push_back(point_to_json(p));
  j["points"] = pts;
  j["ordered"] = true;
  return j;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

inline ImageFile load_image_file(const std::string& path) { return parse_image_json(load_json_file(path)); }

/// A parsed map file: the explicit table plus the two image contexts.
struct MapFile {
  DigitalMap map;
  DigitalImage domain_image;
  DigitalImage codomain_image;
};

inline MapFile parse_map_json(const json& j) {
  if (!j.contains("domain_image") || !j.contains("codomain_image") || !j.contains("pairs")) {
    throw std::invalid_argument("map file needs fields domain_image, codomain_image, pairs");
  }
  MapFile f{DigitalMap{}, parse_image_json(j.at("domain_image")).image,
            parse_image_json(j.at("codomain_image")).image};
  std::vector<Point> dom, vals;
  for (const auto& pair : j.at("pairs")) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("map file: each pair must be [p, f(p)]");
    dom.push_back(point_from_json(pair[0]));
    vals.push_back(point_from_json(pair[1]));
  }
  DigitalMap map(std::move(dom), std::move(vals), f.codomain_image.adj);
  if (map.domain != f.domain_image.points) {
    throw std::invalid_argument("map file: pairs do not cover the domain image exactly");
  }
  for (const Point& y : map.values) {
    if (!f.codomain_image.contains(y)) throw std::invalid_argument("map file: value outside codomain image");
  }
  f.map = std::move(map);
  return f;
}

inline GroupTable parse_group_json(const json& j, const ImageFile& img) {
  if (j.value("cyclic", false)) {
    if (!img.curve) throw std::invalid_argument("cyclic group needs an ordered curve image");
    return GroupTable::cyclic(*img.curve);
  }
  if (!j.contains("carrier") || !j.contains("table")) {
    throw std::invalid_argument("group file needs carrier and table (or \"cyclic\": true)");
  }
  std::vector<Point> carrier;
  for (const auto& pj : j.at("carrier")) carrier.push_back(point_from_json(pj));
  std::vector<std::vector<int>> op;
  for (const auto& row : j.at("table")) {
    std::vector<int> r;
    for (const auto& v : row) r.push_back(v.get<int>());
    op.push_back(std::move(r));
  }
  return GroupTable::from_table(std::move(carrier), std::move(op));
}

inline json existence_report_to_json(const ExistenceReport& rep) {
  json j;
  j["kind"] = kind_name(rep.kind);
  j["u"] = (rep.kind == ProductKind::ap) ? json(rep.u) : json(nullptr);
  j["admissible_t"] = rep.admissible_t;
  j["admissible_k"] = rep.admissible_k;
  j["star_k"] = rep.star_k ? json(*rep.star_k) : json(nullptr);
  json w = json::object();
  for (const auto& [t, wit] : rep.witnesses) {
    w[std::to_string(t)] = json{{"p", point_to_json(wit.p)},
                                {"q", point_to_json(wit.q)},
                                {"failed", witness_direction(wit)}};
  }
  j["witnesses"] = w;
  return j;
}

inline json continuity_report_to_json(const ContinuityReport& rep) {
  json j;
  j["continuous"] = rep.continuous;
  if (rep.witness) {
    j["witness"] = json{{"p", point_to_json(rep.witness->p)},
                        {"q", point_to_json(rep.witness->q)},
                        {"fp", point_to_json(rep.witness->fp)},
                        {"fq", point_to_json(rep.witness->fq)}};
  }
  return j;
}

inline json group_verdict_to_json(const GroupVerdict& v) {
  json j;
  j["structure"] = structure_name(v.structure);
  j["holds"] = v.holds;
  j["adjacency"] = v.adjacency_used;
  j["multiplication"] = continuity_report_to_json(v.multiplication);
  j["inverse"] = continuity_report_to_json(v.inverse);
  if (!v.per_adjacency.empty()) {
    json pa = json::array();
    for (const auto& e : v.per_adjacency) {
      pa.push_back(json{{"t", e.t}, {"k", e.k}, {"continuous", e.continuous}});
    }
    j["per_adjacency"] = pa;
  }
  return j;
}

}  // namespace digitop
