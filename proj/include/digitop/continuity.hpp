#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "digitop/image.hpp"
#include "digitop/product.hpp"

namespace digitop {

/// A map between digital images as an explicit finite table. `domain` is
/// sorted in canonical order and `values` is parallel to it. Codomain
/// adjacency is a pure lattice predicate, so values are not required to stay
/// inside any declared window.
struct DigitalMap {
  std::vector<Point> domain;
  std::vector<Point> values;
  LatticeAdjacency codomain_adj;

  DigitalMap() = default;
  DigitalMap(std::vector<Point> dom, std::vector<Point> vals, LatticeAdjacency cod)
      : codomain_adj(cod) {
    if (dom.size() != vals.size()) throw std::invalid_argument("DigitalMap: table size mismatch");
    if (dom.empty()) throw std::invalid_argument("DigitalMap: empty domain");
    std::vector<std::size_t> order(dom.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dom[a] < dom[b]; });
    for (std::size_t i : order) {
      domain.push_back(dom[i]);
      values.push_back(vals[i]);
    }
    for (std::size_t i = 1; i < domain.size(); ++i) {
      if (domain[i] == domain[i - 1]) throw std::invalid_argument("DigitalMap: duplicate domain point");
    }
    for (const Point& y : values) {
      if (y.dim() != codomain_adj.n) throw std::invalid_argument("DigitalMap: value dimension mismatch");
    }
  }

  int index_of(const Point& p) const {
    auto it = std::lower_bound(domain.begin(), domain.end(), p);
    if (it == domain.end() || *it != p) return -1;
    return static_cast<int>(it - domain.begin());
  }
  const Point& value_at(const Point& p) const {
    int i = index_of(p);
    if (i < 0) throw std::invalid_argument("DigitalMap: point not in domain");
    return values[static_cast<std::size_t>(i)];
  }
};

struct ContinuityWitness {
  Point p, q, fp, fq;
};

struct ContinuityReport {
  bool continuous = true;
  std::optional<ContinuityWitness> witness;  // present iff !continuous, lex-first
};

namespace detail {

inline bool images_compatible(const DigitalMap& f, std::size_t a, std::size_t b) {
  return f.values[a] == f.values[b] || lattice_adjacent(f.values[a], f.values[b], f.codomain_adj.t);
}

}  // namespace detail

/// Pair form of digital continuity: every domain-adjacent pair maps to equal
/// or codomain-adjacent points.
inline ContinuityReport is_continuous_lattice(const DigitalMap& f, const LatticeAdjacency& domain_adj) {
  for (const Point& p : f.domain) {
    if (p.dim() != domain_adj.n) throw std::invalid_argument("is_continuous_lattice: dimension mismatch");
  }
  ContinuityReport rep;
  for (std::size_t a = 0; a < f.domain.size(); ++a) {
    for (std::size_t b = a + 1; b < f.domain.size(); ++b) {
      if (!lattice_adjacent(f.domain[a], f.domain[b], domain_adj.t)) continue;
      if (!detail::images_compatible(f, a, b)) {
        rep.continuous = false;
        rep.witness = ContinuityWitness{f.domain[a], f.domain[b], f.values[a], f.values[b]};
        return rep;
      }
    }
  }
  return rep;
}

/// Neighborhood form of the same notion: f(N(x)) lies in N(f(x)) for every x.
/// Kept as an independent code path; must agree with the pair form.
inline ContinuityReport is_continuous_lattice_neighborhood_form(const DigitalMap& f,
                                                                const LatticeAdjacency& domain_adj) {
  ContinuityReport rep;
  for (std::size_t a = 0; a < f.domain.size(); ++a) {
    Neighborhood nb = lattice_neighborhood(f.domain[a], domain_adj.t, f.domain);
    for (const Point& q : nb.proper) {
      std::size_t b = static_cast<std::size_t>(f.index_of(q));
      if (!detail::images_compatible(f, a, b)) {
        std::size_t lo = std::min(a, b), hi = std::max(a, b);
        if (rep.continuous || f.domain[lo] < rep.witness->p ||
            (f.domain[lo] == rep.witness->p && f.domain[hi] < rep.witness->q)) {
          rep.continuous = false;
          rep.witness = ContinuityWitness{f.domain[lo], f.domain[hi], f.values[lo], f.values[hi]};
        }
      }
    }
  }
  return rep;
}

/// Continuity against an explicit relation on the domain (the G_{k*},
/// C_{k*}, and move-condition relations all check through here).
inline ContinuityReport is_continuous_relation(const DigitalMap& f, const PairRelation& rel) {
  if (rel.ground != f.domain) throw std::invalid_argument("is_continuous_relation: ground set differs from domain");
  ContinuityReport rep;
  rel.for_each_pair([&](int a, int b) {
    if (!rep.continuous) return;
    if (!detail::images_compatible(f, static_cast<std::size_t>(a), static_cast<std::size_t>(b))) {
      rep.continuous = false;
      rep.witness = ContinuityWitness{f.domain[static_cast<std::size_t>(a)], f.domain[static_cast<std::size_t>(b)],
                                      f.values[static_cast<std::size_t>(a)], f.values[static_cast<std::size_t>(b)]};
    }
  });
  return rep;
}

/// Checks the single named pair against a relation-continuity requirement:
/// true iff the pair is related and its images are neither equal nor
/// codomain-adjacent.
inline bool relation_violates(const PairRelation& rel, const DigitalMap& f, const Point& p, const Point& q) {
  if (!rel.related(p, q)) return false;
  const Point& fp = f.value_at(p);
  const Point& fq = f.value_at(q);
  return fp != fq && !lattice_adjacent(fp, fq, f.codomain_adj.t);
}

namespace detail {

inline bool point_set_connected(const std::vector<Point>& pts, int t) {
  const int m = static_cast<int>(pts.size());
  if (m <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    int a = bfs.front();
    bfs.pop();
    for (int b = 0; b < m; ++b) {
      if (!seen[static_cast<std::size_t>(b)] &&
          lattice_adjacent(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)], t)) {
        seen[static_cast<std::size_t>(b)] = 1;
        ++reached;
        bfs.push(b);
      }
    }
  }
  return reached == m;
}

}  // namespace detail

/// Subset-image oracle: true iff every connected subset of the domain with at
/// most max_subset_size points has a connected image. At full budget this is
/// equivalent to continuity.
inline bool connected_image_check(const DigitalMap& f, const LatticeAdjacency& domain_adj,
                                  int max_subset_size) {
  const int m = static_cast<int>(f.domain.size());
  if (m > 20) throw std::domain_error("connected_image_check: subset budget exceeded");
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<Point> subset, img;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) {
        subset.push_back(f.domain[static_cast<std::size_t>(i)]);
        img.push_back(f.values[static_cast<std::size_t>(i)]);
      }
    }
    if (static_cast<int>(subset.size()) > max_subset_size) continue;
    if (!detail::point_set_connected(subset, domain_adj.t)) continue;
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (!detail::point_set_connected(img, f.codomain_adj.t)) return false;
  }
  return true;
}

}  // namespace digitop
