#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "digitop/image.hpp"

namespace digitop {

/// The Cartesian product of v >= 2 digital images, materialized as points of
/// Z^{n_1+...+n_v} with coordinates concatenated in factor order. Because the
/// factor point lists are sorted, the row-major product order is again the
/// canonical lexicographic order.
struct ProductSpace {
  std::vector<DigitalImage> factors;
  std::vector<int> block_bounds;  // size v+1, block_bounds[f]..block_bounds[f+1] is factor f
  std::vector<Point> points;

  int arity() const { return static_cast<int>(factors.size()); }
  int total_dim() const { return block_bounds.back(); }

  /// Index of factor f's component of product point `idx`, in that factor's
  /// canonical order.
  int factor_index(std::size_t idx, int f) const {
    std::size_t rest = idx;
    for (int g = arity() - 1; g > f; --g) rest /= factors[static_cast<std::size_t>(g)].size();
    return static_cast<int>(rest % factors[static_cast<std::size_t>(f)].size());
  }

  int index_of(const Point& p) const {
    auto it = std::lower_bound(points.begin(), points.end(), p);
    if (it == points.end() || *it != p) return -1;
    return static_cast<int>(it - points.begin());
  }
};

inline ProductSpace make_product(std::vector<DigitalImage> factors) {
  if (factors.size() < 2) throw std::invalid_argument("make_product: need at least 2 factors");
  ProductSpace prod;
  prod.block_bounds.push_back(0);
  std::size_t count = 1;
  for (const DigitalImage& X : factors) {
    prod.block_bounds.push_back(prod.block_bounds.back() + X.dim());
    count *= X.size();
  }
  prod.points.reserve(count);
  const int v = static_cast<int>(factors.size());
  std::vector<std::size_t> pick(static_cast<std::size_t>(v), 0);
  for (;;) {
    std::vector<Coord> c;
    c.reserve(static_cast<std::size_t>(prod.block_bounds.back()));
    for (int f = 0; f < v; ++f) {
      const Point& x = factors[static_cast<std::size_t>(f)].points[pick[static_cast<std::size_t>(f)]];
      c.insert(c.end(), x.coords.begin(), x.coords.end());
    }
    prod.points.emplace_back(std::move(c));
    int f = v - 1;
    while (f >= 0 && pick[static_cast<std::size_t>(f)] + 1 == factors[static_cast<std::size_t>(f)].size()) {
      pick[static_cast<std::size_t>(f)] = 0;
      --f;
    }
    if (f < 0) break;
    ++pick[static_cast<std::size_t>(f)];
  }
  prod.factors = std::move(factors);
  return prod;
}

/// An explicit symmetric irreflexive relation on a finite point set.
struct PairRelation {
  std::vector<Point> ground;                // sorted, unique
  std::vector<std::vector<int>> neighbors;  // per ground index, sorted

  bool related(int a, int b) const {
    const auto& na = neighbors[static_cast<std::size_t>(a)];
    return std::binary_search(na.begin(), na.end(), b);
  }
  bool related(const Point& p, const Point& q) const {
    int a = index_of(p), b = index_of(q);
    if (a < 0 || b < 0) throw std::invalid_argument("PairRelation: point not in ground set");
    return related(a, b);
  }
  int index_of(const Point& p) const {
    auto it = std::lower_bound(ground.begin(), ground.end(), p);
    if (it == ground.end() || *it != p) return -1;
    return static_cast<int>(it - ground.begin());
  }
  std::size_t pair_count() const {
    std::size_t c = 0;
    for (const auto& ns : neighbors) c += ns.size();
    return c / 2;
  }
  /// Visits each unordered pair once, in canonical (lexicographic) order.
  template <class F>
  void for_each_pair(F&& visit) const {
    for (std::size_t a = 0; a < ground.size(); ++a) {
      for (int b : neighbors[a]) {
        if (static_cast<std::size_t>(b) > a) visit(static_cast<int>(a), b);
      }
    }
  }
};

namespace detail {

// Per-factor adjacency matrices plus per-point factor component indices,
// precomputed so pair predicates run in O(v) after an O(P * v) setup.
struct ProductTables {
  std::vector<std::vector<char>> factor_adj;  // factor f: m_f x m_f, row-major
  std::vector<std::vector<int>> comp;         // comp[idx][f]
  std::vector<std::size_t> sizes;

  explicit ProductTables(const ProductSpace& prod) {
    const int v = prod.arity();
    for (int f = 0; f < v; ++f) {
      const DigitalImage& X = prod.factors[static_cast<std::size_t>(f)];
      const std::size_t m = X.size();
      sizes.push_back(m);
      std::vector<char> adj(m * m, 0);
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
          if (lattice_adjacent(X.points[a], X.points[b], X.adj.t)) {
            adj[a * m + b] = 1;
            adj[b * m + a] = 1;
          }
        }
      }
      factor_adj.push_back(std::move(adj));
    }
    comp.resize(prod.points.size());
    for (std::size_t idx = 0; idx < prod.points.size(); ++idx) {
      comp[idx].resize(static_cast<std::size_t>(v));
      for (int f = 0; f < v; ++f) comp[idx][static_cast<std::size_t>(f)] = prod.factor_index(idx, f);
    }
  }

  bool adjacent(int f, int a, int b) const {
    const std::size_t m = sizes[static_cast<std::size_t>(f)];
    return factor_adj[static_cast<std::size_t>(f)][static_cast<std::size_t>(a) * m + static_cast<std::size_t>(b)] != 0;
  }
};

}  // namespace detail

enum class ProductKind { normal, c_compatible, ap };

inline std::string kind_name(ProductKind kind) {
  switch (kind) {
    case ProductKind::normal: return "normal";
    case ProductKind::c_compatible: return "c-compatible";
    case ProductKind::ap: return "ap";
  }
  return "?";
}

/// The relation of the v-ary move condition: p and q are related iff between
/// 1 and u factor components differ and every differing component moves by
/// its factor adjacency. For u = 1 and v = 2 this is exactly the relation
/// underlying the G_{k*}-adjacency.
inline PairRelation ap_relation(const ProductSpace& prod, int u) {
  if (u < 1 || u > prod.arity()) throw std::domain_error("ap_relation: u must satisfy 1 <= u <= v");
  detail::ProductTables tables(prod);
  const int v = prod.arity();
  const std::size_t P = prod.points.size();
  PairRelation rel;
  rel.ground = prod.points;
  rel.neighbors.assign(P, {});
  for (std::size_t a = 0; a < P; ++a) {
    for (std::size_t b = a + 1; b < P; ++b) {
      int moved = 0;
      bool ok = true;
      for (int f = 0; f < v && ok; ++f) {
        int ia = tables.comp[a][static_cast<std::size_t>(f)];
        int ib = tables.comp[b][static_cast<std::size_t>(f)];
        if (ia == ib) continue;
        if (!tables.adjacent(f, ia, ib) || ++moved > u) ok = false;
      }
      if (ok && moved >= 1) {
        rel.neighbors[a].push_back(static_cast<int>(b));
        rel.neighbors[b].push_back(static_cast<int>(a));
      }
    }
  }
  return rel;
}

/// One pair refuting "lattice adjacency <=> defining condition" at some t.
struct IffWitness {
  Point p, q;
  /// True: the pair is k(t,N)-adjacent but fails the defining condition.
  /// False: the pair satisfies the condition but is not k(t,N)-adjacent.
  bool adjacent_side = false;
};

inline std::string witness_direction(const IffWitness& w) {
  return w.adjacent_side ? "adjacent_without_condition" : "condition_without_adjacency";
}

/// Which lattice adjacencies k(t,N) realize a product structure, decided by
/// the pairwise iff over all point pairs of the product.
struct ExistenceReport {
  ProductKind kind = ProductKind::ap;
  int u = 0;  // meaningful for kind == ap only
  int total_dim = 0;
  std::vector<int> admissible_t;
  std::vector<std::int64_t> admissible_k;
  std::optional<int> star_t;
  std::optional<std::int64_t> star_k;
  std::map<int, IffWitness> witnesses;  // per rejected t, lex-first failing pair

  bool exists() const { return !admissible_t.empty(); }
};

namespace detail {

// Evaluates the defining condition of the requested product structure for one
// pair, given factor components. normal / c_compatible are binary only.
inline bool defining_condition(ProductKind kind, int u, const ProductTables& tables, int v,
                               std::size_t a, std::size_t b) {
  if (kind == ProductKind::ap) {
    int moved = 0;
    for (int f = 0; f < v; ++f) {
      int ia = tables.comp[a][static_cast<std::size_t>(f)];
      int ib = tables.comp[b][static_cast<std::size_t>(f)];
      if (ia == ib) continue;
      if (!tables.adjacent(f, ia, ib) || ++moved > u) return false;
    }
    return moved >= 1;
  }
  const int i0 = tables.comp[a][0], i1 = tables.comp[b][0];
  const int j0 = tables.comp[a][1], j1 = tables.comp[b][1];
  const bool eq_x = (i0 == i1), eq_y = (j0 == j1);
  const bool adj_x = !eq_x && tables.adjacent(0, i0, i1);
  const bool adj_y = !eq_y && tables.adjacent(1, j0, j1);
  if (kind == ProductKind::c_compatible) return (eq_y && adj_x) || (eq_x && adj_y);
  return (eq_y && adj_x) || (eq_x && adj_y) || (adj_x && adj_y);
}

inline void check_kind_arity(const ProductSpace& prod, ProductKind kind, int u) {
  if (kind != ProductKind::ap && prod.arity() != 2) {
    throw std::invalid_argument("adjacency existence: " + kind_name(kind) +
                                " is defined for binary products only");
  }
  if (kind == ProductKind::ap && (u < 1 || u > prod.arity())) {
    throw std::domain_error("adjacency existence: u must satisfy 1 <= u <= v");
  }
}

}  // namespace detail

/// Decides, for every t in [1, N], whether k(t,N) satisfies the pairwise iff
/// of the requested structure on this product. A single pass over the point
/// pairs suffices: a pair with coordinate differences all in {-1,0,1} and c
/// of them nonzero is k(t,N)-adjacent exactly for t >= c, so each pair
/// rejects a contiguous range of t on one side of the iff.
inline ExistenceReport adjacency_existence(const ProductSpace& prod, ProductKind kind, int u = 0) {
  detail::check_kind_arity(prod, kind, u);
  detail::ProductTables tables(prod);
  const int v = prod.arity();
  const int N = prod.total_dim();
  const std::size_t P = prod.points.size();

  ExistenceReport rep;
  rep.kind = kind;
  rep.u = (kind == ProductKind::ap) ? u : 0;
  rep.total_dim = N;

  std::vector<char> rejected(static_cast<std::size_t>(N) + 1, 0);
  auto reject = [&](int t, std::size_t a, std::size_t b, bool adjacent_side) {
    if (!rejected[static_cast<std::size_t>(t)]) {
      rejected[static_cast<std::size_t>(t)] = 1;
      rep.witnesses.emplace(t, IffWitness{prod.points[a], prod.points[b], adjacent_side});
    }
  };

  for (std::size_t a = 0; a < P; ++a) {
    for (std::size_t b = a + 1; b < P; ++b) {
      const Point& p = prod.points[a];
      const Point& q = prod.points[b];
      int differing = 0;
      bool unit_box = true;
      for (int i = 0; i < N && unit_box; ++i) {
        Coord d = p[i] - q[i];
        if (d == 0) continue;
        if (d < -1 || d > 1) unit_box = false;
        ++differing;
      }
      const bool cond = detail::defining_condition(kind, u, tables, v, a, b);
      if (!unit_box) {
        // Not k(t,N)-adjacent for any t.
        if (cond) {
          for (int t = 1; t <= N; ++t) reject(t, a, b, false);
        }
        continue;
      }
      // Adjacent exactly for t >= differing.
      if (cond) {
        for (int t = 1; t < differing; ++t) reject(t, a, b, false);
      } else {
        for (int t = differing; t <= N; ++t) reject(t, a, b, true);
      }
    }
  }

  for (int t = 1; t <= N; ++t) {
    if (!rejected[static_cast<std::size_t>(t)]) {
      rep.admissible_t.push_back(t);
      rep.admissible_k.push_back(k_value(t, N));
    }
  }
  if (!rep.admissible_t.empty()) {
    rep.star_t = rep.admissible_t.front();
    rep.star_k = rep.admissible_k.front();
  }
  return rep;
}

/// Targeted version of the pairwise iff for a single t.
inline bool pairwise_iff_holds(const ProductSpace& prod, ProductKind kind, int u, int t) {
  detail::check_kind_arity(prod, kind, u);
  if (t < 1 || t > prod.total_dim()) throw std::domain_error("pairwise_iff_holds: t out of range");
  detail::ProductTables tables(prod);
  const int v = prod.arity();
  const std::size_t P = prod.points.size();
  for (std::size_t a = 0; a < P; ++a) {
    for (std::size_t b = a + 1; b < P; ++b) {
      const bool adj = lattice_adjacent(prod.points[a], prod.points[b], t);
      const bool cond = detail::defining_condition(kind, u, tables, v, a, b);
      if (adj != cond) return false;
    }
  }
  return true;
}

namespace detail {

// Closed neighborhood prescribed for product point `idx` by the structure's
// neighborhood characterization: full product of factor neighborhoods
// (normal), the cross where one factor moves (c_compatible), or the union of
// blocks with at most u moving factors (ap). Returned as sorted product
// indices.
inline std::vector<int> prescribed_closed_neighborhood(const ProductSpace& prod,
                                                       const ProductTables& tables,
                                                       ProductKind kind, int u, std::size_t idx) {
  const int v = prod.arity();
  // Closed factor neighborhoods, as factor indices.
  std::vector<std::vector<int>> closed(static_cast<std::size_t>(v));
  for (int f = 0; f < v; ++f) {
    const int ia = tables.comp[idx][static_cast<std::size_t>(f)];
    std::vector<int>& ns = closed[static_cast<std::size_t>(f)];
    ns.push_back(ia);
    const std::size_t m = tables.sizes[static_cast<std::size_t>(f)];
    for (int ib = 0; ib < static_cast<int>(m); ++ib) {
      if (ib != ia && tables.adjacent(f, ia, ib)) ns.push_back(ib);
    }
    std::sort(ns.begin(), ns.end());
  }

  auto compose = [&](const std::vector<const std::vector<int>*>& choice) {
    std::vector<int> out;
    std::vector<std::size_t> pick(static_cast<std::size_t>(v), 0);
    for (;;) {
      std::size_t flat = 0;
      for (int f = 0; f < v; ++f) {
        flat = flat * tables.sizes[static_cast<std::size_t>(f)] +
               static_cast<std::size_t>((*choice[static_cast<std::size_t>(f)])[pick[static_cast<std::size_t>(f)]]);
      }
      out.push_back(static_cast<int>(flat));
      int f = v - 1;
      while (f >= 0 && pick[static_cast<std::size_t>(f)] + 1 == choice[static_cast<std::size_t>(f)]->size()) {
        pick[static_cast<std::size_t>(f)] = 0;
        --f;
      }
      if (f < 0) break;
      ++pick[static_cast<std::size_t>(f)];
    }
    return out;
  };

  std::vector<int> result;
  if (kind == ProductKind::normal) {
    std::vector<const std::vector<int>*> choice;
    for (int f = 0; f < v; ++f) choice.push_back(&closed[static_cast<std::size_t>(f)]);
    result = compose(choice);
  } else {
    const int cap = (kind == ProductKind::c_compatible) ? 1 : u;
    std::vector<std::vector<int>> fixed(static_cast<std::size_t>(v));
    for (int f = 0; f < v; ++f) fixed[static_cast<std::size_t>(f)] = {tables.comp[idx][static_cast<std::size_t>(f)]};
    // Union over subsets S of moving factors, 1 <= |S| <= cap; each block is
    // a product of closed neighborhoods on S and singletons elsewhere. Every
    // block contains the center, so the union is closed.
    const int v_bits = 1 << v;
    for (int mask = 1; mask < v_bits; ++mask) {
      int bits = 0;
      for (int f = 0; f < v; ++f) bits += (mask >> f) & 1;
      if (bits < 1 || bits > cap) continue;
      std::vector<const std::vector<int>*> choice;
      for (int f = 0; f < v; ++f) {
        choice.push_back(((mask >> f) & 1) ? &closed[static_cast<std::size_t>(f)]
                                           : &fixed[static_cast<std::size_t>(f)]);
      }
      std::vector<int> block = compose(choice);
      result.insert(result.end(), block.begin(), block.end());
    }
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

inline std::vector<int> lattice_closed_neighborhood(const ProductSpace& prod, int t, std::size_t idx) {
  std::vector<int> out;
  const std::size_t P = prod.points.size();
  for (std::size_t b = 0; b < P; ++b) {
    if (b == idx || lattice_adjacent(prod.points[idx], prod.points[b], t)) out.push_back(static_cast<int>(b));
  }
  return out;  // already sorted: b ascends in canonical order
}

}  // namespace detail

/// True iff at product point p the neighborhood characterization of the
/// structure holds for k(t,N): the lattice neighborhood within the product
/// equals the prescribed factor-wise form.
inline bool neighborhood_form_holds_at(const ProductSpace& prod, ProductKind kind, int u, int t,
                                       const Point& p) {
  detail::check_kind_arity(prod, kind, u);
  const int idx = prod.index_of(p);
  if (idx < 0) throw std::invalid_argument("neighborhood_form_holds_at: point not in product");
  detail::ProductTables tables(prod);
  return detail::lattice_closed_neighborhood(prod, t, static_cast<std::size_t>(idx)) ==
         detail::prescribed_closed_neighborhood(prod, tables, kind, u, static_cast<std::size_t>(idx));
}

/// Independent route to the same decision as adjacency_existence: t is
/// admissible iff the neighborhood characterization holds at every point.
/// Serves as the oracle counterpart of the pairwise implementation; no
/// witnesses are collected.
inline ExistenceReport existence_by_neighborhood(const ProductSpace& prod, ProductKind kind, int u = 0) {
  detail::check_kind_arity(prod, kind, u);
  detail::ProductTables tables(prod);
  const int N = prod.total_dim();
  const std::size_t P = prod.points.size();

  ExistenceReport rep;
  rep.kind = kind;
  rep.u = (kind == ProductKind::ap) ? u : 0;
  rep.total_dim = N;

  std::vector<std::vector<int>> prescribed(P);
  for (std::size_t idx = 0; idx < P; ++idx) {
    prescribed[idx] = detail::prescribed_closed_neighborhood(prod, tables, kind, u, idx);
  }
  for (int t = 1; t <= N; ++t) {
    bool all = true;
    for (std::size_t idx = 0; idx < P && all; ++idx) {
      all = detail::lattice_closed_neighborhood(prod, t, idx) == prescribed[idx];
    }
    if (all) {
      rep.admissible_t.push_back(t);
      rep.admissible_k.push_back(k_value(t, N));
    }
  }
  if (!rep.admissible_t.empty()) {
    rep.star_t = rep.admissible_t.front();
    rep.star_k = rep.admissible_k.front();
  }
  return rep;
}

/// The G_{k*} structure on a binary product: the always-existing relation
/// where exactly one component moves by its factor adjacency, labeled by
/// k* = k(max(t1,t2), n1+n2).
struct GStar {
  PairRelation relation;
  LatticeAdjacency k_star;
};

inline GStar g_star(const DigitalImage& X1, const DigitalImage& X2) {
  ProductSpace prod = make_product({X1, X2});
  const int t = std::max(X1.adj.t, X2.adj.t);
  return GStar{ap_relation(prod, 1), LatticeAdjacency(t, X1.dim() + X2.dim())};
}

/// Outcome of looking for a C_{k*}-adjacency: the binary c-compatible
/// existence report, together with whether the minimal admissible adjacency
/// equals k* = k(max(t1,t2), n1+n2). Only then is `adjacency` present.
struct CStarResult {
  std::optional<LatticeAdjacency> adjacency;
  LatticeAdjacency k_star;
  ExistenceReport report;
  bool min_matches_k_star = false;
};

inline CStarResult c_star(const DigitalImage& X1, const DigitalImage& X2) {
  ProductSpace prod = make_product({X1, X2});
  CStarResult res;
  res.k_star = LatticeAdjacency(std::max(X1.adj.t, X2.adj.t), X1.dim() + X2.dim());
  res.report = adjacency_existence(prod, ProductKind::c_compatible);
  if (res.report.exists()) {
    res.min_matches_k_star = (*res.report.star_t == res.k_star.t);
    if (res.min_matches_k_star) res.adjacency = res.k_star;
  }
  return res;
}

/// Neighborhood of p under an explicit relation.
inline Neighborhood relation_neighborhood(const PairRelation& rel, const Point& p) {
  const int a = rel.index_of(p);
  if (a < 0) throw std::invalid_argument("relation_neighborhood: point not in ground set");
  Neighborhood out;
  for (int b : rel.neighbors[static_cast<std::size_t>(a)]) {
    out.proper.push_back(rel.ground[static_cast<std::size_t>(b)]);
  }
  out.closed = out.proper;
  out.closed.push_back(p);
  std::sort(out.closed.begin(), out.closed.end());
  return out;
}

}  // namespace digitop
