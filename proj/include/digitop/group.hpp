#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "digitop/continuity.hpp"
#include "digitop/curves.hpp"
#include "digitop/image.hpp"
#include "digitop/product.hpp"

namespace digitop {

/// A finite group operation on an image's points: carrier list, Cayley table
/// of carrier indices, identity index, inverse permutation.
struct GroupTable {
  std::vector<Point> carrier;
  std::vector<std::vector<int>> op;
  int identity = -1;
  std::vector<int> inverse;

  std::size_t order() const { return carrier.size(); }

  int index_of(const Point& p) const {
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      if (carrier[i] == p) return static_cast<int>(i);
    }
    return -1;
  }

  const Point& multiply(const Point& a, const Point& b) const {
    int ia = index_of(a), ib = index_of(b);
    if (ia < 0 || ib < 0) throw std::invalid_argument("GroupTable: point not in carrier");
    return carrier[static_cast<std::size_t>(op[static_cast<std::size_t>(ia)][static_cast<std::size_t>(ib)])];
  }

  bool is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a) {
      for (std::size_t b = a + 1; b < order(); ++b) {
        if (op[a][b] != op[b][a]) return false;
      }
    }
    return true;
  }

  /// The cyclic group on a curve's circular ordering: x_i * x_j = x_{i+j mod l}.
  static GroupTable cyclic(const SimpleClosedCurve& curve) {
    const int l = static_cast<int>(curve.length());
    GroupTable g;
    g.carrier = curve.seq;
    g.op.assign(static_cast<std::size_t>(l), std::vector<int>(static_cast<std::size_t>(l), 0));
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j) g.op[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % l;
    }
    g.identity = 0;
    g.inverse.resize(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) g.inverse[static_cast<std::size_t>(i)] = (l - i) % l;
    return g;
  }

  /// Builds a table from raw data, deriving identity and inverses when they
  /// exist; verify_group reports what is missing otherwise.
  static GroupTable from_table(std::vector<Point> carrier, std::vector<std::vector<int>> op) {
    GroupTable g;
    g.carrier = std::move(carrier);
    g.op = std::move(op);
    const int m = static_cast<int>(g.carrier.size());
    for (int e = 0; e < m; ++e) {
      bool ok = true;
      for (int a = 0; a < m && ok; ++a) {
        ok = in_range(g, e, a) && g.op[static_cast<std::size_t>(e)][static_cast<std::size_t>(a)] == a &&
             g.op[static_cast<std::size_t>(a)][static_cast<std::size_t>(e)] == a;
      }
      if (ok) {
        g.identity = e;
        break;
      }
    }
    if (g.identity >= 0) {
      g.inverse.assign(static_cast<std::size_t>(m), -1);
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          if (in_range(g, a, b) &&
              g.op[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == g.identity &&
              g.op[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] == g.identity) {
            g.inverse[static_cast<std::size_t>(a)] = b;
            break;
          }
        }
      }
    }
    return g;
  }

 private:
  static bool in_range(const GroupTable& g, int a, int b) {
    if (a < 0 || b < 0) return false;
    const std::size_t m = g.carrier.size();
    if (static_cast<std::size_t>(a) >= g.op.size() || g.op[static_cast<std::size_t>(a)].size() != m) return false;
    int r = g.op[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    return r >= 0 && static_cast<std::size_t>(r) < m;
  }
};

enum class GroupAxiom { none, shape, closure, identity, inverses, associativity };

struct GroupCheckResult {
  bool valid = false;
  GroupAxiom violated = GroupAxiom::none;
  std::string detail;
};

/// Checks closure, identity, two-sided inverses and associativity, reporting
/// the first violated axiom.
inline GroupCheckResult verify_group(const GroupTable& g) {
  const int m = static_cast<int>(g.order());
  if (m < 1) return {false, GroupAxiom::shape, "empty carrier"};
  if (g.op.size() != static_cast<std::size_t>(m)) return {false, GroupAxiom::shape, "table row count differs from carrier"};
  for (int a = 0; a < m; ++a) {
    if (g.op[static_cast<std::size_t>(a)].size() != static_cast<std::size_t>(m)) {
      return {false, GroupAxiom::shape, "table row " + std::to_string(a) + " has wrong length"};
    }
    for (int b = 0; b < m; ++b) {
      int r = g.op[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (r < 0 || r >= m) {
        return {false, GroupAxiom::closure,
                "entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range"};
      }
    }
  }
  if (g.identity < 0 || g.identity >= m) return {false, GroupAxiom::identity, "no two-sided identity"};
  for (int a = 0; a < m; ++a) {
    if (g.op[static_cast<std::size_t>(g.identity)][static_cast<std::size_t>(a)] != a ||
        g.op[static_cast<std::size_t>(a)][static_cast<std::size_t>(g.identity)] != a) {
      return {false, GroupAxiom::identity, "identity fails at element " + std::to_string(a)};
    }
  }
  if (g.inverse.size() != static_cast<std::size_t>(m)) return {false, GroupAxiom::inverses, "inverse table missing"};
  for (int a = 0; a < m; ++a) {
    int b = g.inverse[static_cast<std::size_t>(a)];
    if (b < 0 || b >= m || g.op[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != g.identity ||
        g.op[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] != g.identity) {
      return {false, GroupAxiom::inverses, "element " + std::to_string(a) + " lacks a two-sided inverse"};
    }
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        int ab = g.op[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        int bc = g.op[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
        if (g.op[static_cast<std::size_t>(ab)][static_cast<std::size_t>(c)] !=
            g.op[static_cast<std::size_t>(a)][static_cast<std::size_t>(bc)]) {
          return {false, GroupAxiom::associativity,
                  "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ")"};
        }
      }
    }
  }
  return {true, GroupAxiom::none, ""};
}

enum class GroupStructure { dt_group, ap1_group, ap1_star_group, ap2_probe };

inline std::string structure_name(GroupStructure s) {
  switch (s) {
    case GroupStructure::dt_group: return "dt";
    case GroupStructure::ap1_group: return "ap1";
    case GroupStructure::ap1_star_group: return "ap1-star";
    case GroupStructure::ap2_probe: return "ap2-probe";
  }
  return "?";
}

struct PerAdjacencyVerdict {
  int t = 0;
  std::int64_t k = 0;
  bool continuous = false;
};

/// Outcome of certifying one group structure on a digital image: whether it
/// holds, the continuity evidence for multiplication and inversion, and a
/// description of the product adjacency or relation that was used.
struct GroupVerdict {
  GroupStructure structure = GroupStructure::dt_group;
  bool holds = false;
  ContinuityReport multiplication;
  ContinuityReport inverse;
  std::string adjacency_used;
  std::vector<PerAdjacencyVerdict> per_adjacency;  // ap1 with star=false
};

namespace detail {

inline void require_carrier_matches(const DigitalImage& X, const GroupTable& g) {
  std::vector<Point> carrier = g.carrier;
  std::sort(carrier.begin(), carrier.end());
  if (carrier != X.points) throw std::invalid_argument("group carrier does not match image point set");
}

inline DigitalMap multiplication_map(const ProductSpace& prod, const GroupTable& g,
                                     const LatticeAdjacency& codomain) {
  std::vector<Point> values;
  values.reserve(prod.points.size());
  const int n = codomain.n;
  for (const Point& p : prod.points) {
    Point x(std::vector<Coord>(p.coords.begin(), p.coords.begin() + n));
    Point y(std::vector<Coord>(p.coords.begin() + n, p.coords.end()));
    values.push_back(g.multiply(x, y));
  }
  return DigitalMap(prod.points, std::move(values), codomain);
}

inline DigitalMap inversion_map(const DigitalImage& X, const GroupTable& g) {
  std::vector<Point> values;
  values.reserve(X.size());
  for (const Point& p : X.points) {
    int i = g.index_of(p);
    values.push_back(g.carrier[static_cast<std::size_t>(g.inverse[static_cast<std::size_t>(i)])]);
  }
  return DigitalMap(X.points, std::move(values), X.adj);
}

/// Pairs of the product that are k(t,2n)-adjacent, as a relation. For an
/// admissible t this coincides with the move-condition relation; computing it
/// from the lattice side keeps the two routes independent.
inline PairRelation lattice_relation_on(const ProductSpace& prod, int t) {
  PairRelation rel;
  rel.ground = prod.points;
  rel.neighbors.assign(prod.points.size(), {});
  for (std::size_t a = 0; a < prod.points.size(); ++a) {
    for (std::size_t b = a + 1; b < prod.points.size(); ++b) {
      if (lattice_adjacent(prod.points[a], prod.points[b], t)) {
        rel.neighbors[a].push_back(static_cast<int>(b));
        rel.neighbors[b].push_back(static_cast<int>(a));
      }
    }
  }
  return rel;
}

}  // namespace detail

/// Certifies a DT-k-group: the multiplication must be continuous under the
/// G_{k*} relation on X^2 and the inversion k-continuous on X. The relation
/// always exists, so only the two continuities can fail.
inline GroupVerdict check_dt_group(const DigitalImage& X, const GroupTable& g) {
  detail::require_carrier_matches(X, g);
  GroupVerdict verdict;
  verdict.structure = GroupStructure::dt_group;
  GStar gs = g_star(X, X);
  verdict.adjacency_used = "G_{k*}, k* = " + std::to_string(gs.k_star.k);
  ProductSpace prod = make_product({X, X});
  DigitalMap mult = detail::multiplication_map(prod, g, X.adj);
  verdict.multiplication = is_continuous_relation(mult, gs.relation);
  verdict.inverse = is_continuous_lattice(detail::inversion_map(X, g), X.adj);
  verdict.holds = verdict.multiplication.continuous && verdict.inverse.continuous;
  return verdict;
}

/// Certifies an AP_1-k-group (star = false) or AP_1*-k-group (star = true).
/// Fails outright when X^2 has no AP_1(k,k)-adjacency. With star = false the
/// multiplication is checked against every admissible adjacency and the
/// verdict holds if some adjacency works; per_adjacency carries the vector.
inline GroupVerdict check_ap1_group(const DigitalImage& X, const GroupTable& g, bool star) {
  detail::require_carrier_matches(X, g);
  GroupVerdict verdict;
  verdict.structure = star ? GroupStructure::ap1_star_group : GroupStructure::ap1_group;
  ProductSpace prod = make_product({X, X});
  ExistenceReport rep = adjacency_existence(prod, ProductKind::ap, 1);
  if (!rep.exists()) {
    verdict.adjacency_used = "no AP_1 adjacency";
    verdict.holds = false;
    return verdict;
  }
  DigitalMap mult = detail::multiplication_map(prod, g, X.adj);
  bool any = false;
  bool have_report = false;
  for (std::size_t i = 0; i < rep.admissible_t.size(); ++i) {
    const int t = rep.admissible_t[i];
    if (star && t != *rep.star_t) continue;
    ContinuityReport r = is_continuous_relation(mult, detail::lattice_relation_on(prod, t));
    verdict.per_adjacency.push_back({t, rep.admissible_k[i], r.continuous});
    if (!have_report || (r.continuous && !any)) {
      verdict.multiplication = r;
      have_report = true;
    }
    any = any || r.continuous;
  }
  if (star) {
    verdict.adjacency_used = "AP_1* = " + std::to_string(*rep.star_k);
  } else {
    std::string ks;
    for (std::size_t i = 0; i < rep.admissible_k.size(); ++i) {
      if (i) ks += ",";
      ks += std::to_string(rep.admissible_k[i]);
    }
    verdict.adjacency_used = "AP_1 in {" + ks + "}";
  }
  verdict.inverse = is_continuous_lattice(detail::inversion_map(X, g), X.adj);
  verdict.holds = any && verdict.inverse.continuous;
  return verdict;
}

/// Probes (AP_2(k,k), k)-continuity of the multiplication on a finite image.
/// Exists only to reproduce negative results; throws when X^2 has no
/// AP_2(k,k)-adjacency.
inline GroupVerdict ap2_probe(const DigitalImage& X, const GroupTable& g) {
  detail::require_carrier_matches(X, g);
  ProductSpace prod = make_product({X, X});
  ExistenceReport rep = adjacency_existence(prod, ProductKind::ap, 2);
  if (!rep.exists()) throw std::domain_error("ap2_probe: no AP_2 adjacency on X^2");
  GroupVerdict verdict;
  verdict.structure = GroupStructure::ap2_probe;
  verdict.adjacency_used = "AP_2* = " + std::to_string(*rep.star_k);
  DigitalMap mult = detail::multiplication_map(prod, g, X.adj);
  verdict.multiplication = is_continuous_relation(mult, detail::lattice_relation_on(prod, *rep.star_t));
  verdict.inverse.continuous = true;  // the probe only inspects the multiplication
  verdict.holds = verdict.multiplication.continuous;
  return verdict;
}

/// Windowed check of (Z^n, k, +): builds W = [-radius, radius]^n, relates
/// W x W by the u-move condition and checks (p,q) -> p+q against the full
/// lattice k-adjacency (sums may leave the window), plus p -> -p on W.
inline GroupVerdict window_group_check(int n, int t, int radius, int u) {
  if (n < 1 || t < 1 || t > n || radius < 1) throw std::domain_error("window_group_check: bad parameters");
  if (u < 1 || u > 2) throw std::domain_error("window_group_check: u must be 1 or 2");
  DigitalImage W = lattice_window(n, t, radius);
  ProductSpace prod = make_product({W, W});
  PairRelation rel = ap_relation(prod, u);

  std::vector<Point> sums;
  sums.reserve(prod.points.size());
  for (const Point& p : prod.points) {
    std::vector<Coord> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = p[i] + p[i + n];
    sums.emplace_back(std::move(s));
  }
  DigitalMap mult(prod.points, std::move(sums), W.adj);

  std::vector<Point> negs;
  negs.reserve(W.size());
  for (const Point& p : W.points) {
    std::vector<Coord> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = -p[i];
    negs.emplace_back(std::move(m));
  }
  DigitalMap inv(W.points, std::move(negs), W.adj);

  GroupVerdict verdict;
  verdict.structure = (u == 1) ? GroupStructure::ap1_group : GroupStructure::ap2_probe;
  verdict.adjacency_used = "move condition with u = " + std::to_string(u) + " on [-" +
                           std::to_string(radius) + "," + std::to_string(radius) + "]^" + std::to_string(n) +
                           " squared";
  verdict.multiplication = is_continuous_relation(mult, rel);
  verdict.inverse = is_continuous_lattice(inv, W.adj);
  verdict.holds = verdict.multiplication.continuous && verdict.inverse.continuous;
  return verdict;
}

/// The condition relation and addition map used by window_group_check,
/// exposed for point-level witness checks.
struct WindowProbe {
  ProductSpace prod;
  PairRelation relation;
  DigitalMap addition;
};

inline WindowProbe window_probe(int n, int t, int radius, int u) {
  DigitalImage W = lattice_window(n, t, radius);
  ProductSpace prod = make_product({W, W});
  PairRelation rel = ap_relation(prod, u);
  std::vector<Point> sums;
  sums.reserve(prod.points.size());
  for (const Point& p : prod.points) {
    std::vector<Coord> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = p[i] + p[i + n];
    sums.emplace_back(std::move(s));
  }
  DigitalMap mult(prod.points, std::move(sums), W.adj);
  return WindowProbe{std::move(prod), std::move(rel), std::move(mult)};
}

/// Componentwise product of two groups on the materialized product points.
inline GroupTable direct_product_group(const DigitalImage& X1, const GroupTable& g1,
                                       const DigitalImage& X2, const GroupTable& g2) {
  ProductSpace prod = make_product({X1, X2});
  GroupTable g;
  g.carrier = prod.points;
  const int m = static_cast<int>(g.carrier.size());
  const int n1 = X1.dim();
  auto split = [&](const Point& p) {
    Point a(std::vector<Coord>(p.coords.begin(), p.coords.begin() + n1));
    Point b(std::vector<Coord>(p.coords.begin() + n1, p.coords.end()));
    return std::pair<Point, Point>(std::move(a), std::move(b));
  };
  auto join = [&](const Point& a, const Point& b) {
    std::vector<Coord> c(a.coords);
    c.insert(c.end(), b.coords.begin(), b.coords.end());
    return Point(std::move(c));
  };
  g.op.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int a = 0; a < m; ++a) {
    auto [xa, ya] = split(g.carrier[static_cast<std::size_t>(a)]);
    for (int b = 0; b < m; ++b) {
      auto [xb, yb] = split(g.carrier[static_cast<std::size_t>(b)]);
      Point r = join(g1.multiply(xa, xb), g2.multiply(ya, yb));
      int ri = prod.index_of(r);
      if (ri < 0) throw std::logic_error("direct_product_group: product not closed");
      g.op[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = ri;
    }
  }
  Point e = join(g1.carrier[static_cast<std::size_t>(g1.identity)], g2.carrier[static_cast<std::size_t>(g2.identity)]);
  g.identity = prod.index_of(e);
  g.inverse.resize(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    auto [xa, ya] = split(g.carrier[static_cast<std::size_t>(a)]);
    Point ia = g1.carrier[static_cast<std::size_t>(g1.inverse[static_cast<std::size_t>(g1.index_of(xa))])];
    Point ib = g2.carrier[static_cast<std::size_t>(g2.inverse[static_cast<std::size_t>(g2.index_of(ya))])];
    g.inverse[static_cast<std::size_t>(a)] = prod.index_of(join(ia, ib));
  }
  return g;
}

/// Asks whether the direct-product group on X1 x X2 is an AP_1*-group. The
/// square of the product is the 4-factor product with adjacencies
/// (k1,k2,k1,k2); when it admits no AP_1 adjacency the structure is refuted.
inline GroupVerdict product_group_probe(const DigitalImage& X1, const GroupTable& g1,
                                        const DigitalImage& X2, const GroupTable& g2) {
  if (!check_ap1_group(X1, g1, true).holds || !check_ap1_group(X2, g2, true).holds) {
    throw std::invalid_argument("product_group_probe: factors must be verified AP_1*-groups");
  }
  GroupVerdict verdict;
  verdict.structure = GroupStructure::ap1_star_group;

  ProductSpace square = make_product({X1, X2, X1, X2});
  ExistenceReport rep4 = adjacency_existence(square, ProductKind::ap, 1);
  if (!rep4.exists()) {
    verdict.adjacency_used = "no AP_1 adjacency";
    verdict.holds = false;
    return verdict;
  }
  // The product image's own adjacency: the AP_1* adjacency of X1 x X2.
  ProductSpace base = make_product({X1, X2});
  ExistenceReport rep2 = adjacency_existence(base, ProductKind::ap, 1);
  if (!rep2.exists()) {
    verdict.adjacency_used = "no AP_1 adjacency on the factor product";
    verdict.holds = false;
    return verdict;
  }
  LatticeAdjacency codomain(*rep2.star_t, base.total_dim());
  GroupTable g = direct_product_group(X1, g1, X2, g2);
  DigitalMap mult = detail::multiplication_map(square, g, codomain);
  verdict.multiplication = is_continuous_relation(mult, detail::lattice_relation_on(square, *rep4.star_t));
  DigitalImage P(base.points, codomain.t);
  verdict.inverse = is_continuous_lattice(detail::inversion_map(P, g), codomain);
  verdict.adjacency_used = "AP_1* = " + std::to_string(*rep4.star_k) + " on the squared product, codomain AP_1* = " +
                           std::to_string(codomain.k);
  verdict.holds = verdict.multiplication.continuous && verdict.inverse.continuous;
  return verdict;
}

}  // namespace digitop
