#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace digitop {

using Coord = int;

/// A point of the integer lattice Z^n. Ordered lexicographically on its
/// coordinates, which is the canonical order used everywhere in the toolkit.
struct Point {
  std::vector<Coord> coords;

  Point() = default;
  explicit Point(std::vector<Coord> c) : coords(std::move(c)) {
    if (coords.empty()) throw std::invalid_argument("Point: dimension must be >= 1");
  }
  Point(std::initializer_list<Coord> c) : Point(std::vector<Coord>(c)) {}

  int dim() const { return static_cast<int>(coords.size()); }
  Coord operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// k(t,n) = sum_{i=1..t} 2^i C(n,i): the number of lattice points whose
/// coordinates differ from a given one by +-1 in at least one and at most t
/// positions. Throws std::domain_error outside 1 <= t <= n.
inline std::int64_t k_value(int t, int n) {
  if (n < 1) throw std::domain_error("k_value: n must be >= 1");
  if (t < 1 || t > n) throw std::domain_error("k_value: t must satisfy 1 <= t <= n");
  // Binomials by Pascal's rule; n stays desk-scale so int64 never overflows.
  std::vector<std::int64_t> binom(static_cast<std::size_t>(n) + 1, 0);
  binom[0] = 1;
  for (int row = 1; row <= n; ++row) {
    for (int i = row; i >= 1; --i) binom[static_cast<std::size_t>(i)] += binom[static_cast<std::size_t>(i) - 1];
  }
  std::int64_t k = 0;
  std::int64_t pow2 = 1;
  for (int i = 1; i <= t; ++i) {
    pow2 *= 2;
    k += pow2 * binom[static_cast<std::size_t>(i)];
  }
  return k;
}

/// The (t,n) parameter pair of a k(t,n)-adjacency, with the derived k value.
struct LatticeAdjacency {
  int t = 1;
  int n = 1;
  std::int64_t k = 2;

  LatticeAdjacency() = default;
  LatticeAdjacency(int t_, int n_) : t(t_), n(n_), k(k_value(t_, n_)) {}

  friend bool operator==(const LatticeAdjacency&, const LatticeAdjacency&) = default;
};

/// True iff p != q, every coordinate difference lies in {-1,0,1}, and at most
/// t coordinates differ. Symmetric and irreflexive.
inline bool lattice_adjacent(const Point& p, const Point& q, int t) {
  if (p.dim() != q.dim()) throw std::invalid_argument("lattice_adjacent: dimension mismatch");
  if (t < 1 || t > p.dim()) throw std::domain_error("lattice_adjacent: t out of range");
  int differing = 0;
  for (int i = 0; i < p.dim(); ++i) {
    Coord d = p[i] - q[i];
    if (d == 0) continue;
    if (d < -1 || d > 1) return false;
    if (++differing > t) return false;
  }
  return differing >= 1;
}

/// A neighborhood: `closed` contains the center, `proper` does not.
/// Both are sorted in canonical order.
struct Neighborhood {
  std::vector<Point> closed;
  std::vector<Point> proper;
};

namespace detail {

// Visits every nonzero offset in {-1,0,1}^n with at most t nonzero entries.
template <class F>
void for_each_offset(int n, int t, F&& visit) {
  std::vector<Coord> off(static_cast<std::size_t>(n), -1);
  for (;;) {
    int nonzero = 0;
    for (Coord c : off) nonzero += (c != 0);
    if (nonzero >= 1 && nonzero <= t) visit(off);
    int i = n - 1;
    while (i >= 0 && off[static_cast<std::size_t>(i)] == 1) {
      off[static_cast<std::size_t>(i)] = -1;
      --i;
    }
    if (i < 0) return;
    ++off[static_cast<std::size_t>(i)];
  }
}

}  // namespace detail

/// Neighborhood of p in the full lattice Z^n; |proper| == k(t,n).
inline Neighborhood lattice_neighborhood(const Point& p, int t) {
  if (t < 1 || t > p.dim()) throw std::domain_error("lattice_neighborhood: t out of range");
  Neighborhood out;
  detail::for_each_offset(p.dim(), t, [&](const std::vector<Coord>& off) {
    std::vector<Coord> c(p.coords);
    for (int i = 0; i < p.dim(); ++i) c[static_cast<std::size_t>(i)] += off[static_cast<std::size_t>(i)];
    out.proper.emplace_back(std::move(c));
  });
  std::sort(out.proper.begin(), out.proper.end());
  out.closed = out.proper;
  out.closed.push_back(p);
  std::sort(out.closed.begin(), out.closed.end());
  return out;
}

/// Neighborhood of p restricted to a finite ground set (which must contain p).
inline Neighborhood lattice_neighborhood(const Point& p, int t, std::span<const Point> ground) {
  Neighborhood out;
  bool found = false;
  for (const Point& q : ground) {
    if (q.dim() != p.dim()) throw std::invalid_argument("lattice_neighborhood: dimension mismatch in ground set");
    if (q == p) found = true;
    else if (lattice_adjacent(p, q, t)) out.proper.push_back(q);
  }
  if (!found) throw std::invalid_argument("lattice_neighborhood: point not in ground set");
  std::sort(out.proper.begin(), out.proper.end());
  out.closed = out.proper;
  out.closed.push_back(p);
  std::sort(out.closed.begin(), out.closed.end());
  return out;
}

inline std::string to_string(const Point& p) {
  std::string s = "(";
  for (int i = 0; i < p.dim(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  s += ")";
  return s;
}

}  // namespace digitop
