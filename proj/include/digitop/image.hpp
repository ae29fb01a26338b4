#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "digitop/lattice.hpp"

namespace digitop {

/// A finite digital image (X, k(t,n)): a deduplicated, canonically ordered
/// point set with one lattice adjacency.
struct DigitalImage {
  std::vector<Point> points;  // sorted, unique
  LatticeAdjacency adj;

  DigitalImage() = default;
  DigitalImage(std::vector<Point> pts, int t) {
    if (pts.empty()) throw std::invalid_argument("DigitalImage: point set must be nonempty");
    const int n = pts.front().dim();
    for (const Point& p : pts) {
      if (p.dim() != n) throw std::invalid_argument("DigitalImage: mixed dimensions");
    }
    adj = LatticeAdjacency(t, n);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    points = std::move(pts);
  }

  int dim() const { return adj.n; }
  std::size_t size() const { return points.size(); }

  bool contains(const Point& p) const {
    return std::binary_search(points.begin(), points.end(), p);
  }
  /// Index in canonical order, or -1.
  int index_of(const Point& p) const {
    auto it = std::lower_bound(points.begin(), points.end(), p);
    if (it == points.end() || *it != p) return -1;
    return static_cast<int>(it - points.begin());
  }
};

/// A simple closed k-curve SC_k^{n,l}: l >= 4 points in circular order,
/// adjacent exactly between consecutive (mod l) entries.
struct SimpleClosedCurve {
  std::vector<Point> seq;
  LatticeAdjacency adj;

  std::size_t length() const { return seq.size(); }
  DigitalImage to_image() const { return DigitalImage(seq, adj.t); }
};

struct CurveValidation {
  bool ok = false;
  std::optional<SimpleClosedCurve> curve;
  // First violating index pair, in scan order (i < j).
  int bad_i = -1;
  int bad_j = -1;
  std::string reason;
};

/// Checks that `seq` is a simple closed t-curve: points distinct, consecutive
/// (mod l) pairs adjacent, no other pair adjacent (no chord).
inline CurveValidation validate_curve(const std::vector<Point>& seq, int t) {
  CurveValidation v;
  const int l = static_cast<int>(seq.size());
  if (l < 4) {
    v.reason = "a simple closed curve needs at least 4 points";
    return v;
  }
  const int n = seq.front().dim();
  for (const Point& p : seq) {
    if (p.dim() != n) {
      v.reason = "mixed dimensions in sequence";
      return v;
    }
  }
  if (t < 1 || t > n) {
    v.reason = "t out of range for dimension " + std::to_string(n);
    return v;
  }
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == l - 1);
      if (seq[static_cast<std::size_t>(i)] == seq[static_cast<std::size_t>(j)]) {
        v.bad_i = i;
        v.bad_j = j;
        v.reason = "duplicate point at indices " + std::to_string(i) + "," + std::to_string(j);
        return v;
      }
      const bool adjacent =
          lattice_adjacent(seq[static_cast<std::size_t>(i)], seq[static_cast<std::size_t>(j)], t);
      if (consecutive && !adjacent) {
        v.bad_i = i;
        v.bad_j = j;
        v.reason = "consecutive points " + std::to_string(i) + "," + std::to_string(j) + " are not adjacent";
        return v;
      }
      if (!consecutive && adjacent) {
        v.bad_i = i;
        v.bad_j = j;
        v.reason = "chord between indices " + std::to_string(i) + "," + std::to_string(j);
        return v;
      }
    }
  }
  v.ok = true;
  v.curve = SimpleClosedCurve{seq, LatticeAdjacency(t, n)};
  return v;
}

/// Breadth-first connectivity of the adjacency graph on X. A singleton is
/// connected.
inline bool is_connected(const DigitalImage& X) {
  const int m = static_cast<int>(X.size());
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
          lattice_adjacent(X.points[static_cast<std::size_t>(a)], X.points[static_cast<std::size_t>(b)], X.adj.t)) {
        seen[static_cast<std::size_t>(b)] = 1;
        ++reached;
        bfs.push(b);
      }
    }
  }
  return reached == m;
}

/// Shortest adjacency path from x to y inside X, or nullopt if none exists.
/// k_path(X, x, x) is the single-point sequence (x).
inline std::optional<std::vector<Point>> k_path(const DigitalImage& X, const Point& x, const Point& y) {
  const int sx = X.index_of(x);
  const int sy = X.index_of(y);
  if (sx < 0 || sy < 0) throw std::invalid_argument("k_path: point not in image");
  const int m = static_cast<int>(X.size());
  std::vector<int> parent(static_cast<std::size_t>(m), -2);
  std::queue<int> bfs;
  bfs.push(sx);
  parent[static_cast<std::size_t>(sx)] = -1;
  while (!bfs.empty()) {
    int a = bfs.front();
    bfs.pop();
    if (a == sy) break;
    for (int b = 0; b < m; ++b) {
      if (parent[static_cast<std::size_t>(b)] == -2 &&
          lattice_adjacent(X.points[static_cast<std::size_t>(a)], X.points[static_cast<std::size_t>(b)], X.adj.t)) {
        parent[static_cast<std::size_t>(b)] = a;
        bfs.push(b);
      }
    }
  }
  if (parent[static_cast<std::size_t>(sy)] == -2) return std::nullopt;
  std::vector<Point> path;
  for (int a = sy; a != -1; a = parent[static_cast<std::size_t>(a)]) {
    path.push_back(X.points[static_cast<std::size_t>(a)]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace digitop
