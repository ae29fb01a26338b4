#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "digitop/image.hpp"

// Stock simple closed curves used throughout the test corpus. Each factory
// returns a validated instance; construction failure is a programming error.

namespace digitop {

namespace detail {

inline SimpleClosedCurve checked_curve(std::vector<Point> seq, int t, const char* name) {
  CurveValidation v = validate_curve(seq, t);
  if (!v.ok) throw std::logic_error(std::string("builtin curve ") + name + " invalid: " + v.reason);
  return std::move(*v.curve);
}

}  // namespace detail

/// The minimal simple closed 18-curve with six elements in Z^3.
inline SimpleClosedCurve msc18() {
  return detail::checked_curve(
      {{0, 0, 0}, {1, -1, 0}, {1, -1, 1}, {2, 0, 1}, {1, 1, 1}, {1, 1, 0}}, 2, "MSC_18");
}

/// SC_4^{2,4}: the unit square.
inline SimpleClosedCurve sc4_2_4() {
  return detail::checked_curve({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 1, "SC_4^{2,4}");
}

/// SC_4^{2,8}: the boundary of [0,2]^2.
inline SimpleClosedCurve sc4_2_8() {
  return detail::checked_curve(
      {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}}, 1, "SC_4^{2,8}");
}

/// SC_8^{2,4}: the diagonal diamond, every step changing both coordinates.
inline SimpleClosedCurve sc8_2_4() {
  return detail::checked_curve({{0, 0}, {1, -1}, {2, 0}, {1, 1}}, 2, "SC_8^{2,4}");
}

/// SC_8^{2,6}: a chordless 6-cycle with four diagonal and two axis steps.
/// (No all-diagonal 6-cycle exists in Z^2.)
inline SimpleClosedCurve sc8_2_6() {
  return detail::checked_curve(
      {{0, 0}, {1, 1}, {2, 1}, {3, 0}, {2, -1}, {1, -1}}, 2, "SC_8^{2,6}");
}

/// SC_18^{3,6}: a six-point 18-curve whose steps each change exactly two
/// coordinates.
inline SimpleClosedCurve sc18_3_6() {
  return detail::checked_curve(
      {{0, 0, 0}, {1, 0, 1}, {2, 1, 1}, {1, 2, 1}, {0, 2, 0}, {-1, 1, 0}}, 2, "SC_18^{3,6}");
}

/// SC_26^{3,4}: a diamond whose steps each change all three coordinates.
inline SimpleClosedCurve sc26_3_4() {
  return detail::checked_curve({{0, 0, 0}, {1, 1, 1}, {2, 0, 0}, {1, -1, 1}}, 3, "SC_26^{3,4}");
}

/// SC_6^{3,6}: the hexagon on the unit cube, city-block steps only.
inline SimpleClosedCurve sc6_3_6() {
  return detail::checked_curve(
      {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {0, 1, 1}, {0, 0, 1}}, 1, "SC_6^{3,6}");
}

inline std::vector<SimpleClosedCurve> curve_library() {
  return {msc18(), sc4_2_4(), sc4_2_8(), sc8_2_4(), sc8_2_6(), sc18_3_6(), sc26_3_4(), sc6_3_6()};
}

/// All points of [-radius, radius]^n with a k(t,n)-adjacency.
inline DigitalImage lattice_window(int n, int t, int radius) {
  if (n < 1 || radius < 1) throw std::domain_error("lattice_window: n and radius must be >= 1");
  std::vector<Point> pts;
  std::vector<Coord> cur(static_cast<std::size_t>(n), static_cast<Coord>(-radius));
  for (;;) {
    pts.emplace_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == radius) {
      cur[static_cast<std::size_t>(i)] = static_cast<Coord>(-radius);
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  return DigitalImage(std::move(pts), t);
}

}  // namespace digitop
