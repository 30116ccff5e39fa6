#pragma once

// Planar convex polygons over an ordered field: shoelace area and
// half-plane clipping. Instantiated with Rational for exact work and with
// double in tests.

#include <cstddef>
#include <vector>

namespace rauzy {

template <typename Scalar>
struct Point2 {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
};

template <typename Scalar>
using Polygon = std::vector<Point2<Scalar>>;

/// Signed shoelace area; positive for counter-clockwise vertex order.
template <typename Scalar>
Scalar signed_area(const Polygon<Scalar>& poly) {
  Scalar twice(0);
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / Scalar(2);
}

template <typename Scalar>
Scalar area(const Polygon<Scalar>& poly) {
  Scalar s = signed_area(poly);
  return s < 0 ? Scalar(-s) : s;
}

/// Half-plane {p : a*x + b*y <= c}.
template <typename Scalar>
struct HalfPlane {
  Scalar a;
  Scalar b;
  Scalar c;

  Scalar excess(const Point2<Scalar>& p) const { return a * p.x + b * p.y - c; }
};

/// Sutherland-Hodgman clip of a convex polygon against one half-plane.
template <typename Scalar>
Polygon<Scalar> clip(const Polygon<Scalar>& poly, const HalfPlane<Scalar>& h) {
  Polygon<Scalar> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& cur = poly[i];
    const auto& next = poly[(i + 1) % n];
    const Scalar ec = h.excess(cur);
    const Scalar en = h.excess(next);
    if (ec <= 0) out.push_back(cur);
    if ((ec < 0 && en > 0) || (ec > 0 && en < 0)) {
      const Scalar t = ec / (ec - en);
      out.push_back({cur.x + t * (next.x - cur.x), cur.y + t * (next.y - cur.y)});
    }
  }
  return out;
}

/// Half-plane to the left of the directed edge a -> b (inclusive).
template <typename Scalar>
HalfPlane<Scalar> left_of(const Point2<Scalar>& a, const Point2<Scalar>& b) {
  // cross(b - a, p - a) >= 0
  const Scalar dx = b.x - a.x;
  const Scalar dy = b.y - a.y;
  return {dy, Scalar(-dx), dy * a.x - dx * a.y};
}

/// Intersection of two convex polygons; `clipper` must be counter-clockwise.
template <typename Scalar>
Polygon<Scalar> intersect_convex(const Polygon<Scalar>& subject, const Polygon<Scalar>& clipper) {
  Polygon<Scalar> out = subject;
  const std::size_t n = clipper.size();
  for (std::size_t i = 0; i < n && !out.empty(); ++i)
    out = clip(out, left_of(clipper[i], clipper[(i + 1) % n]));
  return out;
}

/// Reorders vertices counter-clockwise when the signed area is negative.
template <typename Scalar>
Polygon<Scalar> counter_clockwise(Polygon<Scalar> poly) {
  if (signed_area(poly) < 0) return Polygon<Scalar>(poly.rbegin(), poly.rend());
  return poly;
}

/// Closed point-in-convex-polygon test for counter-clockwise vertex order.
template <typename Scalar>
bool contains_point(const Polygon<Scalar>& ccw, const Point2<Scalar>& p) {
  const std::size_t n = ccw.size();
  for (std::size_t i = 0; i < n; ++i)
    if (left_of(ccw[i], ccw[(i + 1) % n]).excess(p) > 0) return false;
  return true;
}

}  // namespace rauzy
