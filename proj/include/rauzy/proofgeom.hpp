#pragma once

// Geometric witnesses of the exactness arguments: the quadrilaterals Q_n
// around a density point, the trapezoids T and T+ in the image of a
// distorted cone, and the polyhedral slices P and P+ in dimension n.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "rauzy/cones.hpp"
#include "rauzy/geometry.hpp"
#include "rauzy/montecarlo.hpp"
#include "rauzy/numerics.hpp"
#include "rauzy/report.hpp"

namespace rauzy {

using RPoint = Point2<Rational>;
using RPolygon = Polygon<Rational>;
using RPair = std::array<Rational, 2>;

/// Trapezoid p q r s with lambda0 the midpoint of pq, |pq| = |lambda0| / n,
/// r = (1 + 1/n) q and s = (1 + 1/n) p.
struct Quad2D {
  RPoint p, q, r, s;
  RVector lambda0;
  std::size_t n = 0;

  /// Counter-clockwise vertex list.
  RPolygon polygon() const;
};

/// Throws DomainError when lambda0 is not strictly positive, n == 0, or a
/// vertex leaves the open positive quadrant.
Quad2D build_qn(const RVector& lambda0, std::size_t n);

/// (2n+1)/(2n^3) |lambda0|^2.
Rational qn_area_formula(const Quad2D& q);
/// rho_n^2 = (5n^2+2n+1) |lambda0|^2 / (4n^4), the squared radius of the
/// smallest centred ball holding Q_n.
Rational ball_radius_squared(const Quad2D& q);
/// pi * area(Q_n) / area(B(lambda0, rho_n)) = 2n(2n+1)/(5n^2+2n+1).
Rational ball_ratio(const Quad2D& q);
/// Largest squared distance from lambda0 to a vertex.
Rational max_vertex_distance_squared(const Quad2D& q);

/// T with vertices (a1,0), (b1,0), (0,b2), (0,a2), counter-clockwise.
RPolygon trapezoid(const RPair& alpha, const RPair& beta);
/// T+ = T intersected with {y >= x}.
RPolygon trapezoid_plus(const RPair& alpha, const RPair& beta);
/// Image of T+ under the upper Euclid branch (x, y) -> (x, y - x).
RPolygon euclid_image_of_tplus(const RPair& alpha, const RPair& beta);

/// b2 / (b1 + b2). Requires 0 < a_i < b_i and a1/b1 = a2/b2.
Rational tplus_ratio(const RPair& alpha, const RPair& beta);

struct IntersectionReport {
  RPair alpha, beta;
  std::size_t n = 0;
  /// b1 b2 / (b1 + b2) >= (b1 + a1) / 2.
  bool half_width = false;
  /// b2 / b1 >= 2n + 1.
  bool ratio_bound = false;
  /// area(E(T+) and T+) >= area(T+) / 2.
  bool half_overlap = false;
  Rational overlap_area;
  Rational tplus_area;
  /// (ratio_bound => half_width) and (half_width => half_overlap).
  bool chain_holds() const {
    return (!ratio_bound || half_width) && (!half_width || half_overlap);
  }
};

/// Requires the trapezoid condition with common ratio a_i/b_i = n/(n+1).
IntersectionReport check_euclid_intersection(const RPair& alpha, const RPair& beta, std::size_t n);

/// Region {sum_i x_i t_i l_i : x in the simplex, alpha_i <= t_i <= beta_i}
/// inside the cone spanned by the columns l_i.
struct Slice {
  Cone cone;
  std::vector<Rational> alpha;
  std::vector<Rational> beta;

  std::size_t dimension() const { return beta.size(); }
  /// Common ratio alpha_i / beta_i; throws when the ratios differ.
  Rational delta() const;
};

/// Slice over the canonical basis; validates 0 < alpha_i < beta_i.
Slice canonical_slice(std::vector<Rational> alpha, std::vector<Rational> beta);

/// (1/n!) (1 - delta^n) prod beta_i. Requires a canonical-basis slice with a
/// common ratio delta.
Rational slice_measure(const Slice& s);

/// Membership of y in a canonical-basis slice: sum y/beta <= 1 <= sum y/alpha.
bool in_canonical_slice(const Slice& s, const Eigen::VectorXd& y);

/// Rejection estimate of the slice volume from the box prod [0, beta_i].
McEstimate slice_volume_mc(const Slice& s, const McConfig& cfg);

struct PPlusReport {
  std::size_t N = 0;
  Rational bound;        // N / (N + 2)
  Rational exact_ratio;  // beta_{n-1} / (beta_{n-1} + beta_n)
  McEstimate mc;
  bool exact_pass = false;
  bool mc_pass = false;
};

/// mu(P+)/mu(P) for P+ = {lambda in P : lambda_{n-1} > lambda_n}. Requires
/// beta_{n-1}/beta_n >= N/2 (DomainError otherwise).
PPlusReport pplus_bound(const Slice& s, std::size_t N, const McConfig& cfg);

struct WitnessParams {
  std::size_t N = 8;
  std::size_t depth_cap = 48;
  std::size_t max_quad_index = 100000;
  McConfig mc;
};

struct WitnessReport {
  bool found_cone = false;
  std::size_t quad_index = 0;
  std::optional<Cone> cone;
  /// Columns reordered so that l1 is the long one.
  bool swapped = false;
  RPair alpha, beta;
  std::optional<IntersectionReport> intersection;
  Rational tplus_ratio_value;
  /// Exact area of T and E(T+), a lower bound for the overlap of the
  /// s-th and (s+1)-th images of Q.
  Rational exact_overlap_area;
  std::optional<McEstimate> overlap;
  Report checks;
  /// Empirical overlap strictly positive at 3 sigma.
  bool success() const { return overlap && overlap->lower() > 0.0; }
};

/// Runs the proof pipeline on the disc Omega = B(center, radius): picks the
/// first Q_n inside Omega, a distorted cone inside C(Q_n), forms T and T+,
/// evaluates every exact identity and inequality, and estimates the overlap
/// of E^s(Omega) and E^{s+1}(Omega) by pushing samples of Omega forward.
/// A missing cone is reported with found_cone = false.
WitnessReport witness_intersection(const RVector& center, const Rational& radius,
                                   const WitnessParams& params);

nlohmann::json to_json(const Quad2D& q);
nlohmann::json to_json(const IntersectionReport& r);
nlohmann::json to_json(const PPlusReport& r);
nlohmann::json to_json(const WitnessReport& r);

}  // namespace rauzy
