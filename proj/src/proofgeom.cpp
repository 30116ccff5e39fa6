#include "rauzy/proofgeom.hpp"

#include <algorithm>
#include <string>

#include "rauzy/euclid.hpp"

namespace rauzy {

namespace {

Rational sq(const Rational& x) { return x * x; }

Rational norm2(const RPoint& p) { return p.x * p.x + p.y * p.y; }

Rational cross(const RPoint& u, const RPoint& v) { return u.x * v.y - u.y * v.x; }

RPoint scaled(const RPoint& p, const Rational& t) { return {p.x * t, p.y * t}; }

RPoint column_point(const IMatrix& g, Eigen::Index j) {
  return {Rational(g(0, j)), Rational(g(1, j))};
}

std::string str(const Rational& q) { return to_string(q); }

void require_trapezoid(const RPair& alpha, const RPair& beta, const char* who) {
  for (int i = 0; i < 2; ++i)
    if (!(alpha[i] > 0 && alpha[i] < beta[i]))
      throw DomainError(std::string(who) + ": need 0 < alpha_i < beta_i");
  if (alpha[0] * beta[1] != alpha[1] * beta[0])
    throw DomainError(std::string(who) + ": alpha_1/beta_1 != alpha_2/beta_2");
}

Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<unsigned long>(k);
  return f;
}

}  // namespace

RPolygon Quad2D::polygon() const { return counter_clockwise(RPolygon{p, q, r, s}); }

Quad2D build_qn(const RVector& lambda0, std::size_t n) {
  if (lambda0.size() != 2) throw DimensionError("build_qn: lambda0 must be a 2-vector");
  if (!all_positive(lambda0)) throw DomainError("build_qn: lambda0 must be strictly positive");
  if (n == 0) throw DomainError("build_qn: n must be at least 1");
  const Rational h(1, 2 * static_cast<unsigned long>(n));
  const Rational grow = 1 + Rational(1, static_cast<unsigned long>(n));
  Quad2D q;
  q.lambda0 = lambda0;
  q.n = n;
  q.p = {lambda0(0) - h * lambda0(1), lambda0(1) + h * lambda0(0)};
  q.q = {lambda0(0) + h * lambda0(1), lambda0(1) - h * lambda0(0)};
  q.r = scaled(q.q, grow);
  q.s = scaled(q.p, grow);
  for (const auto& v : {q.p, q.q, q.r, q.s})
    if (!(v.x > 0 && v.y > 0))
      throw DomainError("build_qn: vertex outside the open quadrant, n = " + std::to_string(n) +
                        " is too small");
  return q;
}

Rational qn_area_formula(const Quad2D& q) {
  const Rational n(static_cast<unsigned long>(q.n));
  return (2 * n + 1) / (2 * n * n * n) * dot(q.lambda0, q.lambda0);
}

Rational ball_radius_squared(const Quad2D& q) {
  const Rational n(static_cast<unsigned long>(q.n));
  return (5 * n * n + 2 * n + 1) * dot(q.lambda0, q.lambda0) / (4 * n * n * n * n);
}

Rational ball_ratio(const Quad2D& q) {
  const Rational n(static_cast<unsigned long>(q.n));
  return 2 * n * (2 * n + 1) / (5 * n * n + 2 * n + 1);
}

Rational max_vertex_distance_squared(const Quad2D& q) {
  const RPoint c{q.lambda0(0), q.lambda0(1)};
  Rational best = 0;
  for (const auto& v : {q.p, q.q, q.r, q.s}) best = std::max(best, Rational(norm2({v.x - c.x, v.y - c.y})));
  return best;
}

RPolygon trapezoid(const RPair& alpha, const RPair& beta) {
  return {{alpha[0], 0}, {beta[0], 0}, {0, beta[1]}, {0, alpha[1]}};
}

RPolygon trapezoid_plus(const RPair& alpha, const RPair& beta) {
  return clip(trapezoid(alpha, beta), HalfPlane<Rational>{1, -1, 0});
}

RPolygon euclid_image_of_tplus(const RPair& alpha, const RPair& beta) {
  RPolygon out;
  for (const auto& v : trapezoid_plus(alpha, beta)) out.push_back({v.x, v.y - v.x});
  return out;
}

Rational tplus_ratio(const RPair& alpha, const RPair& beta) {
  require_trapezoid(alpha, beta, "tplus_ratio");
  return beta[1] / (beta[0] + beta[1]);
}

IntersectionReport check_euclid_intersection(const RPair& alpha, const RPair& beta, std::size_t n) {
  require_trapezoid(alpha, beta, "check_euclid_intersection");
  if (n == 0) throw DomainError("check_euclid_intersection: n must be at least 1");
  const Rational common = ratio(static_cast<unsigned long>(n), static_cast<unsigned long>(n + 1));
  if (alpha[0] / beta[0] != common)
    throw DomainError("check_euclid_intersection: alpha_i/beta_i must equal n/(n+1)");
  IntersectionReport r;
  r.alpha = alpha;
  r.beta = beta;
  r.n = n;
  r.half_width = beta[0] * beta[1] / (beta[0] + beta[1]) >= (beta[0] + alpha[0]) / 2;
  r.ratio_bound = beta[1] >= (2 * static_cast<unsigned long>(n) + 1) * beta[0];
  const RPolygon tplus = trapezoid_plus(alpha, beta);
  r.tplus_area = area(tplus);
  r.overlap_area = area(intersect_convex(euclid_image_of_tplus(alpha, beta), tplus));
  r.half_overlap = 2 * r.overlap_area >= r.tplus_area;
  return r;
}

Rational Slice::delta() const {
  if (alpha.size() != beta.size() || beta.empty()) throw DimensionError("Slice: bound sizes differ");
  const Rational d = alpha[0] / beta[0];
  for (std::size_t i = 1; i < beta.size(); ++i)
    if (alpha[i] / beta[i] != d) throw DomainError("Slice: alpha_i/beta_i is not constant");
  return d;
}

Slice canonical_slice(std::vector<Rational> alpha, std::vector<Rational> beta) {
  if (alpha.size() != beta.size() || beta.size() < 2)
    throw DimensionError("canonical_slice: need matching bounds of length >= 2");
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (!(alpha[i] > 0 && alpha[i] < beta[i]))
      throw DomainError("canonical_slice: need 0 < alpha_i < beta_i");
  Slice s;
  s.cone.generator = identity(static_cast<Eigen::Index>(beta.size()));
  s.cone.kind = ConeKind::Rauzy;
  s.alpha = std::move(alpha);
  s.beta = std::move(beta);
  return s;
}

Rational slice_measure(const Slice& s) {
  const Eigen::Index n = static_cast<Eigen::Index>(s.dimension());
  if (s.cone.generator != identity(n)) throw DomainError("slice_measure: slice must sit on the canonical basis");
  const Rational delta = s.delta();
  Rational delta_n = 1, prod = 1;
  for (const auto& b : s.beta) {
    delta_n *= delta;
    prod *= b;
  }
  return (1 - delta_n) * prod / Rational(factorial(s.dimension()));
}

bool in_canonical_slice(const Slice& s, const Eigen::VectorXd& y) {
  double outer = 0.0, inner = 0.0;
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    outer += y(static_cast<Eigen::Index>(i)) / s.beta[i].get_d();
    inner += y(static_cast<Eigen::Index>(i)) / s.alpha[i].get_d();
  }
  return outer <= 1.0 && inner >= 1.0;
}

namespace {

Eigen::VectorXd draw_box(std::mt19937_64& rng, const Slice& s) {
  Eigen::VectorXd y(static_cast<Eigen::Index>(s.dimension()));
  for (std::size_t i = 0; i < s.dimension(); ++i)
    y(static_cast<Eigen::Index>(i)) = uniform(rng, 0.0, s.beta[i].get_d());
  return y;
}

}  // namespace

McEstimate slice_volume_mc(const Slice& s, const McConfig& cfg) {
  double box = 1.0;
  for (const auto& b : s.beta) box *= b.get_d();
  const auto fraction =
      estimate_fraction(cfg, [&](std::mt19937_64& rng) { return in_canonical_slice(s, draw_box(rng, s)); });
  return fraction.scaled(box);
}

PPlusReport pplus_bound(const Slice& s, std::size_t N, const McConfig& cfg) {
  const std::size_t n = s.dimension();
  s.delta();
  const Rational& last = s.beta[n - 1];
  const Rational& before = s.beta[n - 2];
  if (2 * before < Rational(static_cast<unsigned long>(N)) * last)
    throw DomainError("pplus_bound: beta_{n-1}/beta_n < N/2");
  PPlusReport r;
  r.N = N;
  r.bound = ratio(static_cast<unsigned long>(N), static_cast<unsigned long>(N + 2));
  r.exact_ratio = before / (before + last);
  r.exact_pass = r.exact_ratio >= r.bound;
  const auto idx_last = static_cast<Eigen::Index>(n - 1);
  r.mc = estimate_fraction(cfg, [&](std::mt19937_64& rng) {
    for (;;) {
      Eigen::VectorXd y = draw_box(rng, s);
      if (in_canonical_slice(s, y)) return y(idx_last - 1) > y(idx_last);
    }
  });
  r.mc_pass = r.mc.upper() >= r.bound.get_d();
  return r;
}

namespace {

struct Ray2 {
  RPoint lo, hi;
};

bool inside(const Ray2& outer, const Ray2& inner) {
  return cross(outer.lo, inner.lo) >= 0 && cross(inner.hi, outer.hi) >= 0;
}

Ray2 rays_of(const Cone& c) { return {column_point(c.generator, 0), column_point(c.generator, 1)}; }

}  // namespace

WitnessReport witness_intersection(const RVector& center, const Rational& radius,
                                   const WitnessParams& params) {
  if (center.size() != 2) throw DimensionError("witness_intersection: center must be a 2-vector");
  if (!(radius > 0)) throw DomainError("witness_intersection: degenerate disc (radius <= 0)");
  const Rational r2 = radius * radius;
  if (!all_positive(center) || !(r2 < sq(center(0)) && r2 < sq(center(1))))
    throw DomainError("witness_intersection: disc must lie inside the open quadrant");

  WitnessReport out;
  Report& checks = out.checks;
  checks.name = "euclid-witness";
  const Rational c_norm2 = dot(center, center);

  std::size_t n = 1;
  auto radius_ok = [&](std::size_t k) {
    const Rational kk(static_cast<unsigned long>(k));
    return (5 * kk * kk + 2 * kk + 1) * c_norm2 <= 4 * kk * kk * kk * kk * r2;
  };
  while (!radius_ok(n)) {
    if (++n > params.max_quad_index) throw DomainError("witness_intersection: disc too small");
  }
  out.quad_index = n;
  const Quad2D quad = build_qn(center, n);
  checks.add("quad.inside_disc", CheckKind::Exact, max_vertex_distance_squared(quad) <= r2,
             {{"n", n}, {"rho_squared", str(ball_radius_squared(quad))}, {"radius_squared", str(r2)}});
  checks.add("quad.area_formula", CheckKind::Exact, area(quad.polygon()) == qn_area_formula(quad),
             {{"area", str(qn_area_formula(quad))}});

  // Walk the partition tree along the expansions of points spread over the
  // segment qp; the first distorted cone of such a point that fits inside
  // cone(q, p) is taken.
  const Ray2 quad_cone{quad.q, quad.p};
  std::optional<Cone> found;
  std::size_t probes = 0;
  constexpr unsigned long kProbes = 64;
  for (unsigned long k = 1; k < kProbes && !found; ++k) {
    const Rational t = ratio(k, kProbes);
    const RVector probe = make_rvector({quad.q.x + t * (quad.p.x - quad.q.x), quad.q.y + t * (quad.p.y - quad.q.y)});
    ++probes;
    const auto partition = euclid_distorted_partition(
        params.N, params.depth_cap, [&](const Cone& c) { return contains(c, probe); });
    for (const auto& c : partition.cones)
      if (inside(quad_cone, rays_of(c))) {
        found = c;
        break;
      }
  }
  const Cone* chosen = found ? &*found : nullptr;
  out.found_cone = chosen != nullptr;
  checks.data["probes"] = probes;
  if (!chosen) {
    checks.add("cone.found", CheckKind::Info, false, {{"depth_cap", params.depth_cap}});
    return out;
  }
  out.cone = *chosen;
  checks.add("cone.found", CheckKind::Info, true, {{"path", chosen->path_label()}, {"depth", chosen->depth()}});
  checks.add("cone.distortion", CheckKind::Exact,
             distortion(*chosen) > Rational(static_cast<unsigned long>(params.N)),
             {{"distortion", str(distortion(*chosen))}});

  RPoint l1 = column_point(chosen->generator, 0);
  RPoint l2 = column_point(chosen->generator, 1);
  if (l1.x + l1.y < l2.x + l2.y) {
    std::swap(l1, l2);
    out.swapped = true;
  }
  const RPoint lam{center(0), center(1)};
  const Rational grow = ratio(static_cast<unsigned long>(n + 1), static_cast<unsigned long>(n));
  auto inner = [](const RPoint& u, const RPoint& v) -> Rational { return u.x * v.x + u.y * v.y; };
  out.alpha = {c_norm2 / inner(l1, lam), c_norm2 / inner(l2, lam)};
  out.beta = {out.alpha[0] * grow, out.alpha[1] * grow};
  const RPair& a = out.alpha;
  const RPair& b = out.beta;

  // Q = Q_n cut by the cone.
  const RPolygon q_poly = counter_clockwise(
      RPolygon{scaled(l1, a[0]), scaled(l1, b[0]), scaled(l2, b[1]), scaled(l2, a[1])});
  RPolygon clipped = quad.polygon();
  const Ray2 cone_rays = rays_of(*chosen);
  clipped = clip(clipped, left_of(RPoint{0, 0}, cone_rays.lo));
  clipped = clip(clipped, left_of(cone_rays.hi, RPoint{0, 0}));
  checks.add("cone_cut.quad_is_cut", CheckKind::Exact, area(clipped) == area(q_poly),
             {{"area_Q", str(area(q_poly))}});
  const Rational common = ratio(static_cast<unsigned long>(n), static_cast<unsigned long>(n + 1));
  checks.add("cone_cut.alpha_over_beta", CheckKind::Exact, a[0] / b[0] == common && a[1] / b[1] == common,
             {{"ratio", str(common)}});
  const Rational cos2 = sq(inner(quad.q, lam)) / (norm2(quad.q) * c_norm2);
  const Rational lhs = sq(a[1] / a[0]);
  checks.add("cone_cut.cos_bound", CheckKind::Exact, lhs >= norm2(l1) / norm2(l2) * cos2,
             {{"alpha_ratio_squared", str(lhs)}, {"cos_phi_squared", str(cos2)}});
  const Rational N2(static_cast<unsigned long>(params.N * params.N));
  checks.add("cone_cut.N_cos_bound", CheckKind::Info, lhs >= N2 * cos2,
             {{"note", "L1 distortion > N only gives a Euclidean ratio > N/sqrt(2)"}});

  // Forward map sends the cone onto the quadrant, columns to the basis.
  bool forward_ok = true;
  for (const auto& y : {RPoint{1, 1}, RPoint{b[0], a[1]}, RPoint{a[0] + b[0], b[1]}}) {
    const RPoint cy1 = out.swapped ? RPoint{y.y, y.x} : y;
    RVector z = apply(chosen->generator, make_rvector({cy1.x, cy1.y}));
    for (std::size_t k = 0; k < chosen->depth(); ++k) z = e_step(z);
    forward_ok = forward_ok && z(0) == cy1.x && z(1) == cy1.y;
  }
  checks.add("cone.forward_map", CheckKind::Exact, forward_ok, {{"steps", chosen->depth()}});

  const RPolygon t = trapezoid(a, b);
  const RPolygon tp = trapezoid_plus(a, b);
  out.tplus_ratio_value = tplus_ratio(a, b);
  const Rational long_form =
      (b[0] * b[1] * b[1] / (b[0] + b[1]) - a[0] * a[1] * a[1] / (a[0] + a[1])) / (b[0] * b[1] - a[0] * a[1]);
  checks.add("tplus.identity", CheckKind::Exact,
             out.tplus_ratio_value == area(tp) / area(t) && long_form == out.tplus_ratio_value,
             {{"ratio", str(out.tplus_ratio_value)}});

  out.intersection = check_euclid_intersection(a, b, n);
  const auto& ir = *out.intersection;
  checks.add("intersection.chain", CheckKind::Exact, ir.chain_holds(), to_json(ir));
  checks.add("intersection.ratio_bound", CheckKind::Info, ir.ratio_bound,
             {{"beta_ratio", str(b[1] / b[0])}, {"needed", 2 * n + 1}});
  checks.add("intersection.half_overlap", CheckKind::Info, ir.half_overlap);

  out.exact_overlap_area = area(intersect_convex(euclid_image_of_tplus(a, b), t));
  checks.add("overlap.exact_positive", CheckKind::Info, out.exact_overlap_area > 0,
             {{"area", str(out.exact_overlap_area)}});

  // Push samples of Omega forward s+1 steps and test whether they land in
  // E^s(Omega inside the chosen cone), i.e. whether G y is back in Omega.
  const IMatrix g = chosen->generator;
  const std::size_t s = chosen->depth();
  const double cx = center(0).get_d(), cy = center(1).get_d(), rr = radius.get_d();
  auto in_disc = [&](const Rational& x, const Rational& y) {
    return sq(x - center(0)) + sq(y - center(1)) <= r2;
  };
  out.overlap = estimate_fraction(params.mc, [&](std::mt19937_64& rng) {
    Rational x, y;
    do {
      double u, v;
      do {
        u = uniform(rng, -1.0, 1.0);
        v = uniform(rng, -1.0, 1.0);
      } while (u * u + v * v > 1.0);
      x = exact_rational(cx + rr * u);
      y = exact_rational(cy + rr * v);
    } while (!in_disc(x, y));
    for (std::size_t k = 0; k <= s; ++k) {
      if (x >= y) x -= y;
      else y -= x;
    }
    const Rational zx = g(0, 0) * x + g(0, 1) * y;
    const Rational zy = g(1, 0) * x + g(1, 1) * y;
    return in_disc(zx, zy);
  });
  checks.add("overlap.mc_positive", CheckKind::MonteCarlo, out.overlap->lower() > 0.0,
             to_json(*out.overlap));
  return out;
}

nlohmann::json to_json(const Quad2D& q) {
  auto pt = [](const RPoint& p) { return nlohmann::json::array({str(p.x), str(p.y)}); };
  return {{"n", q.n},          {"lambda0", to_json(q.lambda0)}, {"p", pt(q.p)},
          {"q", pt(q.q)},      {"r", pt(q.r)},                  {"s", pt(q.s)},
          {"area", str(qn_area_formula(q))}};
}

nlohmann::json to_json(const IntersectionReport& r) {
  return {{"alpha", {str(r.alpha[0]), str(r.alpha[1])}},
          {"beta", {str(r.beta[0]), str(r.beta[1])}},
          {"n", r.n},
          {"half_width", r.half_width},
          {"ratio_bound", r.ratio_bound},
          {"half_overlap", r.half_overlap},
          {"overlap_area", str(r.overlap_area)},
          {"tplus_area", str(r.tplus_area)},
          {"chain_holds", r.chain_holds()}};
}

nlohmann::json to_json(const PPlusReport& r) {
  return {{"N", r.N},
          {"bound", str(r.bound)},
          {"exact_ratio", str(r.exact_ratio)},
          {"exact_pass", r.exact_pass},
          {"mc", to_json(r.mc)},
          {"mc_pass", r.mc_pass}};
}

nlohmann::json to_json(const WitnessReport& r) {
  nlohmann::json j;
  j["found_cone"] = r.found_cone;
  j["quad_index"] = r.quad_index;
  if (r.cone) j["cone"] = to_json(*r.cone);
  j["swapped"] = r.swapped;
  if (r.found_cone) {
    j["alpha"] = {str(r.alpha[0]), str(r.alpha[1])};
    j["beta"] = {str(r.beta[0]), str(r.beta[1])};
    j["tplus_ratio"] = str(r.tplus_ratio_value);
    j["exact_overlap_area"] = str(r.exact_overlap_area);
  }
  if (r.intersection) j["intersection"] = to_json(*r.intersection);
  if (r.overlap) j["overlap"] = to_json(*r.overlap);
  j["success"] = r.success();
  j["checks"] = to_json(r.checks);
  return j;
}

}  // namespace rauzy
