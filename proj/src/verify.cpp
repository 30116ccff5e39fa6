#include "rauzy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

#include "rauzy/cones.hpp"
#include "rauzy/euclid.hpp"
#include "rauzy/iet.hpp"
#include "rauzy/induction.hpp"
#include "rauzy/mcf.hpp"
#include "rauzy/montecarlo.hpp"
#include "rauzy/permutation.hpp"
#include "rauzy/proofgeom.hpp"

namespace rauzy {

namespace {

std::string str(const Rational& q) { return to_string(q); }

Rational random_positive(std::mt19937_64& rng) { return uniform_rational(rng, 0, 1); }

RVector random_lengths(std::mt19937_64& rng, int n) {
  RVector v(n);
  for (int i = 0; i < n; ++i) v(i) = random_positive(rng);
  return v;
}

Perm random_irreducible(std::mt19937_64& rng, int n) {
  const auto all = irreducible_permutations(n);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

std::vector<Integer> floor_cf(Rational q) {
  std::vector<Integer> digits;
  for (;;) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    digits.push_back(a);
    q -= Rational(a);
    if (q == 0) break;
    q = 1 / q;
  }
  return digits;
}

/// Every Euclid cone at depth exactly k.
std::vector<Cone> euclid_level(std::size_t k) {
  std::vector<Cone> level{euclid_root()};
  for (std::size_t d = 0; d < k; ++d) {
    std::vector<Cone> next;
    next.reserve(level.size() * 2);
    for (const auto& c : level)
      for (auto& child : children(c)) next.push_back(std::move(child));
    level = std::move(next);
  }
  return level;
}

Rational l1_diameter(const IMatrix& g) {
  // projected simplex vertices are the normalized columns
  const Eigen::Index n = g.rows();
  std::vector<RVector> verts;
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    RVector v(n);
    const Rational norm(l1_norm(g.col(j)));
    for (Eigen::Index i = 0; i < n; ++i) v(i) = Rational(g(i, j)) / norm;
    verts.push_back(std::move(v));
  }
  Rational best = 0;
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      RVector d = verts[a] - verts[b];
      best = std::max(best, l1_norm(d));
    }
  return best;
}

}  // namespace

nlohmann::json to_json(const VerifyConfig& c) {
  return {{"seed", c.seed}, {"samples", c.samples}, {"workers", c.workers},
          {"n", c.n},       {"N", c.N},             {"depth", c.depth}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rauzy-combinatorics", "lemmas",      "induction",
                                              "euclid-cf",           "cones",       "euclid-proof",
                                              "rauzy-proof",         "mcf"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return name == "all" || std::find(names.begin(), names.end(), name) != names.end();
}

Report run_suite(const std::string& name, const VerifyConfig& cfg) {
  if (name == "all") {
    Report all;
    all.name = "all";
    for (const auto& s : suite_names()) all.merge(run_suite(s, cfg));
    return all;
  }
  if (name == "rauzy-combinatorics") return verify_rauzy_combinatorics(cfg);
  if (name == "lemmas") return verify_lemmas(cfg);
  if (name == "induction") return verify_induction(cfg);
  if (name == "euclid-cf") return verify_euclid_cf(cfg);
  if (name == "cones") return verify_cones(cfg);
  if (name == "euclid-proof") return verify_euclid_proof(cfg);
  if (name == "rauzy-proof") return verify_rauzy_proof(cfg);
  if (name == "mcf") return verify_mcf(cfg);
  throw DomainError("unknown suite: " + name);
}

Report verify_rauzy_combinatorics(const VerifyConfig&) {
  Report r;
  r.name = "rauzy-combinatorics";

  const auto g2 = rauzy_class(Perm::from_bottom_row({2, 1}));
  r.add("n2.single_node_two_loops", CheckKind::Exact,
        g2.size() == 1 && g2.followers[0][0] == 0 && g2.followers[0][1] == 0);

  const Perm p231 = Perm::from_bottom_row({2, 3, 1});
  const Perm p321 = Perm::from_bottom_row({3, 2, 1});
  const Perm p312 = Perm::from_bottom_row({3, 1, 2});
  const auto g3 = rauzy_class(p231);
  const std::set<std::pair<std::string, std::string>> expected{
      {"231a", "231"}, {"231b", "321"}, {"321a", "312"},
      {"321b", "231"}, {"312a", "321"}, {"312b", "312"}};
  std::set<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < g3.size(); ++i) {
    edges.insert({g3.nodes[i].label() + "a", g3.follower(i, Move::A).label()});
    edges.insert({g3.nodes[i].label() + "b", g3.follower(i, Move::B).label()});
  }
  r.add("n3.class_and_edges", CheckKind::Exact,
        g3.size() == 3 && g3.contains(p321) && g3.contains(p312) && edges == expected,
        {{"size", g3.size()}});

  const auto classes = rauzy_classes(4);
  std::multiset<std::size_t> sizes;
  std::size_t total = 0;
  for (const auto& c : classes) {
    sizes.insert(c.size());
    total += c.size();
  }
  const auto a = rauzy_class(Perm::from_bottom_row({4, 3, 2, 1}));
  const auto b = rauzy_class(Perm::from_bottom_row({3, 4, 1, 2}));
  bool disjoint = true;
  for (const auto& p : a.nodes) disjoint = disjoint && !b.contains(p);
  r.add("n4.two_classes", CheckKind::Exact,
        classes.size() == 2 && sizes == std::multiset<std::size_t>{6, 7} &&
            total == irreducible_permutations(4).size() && total == 13 && disjoint,
        {{"classes", classes.size()}, {"total", total}});

  nlohmann::json counts = nlohmann::json::object();
  for (int n = 2; n <= 7; ++n) counts[std::to_string(n)] = irreducible_permutations(n).size();
  r.data["irreducible_counts"] = counts;
  return r;
}

Report verify_lemmas(const VerifyConfig&) {
  Report r;
  r.name = "lemmas";
  for (int n = 2; n <= 7; ++n) {
    const std::string tag = "n" + std::to_string(n) + ".";
    bool standard = true, loop = true, degrees = true, connected = true, closure = true;
    bool loop_fixed = true, constructive = true;
    std::size_t classes_seen = 0;
    for (const auto& g : rauzy_classes(n)) {
      ++classes_seen;
      standard = standard && std::any_of(g.nodes.begin(), g.nodes.end(), is_standard);
      loop = loop && std::any_of(g.nodes.begin(), g.nodes.end(), is_loop);
      const auto in = g.in_degrees();
      degrees = degrees && std::all_of(in.begin(), in.end(), [](std::size_t d) { return d == 2; });
      connected = connected && g.strongly_connected();
      for (const auto& p : g.nodes) {
        closure = closure && is_irreducible(p);
        if (is_loop(p)) loop_fixed = loop_fixed && move_b(p) == p;
        if (is_standard(p)) {
          auto [l, steps] = find_loop_from_standard(p);
          Perm walk = p;
          for (int k = 0; k < steps; ++k) walk = move_a(walk);
          constructive = constructive && is_loop(l) && walk == l && g.contains(l) && steps == n - p(n - 1);
        }
      }
    }
    r.add(tag + "standard_in_every_class", CheckKind::Exact, standard, {{"classes", classes_seen}});
    r.add(tag + "loop_in_every_class", CheckKind::Exact, loop);
    r.add(tag + "two_predecessors", CheckKind::Exact, degrees);
    r.add(tag + "strongly_connected", CheckKind::Exact, connected);
    r.add(tag + "moves_preserve_irreducibility", CheckKind::Exact, closure);
    r.add(tag + "loop_fixed_by_b", CheckKind::Exact, loop_fixed);
    r.add(tag + "loop_from_standard", CheckKind::Exact, constructive);
  }
  return r;
}

Report verify_induction(const VerifyConfig& cfg) {
  Report r;
  r.name = "induction";
  auto rng = substream(cfg.seed, 11);

  const RVector applied = apply(matrix_b(Perm::from_bottom_row({2, 3, 1})), make_rvector({4, 2, 1}));
  r.add("n3_b_rule", CheckKind::Exact, applied == make_rvector({3, 1, 2}));

  std::size_t agree = 0, points = 0, breakpoint_skips = 0;
  bool all_agree = true;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 4;
    RauzyState s{random_lengths(rng, n), random_irreducible(rng, n)};
    Step st;
    try {
      st = step(s);
    } catch (const BoundaryError&) {
      continue;
    }
    const Iet t = Iet::build(s.lengths, s.perm);
    const Iet induced = Iet::build(st.state.lengths, st.state.perm);
    for (int k = 0; k < 50; ++k) {
      const Rational x = uniform_rational(rng, 0, induced.total_length());
      ++points;
      try {
        const bool same = first_return(t, induced.total_length(), x).image == induced(x);
        all_agree = all_agree && same;
        if (same) ++agree;
      } catch (const BreakpointError&) {
        ++breakpoint_skips;
      }
    }
  }
  r.add("first_return_matches_step", CheckKind::Exact, all_agree,
        {{"points", points}, {"agree", agree}, {"breakpoint_skips", breakpoint_skips}});

  bool cocycle_ok = true, inverses_ok = true, normalized_ok = true;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 5;
    RauzyState s{random_lengths(rng, n), random_irreducible(rng, n)};
    try {
      const PathRecord rec = orbit(s, 40, OnBoundary::Stop);
      cocycle_ok = cocycle_ok && is_unimodular(rec.cocycle) && all_nonnegative(rec.inverse_cocycle);
      for (std::size_t i = 0; i < rec.length(); ++i) {
        const Perm& p = rec.states[i].perm;
        inverses_ok = inverses_ok && inverse_step_matrix(p, rec.moves[i]) ==
                                         unimodular_inverse(step_matrix(p, rec.moves[i]));
      }
      const RauzyState ns = normalized_step(s);
      const Step raw = step(s);
      const Rational norm = l1_norm(raw.state.lengths);
      normalized_ok = normalized_ok && l1_norm(ns.lengths) == 1 && ns.perm == raw.state.perm;
      for (Eigen::Index i = 0; i < ns.lengths.size(); ++i)
        normalized_ok = normalized_ok && ns.lengths(i) * norm == raw.state.lengths(i);
    } catch (const std::logic_error&) {
      cocycle_ok = false;
    }
  }
  r.add("cocycle_unimodular_inverse_nonnegative", CheckKind::Exact, cocycle_ok);
  r.add("closed_form_inverses", CheckKind::Exact, inverses_ok);
  r.add("normalized_step_on_simplex", CheckKind::Exact, normalized_ok);
  return r;
}

Report verify_euclid_cf(const VerifyConfig& cfg) {
  Report r;
  r.name = "euclid-cf";
  auto rng = substream(cfg.seed, 12);
  std::uniform_int_distribution<long> pick(1, 100000);
  bool digits_ok = true, sigma_ok = true, pi_ok = true;
  for (int trial = 0; trial < 1000; ++trial) {
    const long p = pick(rng), q = pick(rng);
    const RVector v = make_rvector({p, q});
    const EuclidExpansion e = expansion(v, static_cast<std::size_t>(p + q));
    const auto digits = cf_digits(e);
    const auto oracle = floor_cf(ratio(p, q));
    bool same = e.terminated && digits.size() == oracle.size();
    for (std::size_t i = 0; same && i < digits.size(); ++i) same = Integer(static_cast<unsigned long>(digits[i])) == oracle[i];
    digits_ok = digits_ok && same;

    const RVector es = e_sigma_step(v);
    sigma_ok = sigma_ok && es(0) == std::min(v(0), v(1)) && es(1) == abs(v(0) - v(1));
    if (p <= q) {
      const RVector ep = e_pi_step(v);
      pi_ok = pi_ok && ep(0) <= ep(1) &&
              std::multiset<Rational>{ep(0), ep(1)} == std::multiset<Rational>{v(0), v(1) - v(0)};
    }
  }
  r.add("cf_digits_match_floor_oracle", CheckKind::Exact, digits_ok, {{"trials", 1000}});
  r.add("e_sigma_is_min_and_gap", CheckKind::Exact, sigma_ok);
  r.add("e_pi_sorts_euclid_image", CheckKind::Exact, pi_ok);
  return r;
}

Report verify_cones(const VerifyConfig& cfg) {
  Report r;
  r.name = "cones";
  auto rng = substream(cfg.seed, 13);

  bool additive = true, adjacent = true, depth_bound = true, cap_formula = true;
  const Rational alpha(3, 2);
  for (std::size_t k = 1; k <= cfg.depth; ++k) {
    auto level = euclid_level(k);
    Rational total = 0;
    for (const auto& c : level) {
      total += measure_2d_simplex_cap(c, alpha);
      const auto norms = column_norms(c);
      depth_bound = depth_bound && norms[0] * norms[1] >= static_cast<unsigned long>(k + 1);
      // triangle 0, alpha l1/|l1|, alpha l2/|l2|
      const Rational n1(norms[0]), n2(norms[1]);
      const RPolygon tri{{0, 0},
                         {alpha * Rational(c.generator(0, 0)) / n1, alpha * Rational(c.generator(1, 0)) / n1},
                         {alpha * Rational(c.generator(0, 1)) / n2, alpha * Rational(c.generator(1, 1)) / n2}};
      cap_formula = cap_formula && area(tri) == measure_2d_simplex_cap(c, alpha);
    }
    additive = additive && total == alpha * alpha / 2;
    // sorted by slope, consecutive cones share a ray and never overlap
    std::sort(level.begin(), level.end(), [](const Cone& a, const Cone& b) {
      return a.generator(1, 0) * b.generator(0, 0) < b.generator(1, 0) * a.generator(0, 0);
    });
    for (std::size_t i = 0; i + 1 < level.size(); ++i)
      adjacent = adjacent && level[i].generator.col(1) == level[i + 1].generator.col(0);
  }
  r.add("euclid.cap_measure_additive", CheckKind::Exact, additive, {{"max_depth", cfg.depth}});
  r.add("euclid.cones_tile_without_overlap", CheckKind::Exact, adjacent);
  r.add("euclid.norm_product_bound", CheckKind::Exact, depth_bound);
  r.add("euclid.cap_formula_vs_shoelace", CheckKind::Exact, cap_formula);

  const auto part = euclid_distorted_partition(5, 12);
  Rational covered = 0;
  bool kept_distorted = true;
  for (const auto& c : part.cones) {
    covered += simplex_volume_fraction(c);
    kept_distorted = kept_distorted && distortion(c) > 5;
  }
  r.add("euclid.partition_N5_cap12_uncovered_below_0.2", CheckKind::Info, part.uncovered < Rational(1, 5),
        {{"uncovered", str(part.uncovered)}, {"uncovered_double", part.uncovered.get_d()}});
  const auto deeper = euclid_distorted_partition(5, 13);
  r.add("euclid.partition_N5_refines_with_depth", CheckKind::Exact,
        deeper.uncovered < part.uncovered && deeper.uncovered < Rational(1, 5),
        {{"uncovered_cap13", deeper.uncovered.get_d()}});
  r.add("euclid.partition_accounts_for_everything", CheckKind::Exact,
        kept_distorted && covered + part.uncovered == 1);

  bool law = true;
  std::size_t loops_checked = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const auto& p : irreducible_permutations(n)) {
      if (!is_loop(p)) continue;
      ++loops_checked;
      // a random prefix walk that happens to end at a loop permutation
      Cone c = rauzy_root(p);
      std::bernoulli_distribution coin(0.5);
      for (int step = 0; step < 6; ++step) c = children(c)[coin(rng) ? 0 : 1];
      if (!is_loop(*c.end_perm)) c = rauzy_root(p);
      for (std::size_t N : {0, 1, 2, 3, 5, 8, 13, 21, 34, 50}) {
        const Cone e = extend_loop(c, N);
        IMatrix expect = c.generator;
        expect.col(n - 1) += static_cast<long>(N) * c.generator.col(n - 2);
        law = law && e.generator == expect && *e.end_perm == *c.end_perm;
      }
    }
  }
  r.add("rauzy.loop_extension_columns", CheckKind::Exact, law, {{"loop_permutations", loops_checked}});

  r.merge(shrinking_statistic(3, 20, 60, cfg.seed));
  r.merge(balanced_distortion_statistic(3, 100, 60, cfg.seed));
  return r;
}

Report shrinking_statistic(int n, std::size_t orbits, std::size_t max_depth, std::uint64_t seed) {
  Report r;
  r.name = "shrinking";
  auto rng = substream(seed, 14);
  bool monotone = true;
  std::size_t reached = 0;
  nlohmann::json final_diameters = nlohmann::json::array();
  for (std::size_t o = 0; o < orbits; ++o) {
    RauzyState s{random_lengths(rng, n), random_irreducible(rng, n)};
    const PathRecord rec = orbit(s, max_depth, OnBoundary::Stop);
    IMatrix g = identity(n);
    Rational prev = l1_diameter(g);
    bool hit = false;
    for (std::size_t i = 0; i < rec.length(); ++i) {
      g = mat_mul(g, inverse_step_matrix(rec.states[i].perm, rec.moves[i]));
      const Rational d = l1_diameter(g);
      monotone = monotone && d <= prev;
      prev = d;
      hit = hit || d < Rational(1, 1000);
    }
    if (hit) ++reached;
    final_diameters.push_back(prev.get_d());
  }
  r.add("diameter_nonincreasing", CheckKind::Exact, monotone, {{"orbits", orbits}});
  r.add("diameter_below_1e-3", CheckKind::Info, reached == orbits,
        {{"reached", reached}, {"orbits", orbits}, {"max_depth", max_depth}});
  r.data["final_diameters"] = final_diameters;
  return r;
}

Report balanced_distortion_statistic(int n, std::size_t orbits, std::size_t max_depth,
                                     std::uint64_t seed) {
  Report r;
  r.name = "balanced-distortion";
  auto rng = substream(seed, 15);
  std::vector<double> minima;
  std::size_t without_return = 0;
  for (std::size_t o = 0; o < orbits; ++o) {
    RauzyState s{random_lengths(rng, n), random_irreducible(rng, n)};
    const PathRecord rec = orbit(s, max_depth, OnBoundary::Stop);
    IMatrix g = identity(n);
    std::optional<Rational> best;
    for (std::size_t i = 0; i < rec.length(); ++i) {
      g = mat_mul(g, inverse_step_matrix(rec.states[i].perm, rec.moves[i]));
      if (!(rec.states[i + 1].perm == s.perm)) continue;
      Cone c;
      c.generator = g;
      const Rational d = distortion(c);
      if (!best || d < *best) best = d;
    }
    if (best) minima.push_back(best->get_d());
    else ++without_return;
  }
  std::sort(minima.begin(), minima.end());
  auto quantile = [&](double q) {
    if (minima.empty()) return 0.0;
    return minima[static_cast<std::size_t>(q * static_cast<double>(minima.size() - 1))];
  };
  r.add("returns_observed", CheckKind::Info, without_return == 0,
        {{"orbits", orbits}, {"without_return", without_return}});
  r.data["min_distortion_quantiles"] = {{"min", quantile(0.0)},
                                        {"q25", quantile(0.25)},
                                        {"median", quantile(0.5)},
                                        {"q75", quantile(0.75)},
                                        {"max", quantile(1.0)}};
  return r;
}

Report verify_euclid_proof(const VerifyConfig& cfg) {
  Report r;
  r.name = "euclid-proof";
  auto rng = substream(cfg.seed, 16);
  std::uniform_int_distribution<long> coord(1, 50);
  std::uniform_int_distribution<unsigned long> index(1, 40);

  bool area_ok = true, ball_ok = true, ratio_ok = true;
  std::size_t built = 0;
  while (built < 200) {
    const RVector lam = make_rvector({ratio(coord(rng), coord(rng)), ratio(coord(rng), coord(rng))});
    Quad2D q;
    try {
      q = build_qn(lam, index(rng));
    } catch (const DomainError&) {
      continue;
    }
    ++built;
    area_ok = area_ok && area(q.polygon()) == qn_area_formula(q);
    ball_ok = ball_ok && max_vertex_distance_squared(q) == ball_radius_squared(q);
    ratio_ok = ratio_ok && qn_area_formula(q) / ball_radius_squared(q) == ball_ratio(q);
  }
  r.add("quad.area_formula", CheckKind::Exact, area_ok, {{"quads", built}});
  r.add("quad.ball_radius", CheckKind::Exact, ball_ok);
  r.add("quad.ball_ratio", CheckKind::Exact, ratio_ok);
  const Quad2D big = build_qn(make_rvector({1, 1}), 10000);
  const double limit = ball_ratio(big).get_d() / std::numbers::pi;
  r.add("quad.limit_4_over_5pi", CheckKind::Exact, std::abs(limit - 4.0 / (5.0 * std::numbers::pi)) < 1e-3,
        {{"ratio_over_pi", limit}});

  bool tplus_ok = true;
  for (int k = 0; k < 200; ++k) {
    const Rational d = ratio(coord(rng), 51);
    const RPair beta{ratio(coord(rng), coord(rng)), ratio(coord(rng), coord(rng))};
    const RPair alpha{d * beta[0], d * beta[1]};
    tplus_ok = tplus_ok && tplus_ratio(alpha, beta) ==
                               area(trapezoid_plus(alpha, beta)) / area(trapezoid(alpha, beta));
  }
  r.add("tplus.ratio_identity", CheckKind::Exact, tplus_ok, {{"cases", 200}});

  std::size_t violations = 0, sweep = 0, overlaps = 0;
  for (std::size_t n = 1; n <= 10; ++n)
    for (int k = 1; k <= 1000; ++k) {
      const RPair beta{1, ratio(k, 20)};
      const Rational common = ratio(static_cast<unsigned long>(n), static_cast<unsigned long>(n + 1));
      const RPair alpha{common * beta[0], common * beta[1]};
      const auto rep = check_euclid_intersection(alpha, beta, n);
      ++sweep;
      if (!rep.chain_holds()) ++violations;
      if (rep.half_overlap) ++overlaps;
    }
  r.add("intersection.implication_chain", CheckKind::Exact, violations == 0,
        {{"sweep", sweep}, {"violations", violations}, {"half_overlap_count", overlaps}});

  for (std::size_t N : {4, 8, 16}) {
    WitnessParams params;
    params.N = N;
    params.mc = {cfg.seed, cfg.samples / 4, cfg.workers};
    const auto w = witness_intersection(make_rvector({1, Rational(89, 55)}), Rational(1, 10), params);
    Report sub = w.checks;
    sub.name = "witness.N" + std::to_string(N);
    r.merge(sub);
    r.data[sub.name] = to_json(w);
  }
  return r;
}

Report verify_rauzy_proof(const VerifyConfig& cfg) {
  Report r;
  const int n = cfg.n;
  r.name = "rauzy-proof.n" + std::to_string(n);
  if (n < 2 || n > 8) throw DomainError("rauzy-proof: n must be in [2, 8]");
  auto rng = substream(cfg.seed, 17);

  std::vector<int> reversed;
  for (int i = n; i >= 1; --i) reversed.push_back(i);
  const Perm base = find_loop_from_standard(Perm::from_bottom_row(reversed)).first;
  r.add("base_is_loop", CheckKind::Exact, is_loop(base), {{"base", base.label()}});

  const RVector lambda0 = random_lengths(rng, n);
  const auto part = distorted_partition(cfg.N, base, 400, [&](const Cone& c) { return contains(c, lambda0); });
  if (part.cones.empty()) {
    r.add("distorted_cone_found", CheckKind::Info, false);
    return r;
  }
  const Cone& cone = part.cones.front();
  const auto norms = column_norms(cone);
  r.add("distorted_cone_found", CheckKind::Info, true, {{"depth", cone.depth()}, {"path", cone.path_label()}});
  r.add("cone.returns_to_base_with_ratio", CheckKind::Exact,
        *cone.end_perm == base &&
            ratio(norms[static_cast<std::size_t>(n - 1)], norms[static_cast<std::size_t>(n - 2)]) >
                Rational(static_cast<unsigned long>(cfg.N)));

  const PathRecord rec = orbit({lambda0, base}, cone.depth(), OnBoundary::Stop);
  r.add("cone.is_orbit_cylinder", CheckKind::Exact,
        rec.length() == cone.depth() && rec.inverse_cocycle == cone.generator &&
            mat_mul(rec.cocycle, cone.generator) == identity(n));

  // Slice between the hyperplanes <x, lambda0> = delta |lambda0|^2 and |lambda0|^2.
  const Rational delta(3, 4);
  const Rational lam2 = dot(lambda0, lambda0);
  std::vector<Rational> alpha, beta;
  for (int i = 0; i < n; ++i) {
    const RVector li = cone.generator.col(i).cast<Rational>();
    beta.push_back(lam2 / dot(li, lambda0));
    alpha.push_back(delta * beta.back());
  }
  const Slice slice = canonical_slice(alpha, beta);
  const Rational b_ratio = beta[static_cast<std::size_t>(n - 2)] / beta[static_cast<std::size_t>(n - 1)];
  const bool eq17 = 2 * b_ratio >= Rational(static_cast<unsigned long>(cfg.N));
  r.add("slice.ratio_condition_at_N", CheckKind::Info, eq17, {{"beta_ratio", str(b_ratio)}, {"N", cfg.N}});
  Integer n_eff;
  const Rational twice = 2 * b_ratio;
  mpz_fdiv_q(n_eff.get_mpz_t(), twice.get_num_mpz_t(), twice.get_den_mpz_t());
  const std::size_t N_eff = n_eff.get_ui();

  const McConfig mc{cfg.seed, cfg.samples, cfg.workers};
  const Rational exact = slice_measure(slice);
  const McEstimate vol = slice_volume_mc(slice, mc);
  r.add("slice.measure_vs_mc", CheckKind::MonteCarlo, vol.consistent_with(exact.get_d()),
        {{"exact", str(exact)}, {"mc", to_json(vol)}});

  const PPlusReport pp = pplus_bound(slice, N_eff, mc);
  r.add("pplus.exact_bound", CheckKind::Exact, pp.exact_pass, to_json(pp));
  r.add("pplus.mc_bound", CheckKind::MonteCarlo, pp.mc_pass && pp.mc.consistent_with(pp.exact_ratio.get_d()));

  // On P+ and at a loop permutation the induction is one Euclid step on
  // the last two coordinates.
  bool euclid_step = true;
  std::size_t tested = 0;
  while (tested < 500) {
    RVector y(n);
    for (int i = 0; i < n; ++i) y(i) = uniform_rational(rng, 0, beta[static_cast<std::size_t>(i)]);
    Rational outer = 0, inner = 0;
    for (int i = 0; i < n; ++i) {
      outer += y(i) / beta[static_cast<std::size_t>(i)];
      inner += y(i) / alpha[static_cast<std::size_t>(i)];
    }
    if (!(outer <= 1 && inner >= 1 && y(n - 2) > y(n - 1))) continue;
    ++tested;
    const Step st = step({y, base});
    const RVector tail = e_step(make_rvector({y(n - 2), y(n - 1)}));
    bool same = st.state.perm == base && st.move == Move::B && st.state.lengths(n - 2) == tail(0) &&
                st.state.lengths(n - 1) == tail(1);
    for (int i = 0; i < n - 2; ++i) same = same && st.state.lengths(i) == y(i);
    euclid_step = euclid_step && same;
  }
  r.add("loop_step_is_euclid", CheckKind::Exact, euclid_step, {{"points", tested}});

  const auto back = estimate_fraction(mc, [&](std::mt19937_64& g) {
    for (;;) {
      Eigen::VectorXd y(n);
      for (int i = 0; i < n; ++i) y(i) = uniform(g, 0.0, beta[static_cast<std::size_t>(i)].get_d());
      if (!in_canonical_slice(slice, y) || !(y(n - 2) > y(n - 1))) continue;
      y(n - 2) -= y(n - 1);
      return in_canonical_slice(slice, y) && y(n - 2) > y(n - 1);
    }
  });
  r.add("pplus.self_overlap_positive", CheckKind::MonteCarlo, back.lower() > 0.0, to_json(back));
  r.data["N_effective"] = N_eff;
  r.data["slice"] = {{"alpha", nlohmann::json::array()}, {"beta", nlohmann::json::array()}};
  for (int i = 0; i < n; ++i) {
    r.data["slice"]["alpha"].push_back(str(alpha[static_cast<std::size_t>(i)]));
    r.data["slice"]["beta"].push_back(str(beta[static_cast<std::size_t>(i)]));
  }
  return r;
}

Report verify_mcf(const VerifyConfig& cfg) {
  Report r;
  r.name = "mcf";
  auto rng = substream(cfg.seed, 18);

  bool telescoping = true, simplex = true, stays = true, guards = true, one_changed = true;
  for (int k = 0; k < 10000; ++k) {
    const RVector v = random_lengths(rng, 3);
    const RVector p = poincare(v);
    telescoping = telescoping && l1_norm(p) == v.maxCoeff() && all_nonnegative(p);
    RVector on = v / l1_norm(v);
    simplex = simplex && l1_norm(daniels_parry(on)) == 1;

    Rational a = random_positive(rng), b = random_positive(rng);
    if (a > b) std::swap(a, b);
    const RVector d = make_rvector({a, b});
    const RVector img = s_tilde(d);
    stays = stays && 0 <= img(0) && img(0) <= img(1) && img(1) <= 1;
    const int hits = (a <= b - a) + (b - a < a && a <= 1 - a) + (1 - a < a);
    guards = guards && hits == 1;

    for (int i = 1; i <= 2; ++i) {
      const RVector t = t_subtractive(v, i);
      int changed = 0;
      for (int c = 0; c < 3; ++c) changed += t(c) != v(c);
      one_changed = one_changed && changed == 1;
    }
  }
  r.add("poincare.telescoping_norm", CheckKind::Exact, telescoping);
  r.add("daniels_parry.on_simplex", CheckKind::Exact, simplex);
  r.add("s_tilde.stays_in_D", CheckKind::Exact, stays);
  r.add("s_tilde.guards_exclusive", CheckKind::Exact, guards);
  r.add("t_subtractive.one_coordinate", CheckKind::Exact, one_changed);

  for (int n = 2; n <= 4; ++n) {
    for (int i : {n - 1, 1}) {
      const auto rep = markov_check(i, n, 10000, cfg.seed);
      const std::string algo = i == n - 1 ? "brun" : "selmer";
      if (n == 2 && algo == "selmer") continue;
      r.add("markov." + algo + ".n" + std::to_string(n), CheckKind::Exact, rep.all_pass(), to_json(rep));
    }
  }

  bool recon = true, digits = true;
  for (int k = 0; k < 1000; ++k) {
    const int n = 3 + k % 2;
    RVector v = random_lengths(rng, n);
    Eigen::Index top;
    v.maxCoeff(&top);
    std::swap(v(0), v(top));
    if (!in_jacobi_perron_domain(v)) continue;
    const auto st = jacobi_perron(v);
    recon = recon && apply(jacobi_perron_matrix(st.digits), st.image) == v && all_nonnegative(st.image);
    digits = digits && st.digits.back() >= 1 &&
             std::all_of(st.digits.begin(), st.digits.end(), [](const Integer& a) { return a >= 0; });
  }
  r.add("jacobi_perron.reconstruction", CheckKind::Exact, recon);
  r.add("jacobi_perron.digit_signs", CheckKind::Exact, digits);

  bool brun_sigma = true;
  for (int k = 0; k < 1000; ++k) {
    Rational a = random_positive(rng), b = random_positive(rng);
    if (a > b) std::swap(a, b);
    RVector u = make_rvector({a, b}), w = u;
    brun_sigma = brun_sigma && brun(u) == e_sigma_step(u);
    for (int s = 0; s < 30; ++s) {
      u = brun(u);
      w = e_sigma_step(w);
      brun_sigma = brun_sigma && std::multiset<Rational>{u(0), u(1)} == std::multiset<Rational>{w(0), w(1)};
    }
  }
  r.add("brun_n2_is_e_sigma", CheckKind::Exact, brun_sigma);
  return r;
}

}  // namespace rauzy
