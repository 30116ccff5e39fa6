// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include "rauzy/cones.hpp"
#include "rauzy/euclid.hpp"
#include "rauzy/iet.hpp"
#include "rauzy/induction.hpp"
#include "rauzy/mcf.hpp"
#include "rauzy/permutation.hpp"
#include "rauzy/proofgeom.hpp"
#include "support.hpp"

namespace rauzy {
namespace {

constexpr std::uint64_t kSeed = 20240101;
constexpr std::uint64_t kSecondSeed = 977;
constexpr std::size_t kWorkers = 8;
constexpr double kSigmas = 3.0;
constexpr double kEq8Tolerance = 1e-3;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Criterion = std::function<Outcome()>;

Perm row(std::initializer_list<int> r) { return Perm::from_bottom_row(r); }

// 1. Rauzy combinatorics for n = 2, 3, 4.
Outcome rauzy_combinatorics() {
  Outcome o;
  std::ostringstream d;
  const auto g2 = rauzy_class(row({2, 1}));
  const bool two = g2.size() == 1 && g2.followers[0][0] == 0 && g2.followers[0][1] == 0;

  const auto g3 = rauzy_class(row({2, 3, 1}));
  const std::set<std::string> nodes{"231", "321", "312"};
  std::set<std::string> got;
  for (const auto& p : g3.nodes) got.insert(p.label());
  const std::set<std::tuple<std::string, char, std::string>> expect{
      {"231", 'a', "231"}, {"231", 'b', "321"}, {"321", 'a', "312"},
      {"321", 'b', "231"}, {"312", 'a', "321"}, {"312", 'b', "312"}};
  std::set<std::tuple<std::string, char, std::string>> edges;
  for (std::size_t i = 0; i < g3.size(); ++i) {
    edges.insert({g3.nodes[i].label(), 'a', g3.follower(i, Move::A).label()});
    edges.insert({g3.nodes[i].label(), 'b', g3.follower(i, Move::B).label()});
  }
  const bool three = got == nodes && edges == expect;

  const auto classes = rauzy_classes(4);
  std::multiset<std::size_t> sizes;
  std::set<std::vector<int>> seen;
  std::size_t total = 0;
  for (const auto& c : classes) {
    sizes.insert(c.size());
    for (const auto& p : c.nodes) {
      seen.insert(p.map());
      ++total;
    }
  }
  const auto brute = testing::irreducible_maps_oracle(4);
  const bool four = classes.size() == 2 && sizes == std::multiset<std::size_t>{6, 7} && total == 13 &&
                    seen.size() == 13 && brute.size() == 13 &&
                    std::includes(brute.begin(), brute.end(), seen.begin(), seen.end());
  o.pass = two && three && four;
  d << "n2 " << (two ? "ok" : "bad") << ", n3 " << edges.size() << " edges, n4 " << classes.size()
    << " classes of sizes";
  for (auto s : sizes) d << ' ' << s;
  d << " covering " << seen.size() << "/" << brute.size();
  o.detail = d.str();
  return o;
}

// 2. Standard and loop permutations and degrees, n <= 7.
Outcome lemma_suite() {
  std::size_t classes = 0, perms = 0, bad = 0;
  for (int n = 2; n <= 7; ++n)
    for (const auto& g : rauzy_classes(n)) {
      ++classes;
      bool has_standard = false, has_loop = false;
      for (std::size_t i = 0; i < g.size(); ++i) {
        const Perm& p = g.nodes[i];
        ++perms;
        has_standard = has_standard || is_standard(p);
        has_loop = has_loop || is_loop(p);
        if (p(n - 1) == n && !(move_b(p) == p)) ++bad;
        if (!g.contains(g.follower(i, Move::A)) || !g.contains(g.follower(i, Move::B))) ++bad;
      }
      for (auto deg : g.in_degrees())
        if (deg != 2) ++bad;
      if (!has_standard || !has_loop) ++bad;
    }
  return {bad == 0, std::to_string(classes) + " classes, " + std::to_string(perms) + " permutations, " +
                        std::to_string(bad) + " violations"};
}

// 3. One Rauzy step against the first-return map.
Outcome induction_vs_first_return() {
  testing::Gen gen(kSeed);
  std::size_t points = 0, mismatches = 0, breakpoints = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(gen.integer(2, 5));
    const RauzyState s{gen.positive(n), gen.irreducible(n)};
    const Step st = step(s);
    const Iet t = Iet::build(s.lengths, s.perm);
    const Iet induced = Iet::build(st.state.lengths, st.state.perm);
    const Rational cut = induced.total_length();
    std::size_t here = 0;
    while (here < 100) {
      const Rational x = gen.rational(0, cut);
      try {
        if (first_return(t, cut, x, 100000).image != induced(x)) ++mismatches;
        ++here;
      } catch (const BreakpointError&) {
        ++breakpoints;
      }
    }
    points += here;
  }
  return {mismatches == 0, std::to_string(points) + " points, " + std::to_string(mismatches) + " mismatches, " +
                               std::to_string(breakpoints) + " breakpoint draws redrawn"};
}

// 4. Continued fraction digits against repeated floor-and-invert.
Outcome euclid_cf_bridge() {
  testing::Gen gen(kSeed + 4);
  std::size_t bad = 0;
  for (int k = 0; k < 1000; ++k) {
    const long p = static_cast<long>(gen.integer(1, 100000));
    const long r = static_cast<long>(gen.integer(1, 100000));
    const auto digits = cf_digits(expansion(make_rvector({p, r}), static_cast<std::size_t>(p + r)));
    const auto oracle = testing::floor_cf_oracle(testing::q(p, r));
    bool same = digits.size() == oracle.size();
    for (std::size_t i = 0; same && i < digits.size(); ++i)
      same = Integer(static_cast<unsigned long>(digits[i])) == oracle[i];
    if (!same) ++bad;
  }
  return {bad == 0, "1000 rationals, " + std::to_string(bad) + " mismatches"};
}

// 5. Euclid cone formulas at every depth up to 12.
Outcome cone_formulas() {
  const Rational alpha = testing::q(3, 2);
  std::vector<Cone> level{euclid_root()};
  std::size_t checked = 0, bad = 0;
  for (std::size_t k = 1; k <= 12; ++k) {
    std::vector<Cone> next;
    for (const auto& c : level)
      for (auto& ch : children(c)) next.push_back(std::move(ch));
    level = std::move(next);
    Rational sum = 0;
    for (const auto& c : level) {
      ++checked;
      const Rational m = measure_2d_simplex_cap(c, alpha);
      sum += m;
      const Integer n1 = l1_norm(c.generator.col(0)), n2 = l1_norm(c.generator.col(1));
      const RPolygon tri{{0, 0},
                         {alpha * Rational(c.generator(0, 0)) / n1, alpha * Rational(c.generator(1, 0)) / n1},
                         {alpha * Rational(c.generator(0, 1)) / n2, alpha * Rational(c.generator(1, 1)) / n2}};
      if (m != area(tri)) ++bad;
      if (n1 * n2 < static_cast<unsigned long>(k + 1)) ++bad;
    }
    if (sum != alpha * alpha / 2) ++bad;
  }
  return {bad == 0, std::to_string(checked) + " cones to depth 12, " + std::to_string(bad) + " violations"};
}

// 6. The ball ratio limit.
Outcome ball_limit() {
  const double at = ball_ratio(build_qn(make_rvector({1, 1}), 10000)).get_d() / std::numbers::pi;
  const double limit = 4.0 / (5.0 * std::numbers::pi);
  std::ostringstream d;
  d.precision(8);
  d << "n=10^4 ratio " << at << " vs " << limit << ", gap " << std::abs(at - limit);
  return {std::abs(at - limit) <= kEq8Tolerance, d.str()};
}

// 7. Trapezoid identities and the intersection chain.
Outcome trapezoid_identities() {
  testing::Gen gen(kSeed + 7);
  std::size_t bad = 0;
  for (int k = 0; k < 200; ++k) {
    const Rational b1 = gen.rational(0, 10), b2 = gen.rational(0, 10), d = gen.rational(0, 1);
    const RPair alpha{d * b1, d * b2}, beta{b1, b2};
    const Rational t = area(trapezoid(alpha, beta));
    const RPolygon plus = clip(trapezoid(alpha, beta), HalfPlane<Rational>{1, -1, 0});
    if (tplus_ratio(alpha, beta) != area(plus) / t) ++bad;
  }
  std::size_t violations = 0, sweep = 0, strong = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    const Rational c = ratio(static_cast<unsigned long>(n), static_cast<unsigned long>(n + 1));
    for (long k = 1; k <= 1000; ++k) {
      const RPair beta{1, testing::q(k, 20)};
      const auto r = check_euclid_intersection({c * beta[0], c * beta[1]}, beta, n);
      ++sweep;
      if (r.ratio_bound) ++strong;
      if (!r.chain_holds()) ++violations;
    }
  }
  return {bad == 0 && violations == 0,
          "200 ratio sets, " + std::to_string(bad) + " mismatches; sweep " + std::to_string(sweep) +
              " points (" + std::to_string(strong) + " above 2n+1), " + std::to_string(violations) + " violations"};
}

// 8. Slice volume and the P+ bound.
Outcome slice_identities() {
  std::ostringstream d;
  d.precision(6);
  bool pass = true;
  const std::map<int, std::vector<long>> betas{{3, {2, 3, 5}}, {4, {1, 2, 2, 3}}};
  for (const auto& [n, bs] : betas) {
    std::vector<Rational> alpha, beta;
    for (long b : bs) {
      beta.push_back(b);
      alpha.push_back(Rational(b) * testing::q(3, 5));
    }
    const Slice s = canonical_slice(alpha, beta);
    const auto mc = slice_volume_mc(s, {kSeed + static_cast<std::uint64_t>(n), 10000000, kWorkers});
    const bool ok = mc.consistent_with(slice_measure(s).get_d(), kSigmas);
    pass = pass && ok;
    d << "n" << n << " mu(P)=" << slice_measure(s).get_d() << " mc " << mc.estimate << "+-" << mc.std_error << "; ";
  }
  struct Case {
    std::vector<long> beta;
    std::size_t N;
  };
  for (const auto& c : {Case{{9, 1}, 18}, Case{{1, 10, 1}, 20}, Case{{3, 40, 2}, 40}}) {
    std::vector<Rational> alpha, beta;
    for (long b : c.beta) {
      beta.push_back(b);
      alpha.push_back(Rational(b) / 2);
    }
    const auto r = pplus_bound(canonical_slice(alpha, beta), c.N, {kSeed + c.N, 10000000, kWorkers});
    pass = pass && r.exact_pass && r.mc_pass;
    d << "P+ N=" << c.N << " bound " << r.bound.get_d() << " exact " << r.exact_ratio.get_d() << " mc "
      << r.mc.estimate << "; ";
  }
  return {pass, d.str()};
}

// 9. Loop extension column law.
Outcome loop_extension_law() {
  testing::Gen gen(kSeed + 9);
  std::size_t loops = 0, cones = 0, bad = 0;
  for (int n = 2; n <= 6; ++n)
    for (const auto& p : irreducible_permutations(n)) {
      if (!is_loop(p)) continue;
      ++loops;
      std::vector<Cone> bases{rauzy_root(p)};
      Cone walk = rauzy_root(p);
      for (int k = 0; k < 24 && bases.size() < 4; ++k) {
        walk = children(walk)[static_cast<std::size_t>(gen.integer(0, 1))];
        if (is_loop(*walk.end_perm)) bases.push_back(walk);
      }
      for (const auto& c : bases)
        for (std::size_t N = 0; N <= 50; ++N) {
          ++cones;
          const Cone e = extend_loop(c, N);
          for (int j = 0; j < n - 1; ++j)
            if (e.generator.col(j) != c.generator.col(j)) ++bad;
          for (int i = 0; i < n; ++i)
            if (e.generator(i, n - 1) != c.generator(i, n - 1) + Integer(static_cast<unsigned long>(N)) * c.generator(i, n - 2))
              ++bad;
        }
    }
  return {bad == 0, std::to_string(loops) + " loop permutations, " + std::to_string(cones) + " extensions, " +
                        std::to_string(bad) + " violations"};
}

// 10. Intersection witness.
Outcome intersection_witness() {
  std::ostringstream d;
  d.precision(4);
  bool pass = true;
  for (std::size_t N : {4, 8, 16}) {
    std::vector<WitnessReport> runs;
    for (std::uint64_t seed : {kSeed, kSecondSeed}) {
      WitnessParams p;
      p.N = N;
      p.mc = {seed, 100000, kWorkers};
      runs.push_back(witness_intersection(make_rvector({1, testing::q(89, 55)}), testing::q(1, 10), p));
    }
    const bool found = runs[0].found_cone && runs[1].found_cone;
    const bool positive = found && runs[0].success() && runs[1].success();
    const bool stable = found && agree(*runs[0].overlap, *runs[1].overlap, kSigmas);
    const bool exact = found && runs[0].checks.ok() && runs[1].checks.ok();
    pass = pass && positive && stable && exact;
    d << "N=" << N;
    if (found)
      d << " overlap " << runs[0].overlap->estimate << "/" << runs[1].overlap->estimate << " (sigma "
        << runs[0].overlap->std_error << ")" << (stable ? " agree" : " disagree");
    else
      d << " no distorted cone";
    d << "; ";
  }
  return {pass, d.str()};
}

// 11. Brun and Selmer Markov property, Jacobi-Perron, Brun at n = 2.
Outcome mcf_suite() {
  std::ostringstream d;
  bool pass = true;
  for (int n = 2; n <= 4; ++n)
    for (int i : std::set<int>{n - 1, 1}) {  // Selmer and Brun coincide at n = 2
      const auto r = markov_check(i, n, 10000, kSeed);
      const std::string name = i == n - 1 ? "brun" : "selmer";
      std::size_t failed = 0;
      for (const auto& b : r.branches) failed += b.failed;
      pass = pass && r.all_pass();
      d << name << " n" << n << " " << (r.all_pass() ? "pass" : "FAIL (" + std::to_string(failed) + " of " +
                                                                    std::to_string(10000 * n) + " targets)")
        << "; ";
    }
  testing::Gen gen(kSeed + 11);
  std::size_t jp_bad = 0;
  for (int k = 0; k < 1000; ++k) {
    const int n = static_cast<int>(gen.integer(2, 6));
    RVector v = gen.positive(n);
    Eigen::Index top = 0;
    v.maxCoeff(&top);
    std::swap(v(0), v(top));
    const auto st = jacobi_perron(v);
    if (apply(jacobi_perron_matrix(st.digits), st.image) != v) ++jp_bad;
  }
  std::size_t brun_bad = 0;
  for (int k = 0; k < 1000; ++k) {
    RVector u = gen.positive(2);
    if (u(0) > u(1)) std::swap(u(0), u(1));
    RVector w = u;
    for (int s = 0; s < 20 && all_positive(u); ++s) {
      u = brun(u);
      w = e_sigma_step(w);
      if (std::min(u(0), u(1)) != std::min(w(0), w(1)) || std::max(u(0), u(1)) != std::max(w(0), w(1))) ++brun_bad;
    }
  }
  pass = pass && jp_bad == 0 && brun_bad == 0;
  d << "jacobi-perron " << jp_bad << " bad of 1000; brun n2 vs sorted euclid " << brun_bad << " mismatches";
  return {pass, d.str()};
}

}  // namespace
}  // namespace rauzy

int main() {
  using namespace rauzy;
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"rauzy combinatorics", rauzy_combinatorics},
      {"lemma suite n<=7", lemma_suite},
      {"induction vs first return", induction_vs_first_return},
      {"euclid/cf bridge", euclid_cf_bridge},
      {"cone formulas depth<=12", cone_formulas},
      {"ball ratio limit", ball_limit},
      {"trapezoid identities", trapezoid_identities},
      {"slice identities", slice_identities},
      {"loop extension column law", loop_extension_law},
      {"intersection witness", intersection_witness},
      {"mcf suite", mcf_suite},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s %2zu %s [%.1fs]: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
