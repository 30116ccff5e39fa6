#include "rauzy/mcf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rauzy/montecarlo.hpp"

namespace rauzy {

namespace {

void require_nonnegative(const RVector& v, const char* who) {
  if (!all_nonnegative(v)) throw DomainError(std::string(who) + ": negative coordinate");
}

void require_size(const RVector& v, Eigen::Index n, const char* who) {
  if (v.size() != n) throw DimensionError(std::string(who) + ": expected " + std::to_string(n) + " coordinates");
}

RVector sorted(const RVector& v) {
  RVector out = v;
  std::sort(out.data(), out.data() + out.size());
  return out;
}

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace

SortView sort_view(const RVector& v) {
  std::vector<int> idx(static_cast<std::size_t>(v.size()));
  std::iota(idx.begin(), idx.end(), 1);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return v(a - 1) < v(b - 1); });
  // sigma(k) = idx[k-1]; as a one-line map
  return {v, Perm::from_map(idx)};
}

RVector poincare(const RVector& v) {
  require_size(v, 3, "poincare");
  require_nonnegative(v, "poincare");
  const SortView s = sort_view(v);
  return make_rvector({s.kth_smallest(1), s.kth_smallest(2) - s.kth_smallest(1),
                       s.kth_smallest(3) - s.kth_smallest(2)});
}

RVector daniels_parry(const RVector& v) {
  require_size(v, 3, "daniels_parry");
  require_nonnegative(v, "daniels_parry");
  if (l1_norm(v) != 1) throw DomainError("daniels_parry: input must lie on the simplex");
  RVector p = poincare(v);
  const Rational norm = l1_norm(p);
  for (Eigen::Index i = 0; i < p.size(); ++i) p(i) /= norm;
  return p;
}

RVector fully_subtractive(const RVector& v) {
  require_size(v, 3, "fully_subtractive");
  require_nonnegative(v, "fully_subtractive");
  if (!(v(0) <= v(1) && v(1) <= v(2))) throw DomainError("fully_subtractive: input must be sorted");
  return sorted(make_rvector({v(0), v(1) - v(0), v(2) - v(0)}));
}

int s_tilde_branch(const RVector& v) {
  require_size(v, 2, "s_tilde");
  const Rational& a = v(0);
  const Rational& b = v(1);
  if (!(0 <= a && a <= b && b <= 1)) throw DomainError("s_tilde: input outside D");
  if (a <= b - a) return 1;
  if (a <= 1 - a) return 2;
  return 3;
}

RVector s_tilde(const RVector& v) {
  const Rational& a = v(0);
  const Rational& b = v(1);
  switch (s_tilde_branch(v)) {
    case 1: return make_rvector({a / (1 - a), (b - a) / (1 - a)});
    case 2: return make_rvector({(b - a) / (1 - a), a / (1 - a)});
    default: return make_rvector({(b - a) / a, (1 - a) / a});
  }
}

RVector t_subtractive(const RVector& v, int i) {
  const int n = static_cast<int>(v.size());
  if (n < 2) throw DimensionError("t_subtractive: need at least 2 coordinates");
  if (i < 1 || i > n - 1) throw DomainError("t_subtractive: need 1 <= i <= n-1");
  require_nonnegative(v, "t_subtractive");
  const SortView s = sort_view(v);
  RVector out = v;
  out(s.at(n) - 1) -= s.kth_smallest(i);
  return out;
}

bool MarkovReport::all_pass() const {
  return std::all_of(branches.begin(), branches.end(),
                     [](const MarkovBranch& b) { return b.failed == 0 && b.pieces_invertible; });
}

MarkovReport markov_check(int i, int n, std::size_t samples, std::uint64_t seed) {
  if (n < 2) throw DomainError("markov_check: need n >= 2");
  if (i < 1 || i > n - 1) throw DomainError("markov_check: need 1 <= i <= n-1");
  MarkovReport r;
  r.i = i;
  r.n = n;
  r.samples = samples;
  r.seed = seed;
  for (int j = 1; j <= n; ++j) {
    MarkovBranch b;
    b.j = j;
    for (int k = 1; k <= n; ++k) {
      if (k == j) continue;
      IMatrix m = identity(n);
      m(j - 1, k - 1) = -1;
      ++b.pieces;
      b.pieces_invertible = b.pieces_invertible && is_unimodular(m);
    }
    auto rng = substream(seed, static_cast<std::size_t>(j));
    std::size_t drawn = 0;
    while (drawn < samples) {
      RVector mu(n);
      for (int k = 0; k < n; ++k) mu(k) = uniform_rational(rng, 0, 1);
      RVector s = sorted(mu);
      bool distinct = true;
      for (int k = 1; k < n; ++k) distinct = distinct && s(k) != s(k - 1);
      if (!distinct) continue;
      ++drawn;
      std::vector<Rational> others;
      for (int k = 0; k < n; ++k)
        if (k != j - 1) others.push_back(mu(k));
      std::sort(others.begin(), others.end());
      RVector lambda = mu;
      lambda(j - 1) += others[static_cast<std::size_t>(i - 1)];
      const bool in_branch = sort_view(lambda).at(n) == j;
      if (in_branch && t_subtractive(lambda, i) == mu) {
        ++b.passed;
      } else {
        if (b.failed == 0) b.counterexample = mu;
        ++b.failed;
      }
    }
    r.branches.push_back(std::move(b));
  }
  return r;
}

bool in_jacobi_perron_domain(const RVector& v) {
  if (v.size() < 2 || !all_nonnegative(v) || !(v(1) > 0)) return false;
  for (Eigen::Index k = 1; k < v.size(); ++k)
    if (v(0) < v(k)) return false;
  return true;
}

JacobiPerronStep jacobi_perron(const RVector& v) {
  if (v.size() < 2) throw DimensionError("jacobi_perron: need at least 2 coordinates");
  if (!in_jacobi_perron_domain(v))
    throw DomainError("jacobi_perron: need lambda_2 > 0 and lambda_1 maximal");
  const Eigen::Index n = v.size();
  const Rational& l2 = v(1);
  JacobiPerronStep st;
  st.image.resize(n);
  st.image(0) = l2;
  for (Eigen::Index j = 2; j <= n - 1; ++j) {
    const Integer a = floor_of(v(j) / l2);
    st.digits.push_back(a);
    st.image(j - 1) = v(j) - a * l2;
  }
  const Integer an = floor_of(v(0) / l2);
  st.digits.push_back(an);
  st.image(n - 1) = v(0) - an * l2;
  return st;
}

IMatrix jacobi_perron_matrix(const std::vector<Integer>& digits) {
  const Eigen::Index n = static_cast<Eigen::Index>(digits.size()) + 1;
  IMatrix m = IMatrix::Zero(n, n);
  // lambda_1 = out_n + a_n out_1, lambda_2 = out_1,
  // lambda_{j+1} = out_j + a_j out_1 for 2 <= j <= n-1
  m(0, n - 1) = 1;
  m(0, 0) = digits.back();
  m(1, 0) = 1;
  for (Eigen::Index j = 2; j <= n - 1; ++j) {
    m(j, j - 1) = 1;
    m(j, 0) = digits[static_cast<std::size_t>(j - 2)];
  }
  return m;
}

JacobiPerronOrbit jacobi_perron_orbit(const RVector& v, std::size_t k) {
  JacobiPerronOrbit orbit;
  orbit.points.push_back(v);
  for (std::size_t step = 0; step < k; ++step) {
    if (!in_jacobi_perron_domain(orbit.points.back())) {
      orbit.left_domain = true;
      break;
    }
    auto st = jacobi_perron(orbit.points.back());
    orbit.digits.push_back(std::move(st.digits));
    orbit.points.push_back(std::move(st.image));
  }
  return orbit;
}

nlohmann::json to_json(const MarkovReport& r) {
  nlohmann::json j;
  j["i"] = r.i;
  j["n"] = r.n;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["tie_rule"] = "stable sort, lower index first";
  j["branches"] = nlohmann::json::array();
  for (const auto& b : r.branches) {
    nlohmann::json e{{"j", b.j},
                     {"pieces", b.pieces},
                     {"pieces_invertible", b.pieces_invertible},
                     {"passed", b.passed},
                     {"failed", b.failed}};
    if (b.failed > 0) e["counterexample"] = to_json(b.counterexample);
    j["branches"].push_back(std::move(e));
  }
  j["all_pass"] = r.all_pass();
  return j;
}

}  // namespace rauzy
