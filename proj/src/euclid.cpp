#include "rauzy/euclid.hpp"

namespace rauzy {

namespace {

void require_planar_nonnegative(const RVector& v, const char* who) {
  if (v.size() != 2) throw DimensionError(std::string(who) + ": expected a 2-vector");
  if (!all_nonnegative(v)) throw DomainError(std::string(who) + ": negative coordinate");
}

}  // namespace

const char* to_string(EuclidStep s) { return s == EuclidStep::B1 ? "B1" : "B2"; }

IMatrix elementary(EuclidStep s) {
  return s == EuclidStep::B1 ? elementary_b1() : elementary_b2();
}

EuclidStep e_branch(const RVector& v) {
  require_planar_nonnegative(v, "e_step");
  return v(0) >= v(1) ? EuclidStep::B1 : EuclidStep::B2;
}

RVector e_step(const RVector& v) {
  RVector out = v;
  if (e_branch(v) == EuclidStep::B1) out(0) -= v(1);
  else out(1) -= v(0);
  return out;
}

RVector e_sigma_step(const RVector& v) {
  require_planar_nonnegative(v, "e_sigma_step");
  if (v(0) <= v(1)) return make_rvector({v(0), v(1) - v(0)});
  return make_rvector({v(1), v(0) - v(1)});
}

RVector e_pi_step(const RVector& v) {
  require_planar_nonnegative(v, "e_pi_step");
  if (v(0) > v(1)) throw DomainError("e_pi_step: input must satisfy lambda_1 <= lambda_2");
  const Rational diff = v(1) - v(0);
  if (v(0) <= diff) return make_rvector({v(0), diff});
  return make_rvector({diff, v(0)});
}

EuclidExpansion expansion(const RVector& v, std::size_t depth) {
  require_planar_nonnegative(v, "expansion");
  EuclidExpansion e;
  e.cone_matrix = identity(2);
  e.remainder = v;
  e.terminated = v(0) == 0 || v(1) == 0;
  while (!e.terminated && e.steps.size() < depth) {
    const EuclidStep s = e_branch(e.remainder);
    e.steps.push_back(s);
    e.cone_matrix = mat_mul(e.cone_matrix, elementary(s));
    e.remainder = e_step(e.remainder);
    e.terminated = e.remainder(0) == 0 || e.remainder(1) == 0;
  }
  return e;
}

std::vector<std::size_t> cf_digits(const EuclidExpansion& e) {
  if (e.steps.empty()) throw DomainError("cf_digits: empty expansion");
  std::vector<std::size_t> digits;
  EuclidStep current = EuclidStep::B1;
  std::size_t run = 0;
  for (EuclidStep s : e.steps) {
    if (s == current) {
      ++run;
    } else {
      digits.push_back(run);
      current = s;
      run = 1;
    }
  }
  digits.push_back(run);
  if (e.terminated && digits.size() > 1 && digits.back() == 1) {
    digits.pop_back();
    ++digits.back();
  }
  return digits;
}

nlohmann::json to_json(const EuclidExpansion& e) {
  nlohmann::json j;
  j["steps"] = nlohmann::json::array();
  for (auto s : e.steps) j["steps"].push_back(to_string(s));
  j["cone_matrix"] = to_json(e.cone_matrix);
  j["terminated"] = e.terminated;
  j["remainder"] = to_json(e.remainder);
  if (!e.steps.empty()) j["cf_digits"] = cf_digits(e);
  return j;
}

}  // namespace rauzy
