#include "rauzy/iet.hpp"

#include <algorithm>

namespace rauzy {

Iet Iet::build(RVector lengths, Perm perm) {
  const auto n = lengths.size();
  if (n != perm.size()) throw DimensionError("Iet::build: lengths and permutation sizes differ");
  if (!all_positive(lengths)) throw DomainError("Iet::build: lengths must be strictly positive");

  Iet t;
  t.breaks_.assign(static_cast<std::size_t>(n + 1), Rational(0));
  t.image_breaks_.assign(static_cast<std::size_t>(n + 1), Rational(0));
  for (int i = 1; i <= n; ++i) {
    t.breaks_[i] = t.breaks_[i - 1] + lengths(i - 1);
    t.image_breaks_[i] = t.image_breaks_[i - 1] + lengths(perm.inverse(i) - 1);
  }
  t.offsets_.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    t.offsets_[i - 1] = t.image_breaks_[perm(i) - 1] - t.breaks_[i - 1];
  t.lengths_ = std::move(lengths);
  t.perm_ = std::move(perm);
  return t;
}

int Iet::interval_of(const Rational& x) const {
  if (x < 0 || x >= total_length()) throw DomainError("Iet: point outside [0, |lambda|)");
  // first breakpoint strictly greater than x closes the interval
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  return static_cast<int>(it - breaks_.begin());
}

bool Iet::is_interior_breakpoint(const Rational& x) const {
  return std::binary_search(breaks_.begin() + 1, breaks_.end() - 1, x);
}

Rational Iet::operator()(const Rational& x) const {
  return x + offsets_[static_cast<std::size_t>(interval_of(x) - 1)];
}

FirstReturn first_return(const Iet& t, const Rational& cut, const Rational& x, std::size_t cap) {
  if (cut <= 0 || cut > t.total_length())
    throw DomainError("first_return: cut must lie in (0, |lambda|]");
  if (x < 0 || x >= cut) throw DomainError("first_return: start point outside [0, cut)");
  Rational y = t(x);
  std::size_t time = 1;
  while (y >= cut) {
    if (time >= cap) throw IterationCapError("first_return: iteration cap exceeded");
    if (t.is_interior_breakpoint(y))
      throw BreakpointError("first_return: orbit hit breakpoint " + to_string(y));
    y = t(y);
    ++time;
  }
  return {y, time};
}

nlohmann::json to_json(const Iet& t) {
  nlohmann::json j;
  j["lengths"] = to_json(t.lengths());
  j["permutation"] = to_json(t.permutation());
  auto list = [](const std::vector<Rational>& v) {
    auto a = nlohmann::json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
  };
  j["breakpoints"] = list(t.breakpoints());
  j["image_breakpoints"] = list(t.image_breakpoints());
  j["offsets"] = list(t.offsets());
  return j;
}

}  // namespace rauzy
