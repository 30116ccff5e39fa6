#include "rauzy/cones.hpp"

#include <algorithm>
#include <sstream>

#include "rauzy/induction.hpp"

namespace rauzy {

std::string Cone::path_label() const {
  std::string out;
  if (kind == ConeKind::Euclid) {
    for (std::size_t i = 0; i < euclid_path.size(); ++i) {
      if (i > 0) out += ',';
      out += to_string(euclid_path[i]);
    }
  } else {
    for (auto m : rauzy_path) out.push_back(to_char(m));
  }
  return out;
}

Cone euclid_root() {
  Cone c;
  c.generator = identity(2);
  c.kind = ConeKind::Euclid;
  return c;
}

Cone rauzy_root(const Perm& base) {
  if (!is_irreducible(base)) throw DomainError("rauzy_root: reducible base permutation");
  Cone c;
  c.generator = identity(base.size());
  c.kind = ConeKind::Rauzy;
  c.base_perm = base;
  c.end_perm = base;
  return c;
}

namespace {

Cone extend(const Cone& c, EuclidStep s) {
  Cone out = c;
  out.generator = mat_mul(c.generator, elementary(s));
  out.euclid_path.push_back(s);
  return out;
}

Cone extend(const Cone& c, Move m) {
  Cone out = c;
  const Perm& at = *c.end_perm;
  out.generator = mat_mul(c.generator, inverse_step_matrix(at, m));
  out.rauzy_path.push_back(m);
  out.end_perm = apply_move(at, m);
  return out;
}

Integer product(const std::vector<Integer>& xs) {
  Integer p = 1;
  for (const auto& x : xs) p *= x;
  return p;
}

}  // namespace

Cone cone_of_path(std::span<const EuclidStep> path) {
  Cone c = euclid_root();
  for (auto s : path) c = extend(c, s);
  return c;
}

Cone cone_of_path(std::span<const Move> path, const Perm& base) {
  Cone c = rauzy_root(base);
  for (auto m : path) c = extend(c, m);
  return c;
}

Cone cone_of_walk(std::span<const Perm> walk) {
  if (walk.empty()) throw DomainError("cone_of_walk: empty walk");
  Cone c = rauzy_root(walk.front());
  for (std::size_t i = 1; i < walk.size(); ++i) {
    const Perm& at = *c.end_perm;
    if (move_a(at) == walk[i]) c = extend(c, Move::A);
    else if (move_b(at) == walk[i]) c = extend(c, Move::B);
    else throw DomainError("cone_of_walk: " + walk[i].label() + " does not follow " + at.label());
  }
  return c;
}

std::vector<Cone> children(const Cone& c) {
  if (c.kind == ConeKind::Euclid) return {extend(c, EuclidStep::B1), extend(c, EuclidStep::B2)};
  return {extend(c, Move::A), extend(c, Move::B)};
}

std::vector<Integer> column_norms(const Cone& c) {
  std::vector<Integer> norms;
  norms.reserve(static_cast<std::size_t>(c.generator.cols()));
  for (Eigen::Index j = 0; j < c.generator.cols(); ++j) norms.push_back(l1_norm(c.generator.col(j)));
  return norms;
}

bool contains(const Cone& c, const RVector& v) {
  if (v.size() != c.dimension()) throw DimensionError("contains: dimension mismatch");
  return all_nonnegative(apply(unimodular_inverse(c.generator), v));
}

Rational distortion(const Cone& c) {
  const auto norms = column_norms(c);
  const auto [lo, hi] = std::minmax_element(norms.begin(), norms.end());
  return ratio(*hi, *lo);
}

Rational measure_2d_simplex_cap(const Cone& c, const Rational& alpha) {
  if (c.dimension() != 2) throw DimensionError("measure_2d_simplex_cap: cone is not 2-dimensional");
  const auto norms = column_norms(c);
  return alpha * alpha / (2 * Rational(norms[0] * norms[1]));
}

Rational simplex_volume_fraction(const Cone& c) { return ratio(1, product(column_norms(c))); }

bool cone_contains(const Cone& outer, const Cone& inner) {
  if (outer.dimension() != inner.dimension()) throw DimensionError("cone_contains: dimension mismatch");
  return all_nonnegative(mat_mul(unimodular_inverse(outer.generator), inner.generator));
}

Rational simplex_volume_ratio(const Cone& sub, const Cone& super) {
  if (!cone_contains(super, sub)) throw DomainError("simplex_volume_ratio: sub is not contained in super");
  return ratio(product(column_norms(super)), product(column_norms(sub)));
}

Cone extend_loop(const Cone& c, std::size_t N) {
  Cone out = c;
  if (c.kind == ConeKind::Euclid) {
    for (std::size_t i = 0; i < N; ++i) out = extend(out, EuclidStep::B1);
    return out;
  }
  if (!is_loop(*c.end_perm))
    throw DomainError("extend_loop: " + c.end_perm->label() + " is not a loop permutation");
  for (std::size_t i = 0; i < N; ++i) out = extend(out, Move::B);
  return out;
}

namespace {

template <typename Keep>
DistortedPartition walk_tree(const Cone& root, std::size_t depth_cap, const ConeFilter& filter,
                             Keep keep) {
  DistortedPartition result;
  result.depth_cap = depth_cap;
  result.uncovered = 0;
  if (depth_cap == 0) {
    result.uncovered = 1;
    result.open_cones = 1;
    return result;
  }
  // depth-first, children pushed in reverse so output is path-lexicographic
  std::vector<Cone> stack;
  auto first = children(root);
  for (auto it = first.rbegin(); it != first.rend(); ++it) stack.push_back(std::move(*it));
  while (!stack.empty()) {
    Cone c = std::move(stack.back());
    stack.pop_back();
    if (filter && !filter(c)) continue;
    if (keep(c)) {
      result.cones.push_back(std::move(c));
      continue;
    }
    if (c.depth() >= depth_cap) {
      result.uncovered += simplex_volume_fraction(c);
      ++result.open_cones;
      continue;
    }
    auto next = children(c);
    for (auto it = next.rbegin(); it != next.rend(); ++it) stack.push_back(std::move(*it));
  }
  return result;
}

}  // namespace

DistortedPartition euclid_distorted_partition(std::size_t N, std::size_t depth_cap,
                                              const ConeFilter& filter) {
  const Rational bound(static_cast<unsigned long>(N));
  return walk_tree(euclid_root(), depth_cap, filter,
                   [&](const Cone& c) { return distortion(c) > bound; });
}

DistortedPartition distorted_partition(std::size_t N, const Perm& base, std::size_t depth_cap,
                                       const ConeFilter& filter) {
  if (!is_loop(base)) throw DomainError("distorted_partition: base must be a loop permutation");
  const Rational bound(static_cast<unsigned long>(N));
  const Eigen::Index n = base.size();
  return walk_tree(rauzy_root(base), depth_cap, filter, [&](const Cone& c) {
    if (!(*c.end_perm == base)) return false;
    const Integer last = l1_norm(c.generator.col(n - 1));
    const Integer before = l1_norm(c.generator.col(n - 2));
    return ratio(last, before) > bound;
  });
}

nlohmann::json to_json(const Cone& c) {
  nlohmann::json j;
  j["kind"] = c.kind == ConeKind::Euclid ? "euclid" : "rauzy";
  j["path"] = c.path_label();
  if (c.base_perm) j["base_perm"] = to_json(*c.base_perm);
  if (c.end_perm) j["end_perm"] = to_json(*c.end_perm);
  j["matrix"] = to_json(c.generator);
  j["columns"] = nlohmann::json::array();
  for (Eigen::Index k = 0; k < c.generator.cols(); ++k) {
    auto col = nlohmann::json::array();
    for (Eigen::Index i = 0; i < c.generator.rows(); ++i) col.push_back(to_string(c.generator(i, k)));
    j["columns"].push_back(std::move(col));
  }
  j["distortion"] = to_string(distortion(c));
  return j;
}

std::string partition_csv(const DistortedPartition& p) {
  std::ostringstream out;
  out << "depth,distortion,measure,covered_fraction\n";
  Rational covered = 0;
  for (const auto& c : p.cones) {
    const Rational m = simplex_volume_fraction(c);
    covered += m;
    out << c.depth() << ',' << to_string(distortion(c)) << ',' << to_string(m) << ','
        << to_string(covered) << '\n';
  }
  return out.str();
}

}  // namespace rauzy
