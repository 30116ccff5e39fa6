#include "rauzy/induction.hpp"

#include <stdexcept>
#include <string>

namespace rauzy {

namespace {

void require_state(const RauzyState& s) {
  if (s.lengths.size() != s.perm.size())
    throw DimensionError("RauzyState: lengths and permutation sizes differ");
  if (!is_irreducible(s.perm)) throw DomainError("RauzyState: reducible permutation");
  if (!all_positive(s.lengths)) throw DomainError("RauzyState: lengths must be positive");
}

}  // namespace

IMatrix matrix_a(const Perm& p) {
  if (!is_irreducible(p)) throw DomainError("matrix_a: reducible permutation");
  const int n = p.size();
  IMatrix m = identity(n);
  m(n - 1, p.inverse(n) - 1) -= 1;
  return m;
}

IMatrix matrix_b(const Perm& p) {
  if (!is_irreducible(p)) throw DomainError("matrix_b: reducible permutation");
  const int n = p.size();
  const int pivot = p.inverse(n);
  IMatrix m = IMatrix::Zero(n, n);
  for (int row = 1; row <= n; ++row) {
    if (row <= pivot) m(row - 1, row - 1) = 1;
    else if (row == pivot + 1) m(row - 1, n - 1) = 1;
    else m(row - 1, row - 2) = 1;
  }
  m(pivot - 1, n - 1) -= 1;
  return m;
}

IMatrix step_matrix(const Perm& p, Move m) { return m == Move::A ? matrix_a(p) : matrix_b(p); }

IMatrix inverse_step_matrix(const Perm& p, Move m) {
  if (!is_irreducible(p)) throw DomainError("inverse_step_matrix: reducible permutation");
  const int n = p.size();
  const int pivot = p.inverse(n);
  IMatrix inv = identity(n);
  if (m == Move::A) {
    inv(n - 1, pivot - 1) = 1;
    return inv;
  }
  // lambda_{pivot} = x_pivot + x_{pivot+1}, lambda_n = x_{pivot+1},
  // lambda_j = x_{j+1} for pivot < j < n
  inv = IMatrix::Zero(n, n);
  for (int row = 1; row < pivot; ++row) inv(row - 1, row - 1) = 1;
  inv(pivot - 1, pivot - 1) = 1;
  inv(pivot - 1, pivot) = 1;
  for (int row = pivot + 1; row < n; ++row) inv(row - 1, row) = 1;
  inv(n - 1, pivot) = 1;
  return inv;
}

Move select_move(const RauzyState& s) {
  require_state(s);
  const int n = s.perm.size();
  const Rational& last = s.lengths(n - 1);
  const Rational& last_pi = s.lengths(s.perm.inverse(n) - 1);
  if (last > last_pi) return Move::A;
  if (last < last_pi) return Move::B;
  throw BoundaryError("Rauzy step undefined: lambda_n == lambda^pi_n", 0);
}

Step step(const RauzyState& s) {
  const Move m = select_move(s);
  IMatrix a = step_matrix(s.perm, m);
  RauzyState next{apply(a, s.lengths), apply_move(s.perm, m)};
  return {std::move(next), m, std::move(a)};
}

RauzyState normalized_step(const RauzyState& s) {
  Step st = step(s);
  const Rational norm = l1_norm(st.state.lengths);
  for (Eigen::Index i = 0; i < st.state.lengths.size(); ++i) st.state.lengths(i) /= norm;
  return std::move(st.state);
}

PathRecord orbit(const RauzyState& s, std::size_t k, OnBoundary on_boundary) {
  require_state(s);
  const auto n = s.lengths.size();
  PathRecord r;
  r.states.push_back(s);
  r.cocycle = identity(n);
  r.inverse_cocycle = identity(n);
  const IMatrix id = identity(n);
  for (std::size_t i = 0; i < k; ++i) {
    const RauzyState& current = r.states.back();
    Move m;
    try {
      m = select_move(current);
    } catch (const BoundaryError& e) {
      if (on_boundary == OnBoundary::Throw)
        throw BoundaryError(std::string(e.what()) + " at step " + std::to_string(i), i);
      r.boundary_step = i;
      break;
    }
    IMatrix a = step_matrix(current.perm, m);
    RauzyState next{apply(a, current.lengths), apply_move(current.perm, m)};
    r.cocycle = mat_mul(a, r.cocycle);
    r.inverse_cocycle = mat_mul(r.inverse_cocycle, inverse_step_matrix(current.perm, m));

    if (mat_mul(r.cocycle, r.inverse_cocycle) != id)
      throw std::logic_error("orbit: cocycle and inverse cocycle disagree");
    if (!all_nonnegative(r.inverse_cocycle))
      throw std::logic_error("orbit: inverse cocycle has a negative entry");
    if (apply(r.inverse_cocycle, next.lengths) != s.lengths)
      throw std::logic_error("orbit: inverse cocycle does not reconstruct the start");

    r.moves.push_back(m);
    r.step_matrices.push_back(std::move(a));
    r.states.push_back(std::move(next));
  }
  return r;
}

nlohmann::json to_json(const RauzyState& s) {
  return {{"lengths", to_json(s.lengths)}, {"perm", to_json(s.perm)}};
}

nlohmann::json to_json(const PathRecord& r) {
  nlohmann::json j;
  j["states"] = nlohmann::json::array();
  for (const auto& s : r.states) j["states"].push_back(to_json(s));
  std::string moves;
  for (auto m : r.moves) moves.push_back(to_char(m));
  j["moves"] = moves;
  j["step_matrices"] = nlohmann::json::array();
  for (const auto& a : r.step_matrices) j["step_matrices"].push_back(to_json(a));
  j["cocycle"] = to_json(r.cocycle);
  j["inverse_cocycle"] = to_json(r.inverse_cocycle);
  if (r.boundary_step) j["boundary_step"] = *r.boundary_step;
  else j["boundary_step"] = nullptr;
  return j;
}

}  // namespace rauzy
