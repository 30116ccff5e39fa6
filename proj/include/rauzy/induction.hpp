#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "rauzy/numerics.hpp"
#include "rauzy/permutation.hpp"

namespace rauzy {

/// A point (lambda, pi) of C x R: positive lengths and an irreducible
/// permutation.
struct RauzyState {
  RVector lengths;
  Perm perm;

  friend bool operator==(const RauzyState& a, const RauzyState& b) {
    return a.perm == b.perm && a.lengths == b.lengths;
  }
};

/// Identity with an extra -1 at (n, pi^{-1}(n)).
IMatrix matrix_a(const Perm& p);
/// With p* = pi^{-1}(n): rows 1..p* are identity rows with an extra -1 at
/// (p*, n), row p*+1 picks lambda_n, and rows j > p*+1 pick lambda_{j-1}.
IMatrix matrix_b(const Perm& p);
IMatrix step_matrix(const Perm& p, Move m);
/// Closed form of step_matrix(p, m)^{-1}; nonnegative.
IMatrix inverse_step_matrix(const Perm& p, Move m);

/// The move taken from s: A when lambda_n > lambda^pi_n, B when smaller.
/// Throws BoundaryError (step 0) on a tie.
Move select_move(const RauzyState& s);

struct Step {
  RauzyState state;
  Move move;
  IMatrix matrix;
};

Step step(const RauzyState& s);

/// One step of the induction followed by rescaling onto the unit simplex.
RauzyState normalized_step(const RauzyState& s);

enum class OnBoundary { Throw, Stop };

/// Trajectory of the induction together with its cocycle.
struct PathRecord {
  std::vector<RauzyState> states;
  std::vector<Move> moves;
  std::vector<IMatrix> step_matrices;
  /// A^(k) = A^k ... A^1, so lengths_k = cocycle * lengths_0.
  IMatrix cocycle;
  /// B^(k) = (A^(k))^{-1}; nonnegative, its columns span the path cone.
  IMatrix inverse_cocycle;
  /// Index of the step that hit a tie when the orbit was cut short.
  std::optional<std::size_t> boundary_step;

  std::size_t length() const { return moves.size(); }
};

/// Iterates `step` up to k times. The cocycle and its inverse are updated
/// incrementally and re-verified after every step. On a tie either throws
/// BoundaryError carrying the step index, or stops and records it.
PathRecord orbit(const RauzyState& s, std::size_t k, OnBoundary on_boundary = OnBoundary::Throw);

nlohmann::json to_json(const RauzyState& s);
nlohmann::json to_json(const PathRecord& r);

}  // namespace rauzy
