#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rauzy/euclid.hpp"
#include "rauzy/numerics.hpp"
#include "rauzy/permutation.hpp"

namespace rauzy {

enum class ConeKind { Euclid, Rauzy };

/// Simplicial subcone of the positive orthant spanned by the columns of a
/// nonnegative unimodular matrix, tagged with the move sequence producing it.
///
/// Euclid cones have generator B_{m_1} ... B_{m_k}. Rauzy cones have
/// generator (A^k ... A^1)^{-1} for the walk `rauzy_path` starting at
/// `base_perm`; `end_perm` is the node the walk ends at.
struct Cone {
  IMatrix generator;
  ConeKind kind = ConeKind::Euclid;
  std::vector<EuclidStep> euclid_path;
  std::vector<Move> rauzy_path;
  std::optional<Perm> base_perm;
  std::optional<Perm> end_perm;

  Eigen::Index dimension() const { return generator.rows(); }
  std::size_t depth() const {
    return kind == ConeKind::Euclid ? euclid_path.size() : rauzy_path.size();
  }
  auto column(Eigen::Index i) const { return generator.col(i); }
  std::string path_label() const;
};

/// The positive quadrant as the root of the Euclid refinement tree.
Cone euclid_root();
/// The full cone C x {base} as the root of the Rauzy refinement tree.
Cone rauzy_root(const Perm& base);

Cone cone_of_path(std::span<const EuclidStep> path);
/// Cone of a move word read from `base`. Every word is a valid walk since
/// every node has an a- and a b-follower.
Cone cone_of_path(std::span<const Move> path, const Perm& base);
/// Cone of an explicit node sequence pi_0, pi_1, ..., pi_k. Throws
/// DomainError when a consecutive pair is not joined by an edge.
Cone cone_of_walk(std::span<const Perm> walk);

/// The two children in the refinement tree, in path-lexicographic order
/// (B1 before B2, a before b).
std::vector<Cone> children(const Cone& c);

/// L1 norms of the generating columns.
std::vector<Integer> column_norms(const Cone& c);

/// Closed-cone membership: generator^{-1} v >= 0.
bool contains(const Cone& c, const RVector& v);

/// max_i |l_i|_1 / min_i |l_i|_1.
Rational distortion(const Cone& c);

/// Area of {x in C : x_1 + x_2 <= alpha}, i.e. alpha^2 / (2 |l_1|_1 |l_2|_1).
Rational measure_2d_simplex_cap(const Cone& c, const Rational& alpha);

/// Fraction of the unit simplex covered by the radial projection of c:
/// 1 / prod_i |l_i|_1.
Rational simplex_volume_fraction(const Cone& c);

/// vol(proj sub) / vol(proj super) = prod |l_i(super)|_1 / prod |l_i(sub)|_1.
/// Throws DomainError when sub is not contained in super.
Rational simplex_volume_ratio(const Cone& sub, const Cone& super);

/// True when every generating column of `inner` lies in `outer`.
bool cone_contains(const Cone& outer, const Cone& inner);

/// Appends N b-moves at the current node, which must be a loop
/// permutation (for Euclid cones, N copies of B1, the n = 2 loop).
/// The resulting columns are l_1, ..., l_{n-1}, l_n + N l_{n-1}.
Cone extend_loop(const Cone& c, std::size_t N);

struct DistortedPartition {
  std::vector<Cone> cones;
  /// Simplex-volume fraction of the region not yet covered at the cap.
  Rational uncovered;
  std::size_t depth_cap = 0;
  /// Unresolved cones left at the cap.
  std::size_t open_cones = 0;
};

/// Optional pruning hook: subtrees whose root fails the predicate are
/// dropped from both the kept list and the uncovered remainder's support.
using ConeFilter = std::function<bool(const Cone&)>;

/// Walks the Euclid refinement tree and keeps the first cone on each branch
/// (depth >= 1) whose distortion exceeds N.
DistortedPartition euclid_distorted_partition(std::size_t N, std::size_t depth_cap,
                                              const ConeFilter& filter = {});

/// Walks the Rauzy refinement tree from a loop permutation and keeps the
/// first cone on each branch whose walk is back at `base` with
/// |l_n|_1 / |l_{n-1}|_1 > N. For n = 2 this is the Euclid condition on one
/// side; use euclid_distorted_partition for the symmetric one.
DistortedPartition distorted_partition(std::size_t N, const Perm& base, std::size_t depth_cap,
                                       const ConeFilter& filter = {});

nlohmann::json to_json(const Cone& c);

/// CSV rows "depth,distortion,measure,covered_fraction" for a partition,
/// one per kept cone with the running covered fraction.
std::string partition_csv(const DistortedPartition& p);

}  // namespace rauzy
