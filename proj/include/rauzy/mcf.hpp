#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "rauzy/numerics.hpp"
#include "rauzy/permutation.hpp"

namespace rauzy {

/// lambda together with the sorting permutation sigma:
/// lambda_{sigma(1)} <= ... <= lambda_{sigma(n)}. Ties keep the lower index
/// first (stable sort).
struct SortView {
  RVector input;
  Perm order;

  /// sigma(k), 1-based.
  int at(int k) const { return order(k); }
  const Rational& kth_smallest(int k) const { return input(order(k) - 1); }
};

SortView sort_view(const RVector& v);

/// (l_s(1), l_s(2) - l_s(1), l_s(3) - l_s(2)). Requires v >= 0, n = 3.
RVector poincare(const RVector& v);
/// poincare(v) / |poincare(v)|_1 on the simplex. Requires |v|_1 = 1.
RVector daniels_parry(const RVector& v);

/// sort(l1, l2 - l1, l3 - l1) on {0 <= l1 <= l2 <= l3}.
RVector fully_subtractive(const RVector& v);

/// Normalized fully subtractive map on D = {0 <= l1 <= l2 <= 1}; guard ties
/// go to the earlier branch.
RVector s_tilde(const RVector& v);
/// 1, 2 or 3: the branch s_tilde takes at v.
int s_tilde_branch(const RVector& v);

/// T_i: the largest coordinate, in place, loses the i-th smallest.
/// i = n-1 is Brun, i = 1 is Selmer.
RVector t_subtractive(const RVector& v, int i);
inline RVector brun(const RVector& v) { return t_subtractive(v, static_cast<int>(v.size()) - 1); }
inline RVector selmer(const RVector& v) { return t_subtractive(v, 1); }

struct MarkovBranch {
  /// Branch C_j: coordinate j is the (stable) maximum.
  int j = 0;
  /// Linear sub-pieces I - e_j e_k^T, one per choice of the subtracted
  /// coordinate k; all unimodular.
  std::size_t pieces = 0;
  bool pieces_invertible = true;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// First target that has no preimage in the branch.
  RVector counterexample;
};

struct MarkovReport {
  int i = 0;
  int n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<MarkovBranch> branches;
  bool all_pass() const;
};

/// Tests T_i(C_j) = C for every branch by sampling targets mu with distinct
/// positive coordinates: the only candidate preimage in C_j is
/// lambda = mu + (i-th smallest of mu without j) e_j, which must sort into
/// C_j and map back onto mu. Throws DomainError unless 1 <= i <= n-1.
MarkovReport markov_check(int i, int n, std::size_t samples, std::uint64_t seed);

struct JacobiPerronStep {
  RVector image;
  /// a_2, ..., a_n.
  std::vector<Integer> digits;
};

/// lambda_2 > 0 and lambda_1 >= lambda_i for all i.
bool in_jacobi_perron_domain(const RVector& v);

/// (l2, l3 - a2 l2, ..., ln - a_{n-1} l2, l1 - a_n l2) with a_j =
/// floor(l_{j+1}/l2) and a_n = floor(l1/l2). Throws DomainError outside
/// the domain.
JacobiPerronStep jacobi_perron(const RVector& v);
/// Matrix M with M * image = input for the given digits.
IMatrix jacobi_perron_matrix(const std::vector<Integer>& digits);

struct JacobiPerronOrbit {
  std::vector<RVector> points;
  std::vector<std::vector<Integer>> digits;
  /// Set when the last image left the domain and iteration stopped.
  bool left_domain = false;
};

JacobiPerronOrbit jacobi_perron_orbit(const RVector& v, std::size_t k);

nlohmann::json to_json(const MarkovReport& r);

}  // namespace rauzy
