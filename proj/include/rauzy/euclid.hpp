#pragma once

#include <cstddef>
#include <vector>

#include <nlohmann/json.hpp>

#include "rauzy/numerics.hpp"

namespace rauzy {

/// Which elementary matrix a Euclid step inverts: B1 when lambda_1 >= lambda_2.
enum class EuclidStep { B1, B2 };

const char* to_string(EuclidStep s);
IMatrix elementary(EuclidStep s);

/// Subtract the smaller coordinate from the larger; ties subtract lambda_2.
RVector e_step(const RVector& v);
EuclidStep e_branch(const RVector& v);

/// (min, max - min): the sorted-first variant.
RVector e_sigma_step(const RVector& v);

/// Variant acting on {lambda_1 <= lambda_2}; the output is re-sorted.
/// Throws DomainError on unsorted input.
RVector e_pi_step(const RVector& v);

struct EuclidExpansion {
  std::vector<EuclidStep> steps;
  /// B_{m_1} ... B_{m_k}; its columns span the cone of the prefix.
  IMatrix cone_matrix;
  /// Set once a coordinate has reached zero.
  bool terminated = false;
  /// E^k(v).
  RVector remainder;
};

/// Iterates e_step up to `depth` times, stopping as soon as a coordinate is
/// zero (rational inputs always get there).
EuclidExpansion expansion(const RVector& v, std::size_t depth);

/// Continued-fraction digits [a0; a1, ...] of lambda_1/lambda_2 read off the
/// run lengths of the expansion: a0 counts the leading B1 steps (0 when the
/// word starts with B2), then blocks alternate. For terminated expansions
/// the final unit block is folded into its predecessor so the result is the
/// canonical expansion. Throws DomainError on an empty expansion.
std::vector<std::size_t> cf_digits(const EuclidExpansion& e);

nlohmann::json to_json(const EuclidExpansion& e);

}  // namespace rauzy
