#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rauzy/report.hpp"

namespace rauzy {

/// Knobs shared by the verification suites; defaults are desk scale.
struct VerifyConfig {
  std::uint64_t seed = 20240101;
  std::size_t samples = 200000;
  std::size_t workers = 1;
  /// Dimension for the n-dependent suites (rauzy-proof).
  int n = 3;
  std::size_t N = 8;
  std::size_t depth = 12;
};

nlohmann::json to_json(const VerifyConfig& c);

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one suite ("all" runs every suite). Throws DomainError on an
/// unknown name.
Report run_suite(const std::string& name, const VerifyConfig& cfg);

Report verify_rauzy_combinatorics(const VerifyConfig& cfg);
Report verify_lemmas(const VerifyConfig& cfg);
Report verify_induction(const VerifyConfig& cfg);
Report verify_euclid_cf(const VerifyConfig& cfg);
Report verify_cones(const VerifyConfig& cfg);
Report verify_euclid_proof(const VerifyConfig& cfg);
Report verify_rauzy_proof(const VerifyConfig& cfg);
Report verify_mcf(const VerifyConfig& cfg);

/// Nested path cones along seeded orbits: the L1 diameter of their simplex
/// projections must never grow; reaching 1e-3 is recorded, not asserted.
Report shrinking_statistic(int n, std::size_t orbits, std::size_t max_depth, std::uint64_t seed);

/// Minimal column-norm distortion of the path cone at returns to the base
/// permutation, over seeded orbits. Reported only.
Report balanced_distortion_statistic(int n, std::size_t orbits, std::size_t max_depth,
                                     std::uint64_t seed);

}  // namespace rauzy
