#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace rauzy {

enum class CheckKind { Exact, MonteCarlo, Info };

const char* to_string(CheckKind k);

/// One named check. Info checks are recorded but never fail a report.
struct Assertion {
  std::string name;
  CheckKind kind = CheckKind::Exact;
  bool pass = true;
  nlohmann::json values = nlohmann::json::object();
};

struct Report {
  std::string name;
  std::vector<Assertion> assertions;
  nlohmann::json data = nlohmann::json::object();

  Assertion& add(std::string name, CheckKind kind, bool pass, nlohmann::json values = {});
  /// True when every exact and Monte Carlo assertion passed.
  bool ok() const;
  std::vector<const Assertion*> failures() const;
  /// Folds another report's assertions in, prefixing names with its name.
  void merge(const Report& other);
};

/// Assertions are emitted sorted by name so output is schedule-independent.
nlohmann::json to_json(const Report& r);

}  // namespace rauzy
