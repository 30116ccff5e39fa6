#include "rauzy/report.hpp"

#include <algorithm>

namespace rauzy {

const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::Exact: return "exact";
    case CheckKind::MonteCarlo: return "mc";
    case CheckKind::Info: return "info";
  }
  return "?";
}

Assertion& Report::add(std::string name, CheckKind kind, bool pass, nlohmann::json values) {
  if (values.is_null()) values = nlohmann::json::object();
  assertions.push_back({std::move(name), kind, pass, std::move(values)});
  return assertions.back();
}

bool Report::ok() const {
  return std::all_of(assertions.begin(), assertions.end(),
                     [](const Assertion& a) { return a.kind == CheckKind::Info || a.pass; });
}

std::vector<const Assertion*> Report::failures() const {
  std::vector<const Assertion*> out;
  for (const auto& a : assertions)
    if (a.kind != CheckKind::Info && !a.pass) out.push_back(&a);
  return out;
}

void Report::merge(const Report& other) {
  for (const auto& a : other.assertions) {
    Assertion copy = a;
    copy.name = other.name + "/" + a.name;
    assertions.push_back(std::move(copy));
  }
  if (!other.data.empty()) data[other.name] = other.data;
}

nlohmann::json to_json(const Report& r) {
  std::vector<const Assertion*> sorted;
  for (const auto& a : r.assertions) sorted.push_back(&a);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Assertion* x, const Assertion* y) { return x->name < y->name; });
  nlohmann::json j;
  j["name"] = r.name;
  j["ok"] = r.ok();
  j["assertions"] = nlohmann::json::array();
  for (const auto* a : sorted)
    j["assertions"].push_back(
        {{"name", a->name}, {"kind", to_string(a->kind)}, {"pass", a->pass}, {"values", a->values}});
  j["data"] = r.data;
  return j;
}

}  // namespace rauzy
