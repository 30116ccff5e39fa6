// rauzy: command-line front end for the rauzy library.
//
// Exit codes: 0 success or expected termination, 1 assertion failure,
// 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rauzy/cones.hpp"
#include "rauzy/euclid.hpp"
#include "rauzy/induction.hpp"
#include "rauzy/mcf.hpp"
#include "rauzy/montecarlo.hpp"
#include "rauzy/permutation.hpp"
#include "rauzy/verify.hpp"

namespace {

using namespace rauzy;

constexpr int kOk = 0;
constexpr int kAssertionFailure = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string command;
  std::uint64_t seed = 0;
  std::size_t samples = 200000;
  std::size_t workers = 1;
  std::size_t depth = 12;
  std::size_t N = 8;
  int n = 3;
  std::string format = "json";
  std::string out;
  std::string algo;
  std::string start;
  std::string perm;
  std::string suite = "all";
};

nlohmann::json to_json(const RunConfig& c) {
  return {{"command", c.command}, {"seed", c.seed},     {"samples", c.samples}, {"workers", c.workers},
          {"depth", c.depth},     {"N", c.N},           {"n", c.n},             {"format", c.format},
          {"algo", c.algo},       {"start", c.start},   {"perm", c.perm},       {"suite", c.suite}};
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(item);
  return parts;
}

RVector parse_vector(const std::string& text) {
  const auto parts = split(text);
  if (parts.empty()) throw UsageError("--start: expected comma-separated rationals");
  RVector v(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) v(static_cast<Eigen::Index>(i)) = parse_rational(parts[i]);
  return v;
}

Perm parse_perm(const std::string& text) {
  std::vector<int> row;
  for (const auto& part : split(text)) {
    try {
      row.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw UsageError("--perm: expected comma-separated integers, got '" + part + "'");
    }
  }
  return Perm::from_bottom_row(row);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw UsageError("cannot open " + cfg.out);
  file << text;
}

void emit_json(const RunConfig& cfg, nlohmann::json body) {
  body["config"] = to_json(cfg);
  emit(cfg, body.dump(2) + "\n");
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw UsageError("format '" + cfg.format + "' not supported by " + cfg.command);
}

// rauzy-class / graph-export

std::vector<RauzyGraph> selected_classes(const RunConfig& cfg) {
  if (!cfg.perm.empty()) {
    const Perm p = parse_perm(cfg.perm);
    if (!is_irreducible(p)) throw UsageError("permutation is not irreducible");
    return {rauzy_class(p)};
  }
  if (cfg.n < 2) throw UsageError("--n must be at least 2");
  return rauzy_classes(cfg.n);
}

int cmd_rauzy_class(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv", "dot"});
  const auto classes = selected_classes(cfg);
  if (cfg.format == "dot") {
    std::string text;
    for (const auto& g : classes) text += export_dot(g);
    emit(cfg, text);
  } else if (cfg.format == "csv") {
    std::ostringstream out;
    out << "class,perm,standard,loop,follower_a,follower_b\n";
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (std::size_t v = 0; v < classes[c].size(); ++v) {
        const Perm& p = classes[c].nodes[v];
        out << c << ',' << p.label() << ',' << is_standard(p) << ',' << is_loop(p) << ','
            << classes[c].follower(v, Move::A).label() << ',' << classes[c].follower(v, Move::B).label()
            << '\n';
      }
    emit(cfg, out.str());
  } else {
    nlohmann::json body;
    body["classes"] = nlohmann::json::array();
    for (const auto& g : classes) body["classes"].push_back(rauzy::to_json(g));
    emit_json(cfg, body);
  }
  return kOk;
}

// orbit

struct OrbitRow {
  RVector point;
  std::string tag;
};

struct OrbitDump {
  std::vector<OrbitRow> rows;
  std::optional<std::size_t> terminated_at;
  std::string reason;
};

using MapStep = std::function<std::optional<std::pair<RVector, std::string>>(const RVector&)>;

OrbitDump iterate(const RVector& start, std::size_t k, const MapStep& f, const std::string& reason) {
  OrbitDump d;
  d.rows.push_back({start, ""});
  for (std::size_t s = 0; s < k; ++s) {
    auto next = f(d.rows.back().point);
    if (!next) {
      d.terminated_at = s;
      d.reason = reason;
      break;
    }
    d.rows.back().tag = next->second;
    d.rows.push_back({std::move(next->first), ""});
  }
  return d;
}

bool has_zero(const RVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) == 0) return true;
  return false;
}

void require_size(const RVector& v, Eigen::Index n, const std::string& algo) {
  if (v.size() != n) throw UsageError(algo + " needs " + std::to_string(n) + " coordinates");
}

std::string max_label(const RVector& v) { return std::to_string(sort_view(v).at(static_cast<int>(v.size()))); }

OrbitDump run_orbit(const RunConfig& cfg) {
  if (cfg.start.empty()) throw UsageError("orbit needs --start");
  RVector v = parse_vector(cfg.start);
  if (!all_nonnegative(v)) throw UsageError("--start must be nonnegative");
  const std::size_t k = cfg.depth;
  const std::string& a = cfg.algo;

  auto euclid_like = [&](RVector (*f)(const RVector&), bool tag_branch) {
    require_size(v, 2, a);
    return iterate(v, k, [&](const RVector& x) -> std::optional<std::pair<RVector, std::string>> {
      if (has_zero(x)) return std::nullopt;
      return std::pair{f(x), tag_branch ? std::string(to_string(e_branch(x))) : std::string()};
    }, "zero coordinate");
  };

  if (a == "euclid") return euclid_like(e_step, true);
  if (a == "euclid-sigma") return euclid_like(e_sigma_step, false);
  if (a == "euclid-pi") {
    require_size(v, 2, a);
    if (v(0) > v(1)) throw UsageError("euclid-pi needs a sorted start");
    return euclid_like(e_pi_step, false);
  }
  if (a == "rauzy" || a == "rauzy-normalized") {
    if (cfg.perm.empty()) throw UsageError(a + " needs --perm");
    const Perm p = parse_perm(cfg.perm);
    if (p.size() != v.size()) throw UsageError("--perm and --start sizes differ");
    if (!is_irreducible(p)) throw UsageError("permutation is not irreducible");
    if (!all_positive(v)) throw UsageError("rauzy needs positive lengths");
    OrbitDump d;
    RauzyState s{a == "rauzy" ? v : RVector(v / l1_norm(v)), p};
    d.rows.push_back({s.lengths, s.perm.label()});
    for (std::size_t i = 0; i < k; ++i) {
      try {
        const Move m = select_move(s);
        s = a == "rauzy" ? step(s).state : normalized_step(s);
        d.rows.back().tag += std::string(":") + to_char(m);
        d.rows.push_back({s.lengths, s.perm.label()});
      } catch (const BoundaryError&) {
        d.terminated_at = i;
        d.reason = "tie between the last intervals";
        break;
      }
    }
    return d;
  }
  if (a == "poincare" || a == "daniels-parry") {
    require_size(v, 3, a);
    if (a == "daniels-parry") {
      if (l1_norm(v) == 0) throw UsageError("start must be nonzero");
      v /= l1_norm(v);
    }
    return iterate(v, k, [&](const RVector& x) -> std::optional<std::pair<RVector, std::string>> {
      if (l1_norm(x) == 0 || (a == "daniels-parry" && x.maxCoeff() == 0)) return std::nullopt;
      const std::string order = sort_view(x).order.label();
      return std::pair{a == "poincare" ? poincare(x) : daniels_parry(x), order};
    }, "zero vector");
  }
  if (a == "fs") {
    require_size(v, 3, a);
    std::sort(v.data(), v.data() + v.size());
    return iterate(v, k, [](const RVector& x) -> std::optional<std::pair<RVector, std::string>> {
      if (x(0) == 0) return std::nullopt;
      return std::pair{fully_subtractive(x), std::string()};
    }, "smallest coordinate is zero");
  }
  if (a == "fs-normalized") {
    require_size(v, 2, a);
    if (!(v(0) <= v(1) && v(1) <= 1)) throw UsageError("fs-normalized needs 0 <= a <= b <= 1");
    return iterate(v, k, [](const RVector& x) -> std::optional<std::pair<RVector, std::string>> {
      if (x(0) == 0) return std::nullopt;
      return std::pair{s_tilde(x), std::to_string(s_tilde_branch(x))};
    }, "first coordinate is zero");
  }
  if (a == "brun" || a == "selmer") {
    if (v.size() < 2) throw UsageError(a + " needs at least 2 coordinates");
    const int i = a == "brun" ? static_cast<int>(v.size()) - 1 : 1;
    return iterate(v, k, [i](const RVector& x) -> std::optional<std::pair<RVector, std::string>> {
      if (sort_view(x).kth_smallest(i) == 0) return std::nullopt;
      return std::pair{t_subtractive(x, i), max_label(x)};
    }, "subtracted coordinate is zero");
  }
  if (a == "jacobi-perron") {
    return iterate(v, k, [](const RVector& x) -> std::optional<std::pair<RVector, std::string>> {
      if (!in_jacobi_perron_domain(x)) return std::nullopt;
      auto st = jacobi_perron(x);
      std::string digits;
      for (const auto& d : st.digits) digits += (digits.empty() ? "" : ";") + to_string(d);
      return std::pair{std::move(st.image), digits};
    }, "left the Jacobi-Perron domain");
  }
  throw UsageError("unknown algorithm '" + a + "'");
}

int cmd_orbit(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  const OrbitDump d = run_orbit(cfg);
  if (cfg.format == "csv") {
    std::ostringstream out;
    out << "step,vector,tag\n";
    for (std::size_t i = 0; i < d.rows.size(); ++i) {
      out << i << ",\"";
      for (Eigen::Index c = 0; c < d.rows[i].point.size(); ++c)
        out << (c ? " " : "") << to_string(d.rows[i].point(c));
      out << "\"," << d.rows[i].tag << '\n';
    }
    if (d.terminated_at) out << "# terminated at step " << *d.terminated_at << ": " << d.reason << '\n';
    emit(cfg, out.str());
  } else {
    nlohmann::json body;
    body["algo"] = cfg.algo;
    body["points"] = nlohmann::json::array();
    body["tags"] = nlohmann::json::array();
    for (const auto& row : d.rows) {
      body["points"].push_back(rauzy::to_json(row.point));
      body["tags"].push_back(row.tag);
    }
    body["terminated"] = d.terminated_at.has_value();
    if (d.terminated_at) {
      body["terminated_at"] = *d.terminated_at;
      body["reason"] = d.reason;
    }
    emit_json(cfg, body);
  }
  return kOk;
}

// expand

int cmd_expand(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  if (cfg.start.empty()) throw UsageError("expand needs --start");
  const RVector v = parse_vector(cfg.start);
  require_size(v, 2, "expand");
  if (!all_nonnegative(v) || l1_norm(v) == 0) throw UsageError("expand needs a nonzero nonnegative pair");
  const EuclidExpansion e = expansion(v, cfg.depth);
  const auto digits = cf_digits(e);
  if (cfg.format == "csv") {
    std::ostringstream out;
    out << "step,branch\n";
    for (std::size_t i = 0; i < e.steps.size(); ++i) out << i << ',' << to_string(e.steps[i]) << '\n';
    emit(cfg, out.str());
  } else {
    nlohmann::json body = rauzy::to_json(e);
    body["cf_digits"] = digits;
    emit_json(cfg, body);
  }
  return kOk;
}

// cone-partition

int cmd_cone_partition(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  DistortedPartition part;
  if (cfg.perm.empty()) {
    part = euclid_distorted_partition(cfg.N, cfg.depth);
  } else {
    const Perm base = parse_perm(cfg.perm);
    if (!is_loop(base) && base.size() != 2) throw UsageError("--perm must be a loop permutation");
    part = distorted_partition(cfg.N, base, cfg.depth);
  }
  if (cfg.format == "csv") {
    emit(cfg, partition_csv(part));
  } else {
    nlohmann::json body;
    body["cones"] = nlohmann::json::array();
    for (const auto& c : part.cones) body["cones"].push_back(rauzy::to_json(c));
    body["uncovered"] = to_string(part.uncovered);
    body["uncovered_double"] = part.uncovered.get_d();
    body["open_cones"] = part.open_cones;
    body["norm"] = "l1";
    emit_json(cfg, body);
  }
  return kOk;
}

// verify

VerifyConfig verify_config(const RunConfig& cfg) {
  VerifyConfig v;
  v.seed = cfg.seed;
  v.samples = cfg.samples;
  v.workers = cfg.workers;
  v.n = cfg.n;
  v.N = cfg.N;
  v.depth = cfg.depth;
  return v;
}

int cmd_verify(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  if (!is_suite(cfg.suite)) throw UsageError("unknown suite '" + cfg.suite + "'");
  const Report r = run_suite(cfg.suite, verify_config(cfg));
  if (cfg.format == "csv") {
    std::ostringstream out;
    out << "name,kind,pass\n";
    nlohmann::json j = rauzy::to_json(r);
    for (const auto& a : j["assertions"])
      out << a["name"].get<std::string>() << ',' << a["kind"].get<std::string>() << ',' << a["pass"].get<bool>()
          << '\n';
    emit(cfg, out.str());
  } else {
    emit_json(cfg, rauzy::to_json(r));
  }
  for (const auto* f : r.failures()) std::cerr << "FAILED " << f->name << '\n';
  return r.ok() ? kOk : kAssertionFailure;
}

// mcf

int cmd_mcf(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  int i = 0;
  if (cfg.algo == "brun") i = cfg.n - 1;
  else if (cfg.algo == "selmer") i = 1;
  else throw UsageError("mcf --algo must be brun or selmer");
  if (cfg.n < 2) throw UsageError("--n must be at least 2");
  const MarkovReport rep = markov_check(i, cfg.n, cfg.samples, cfg.seed);
  emit_json(cfg, {{"markov", rauzy::to_json(rep)}, {"algo", cfg.algo}});
  return rep.all_pass() ? kOk : kAssertionFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Euclid, Rauzy induction and multidimensional continued fraction experiments"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.seed = default_seed();

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "RNG seed (default from RAUZY_SEED)");
    sub->add_option("--format", cfg.format, "json, csv or dot")->check(CLI::IsMember({"json", "csv", "dot"}));
    sub->add_option("--out", cfg.out, "write output to this file");
  };

  auto* rc = app.add_subcommand("rauzy-class", "Rauzy class of a permutation, or all classes of size n");
  auto* ge = app.add_subcommand("graph-export", "Rauzy graph in DOT format");
  for (auto* sub : {rc, ge}) {
    common(sub);
    sub->add_option("--n", cfg.n, "number of intervals");
    sub->add_option("--perm", cfg.perm, "bottom row, comma separated, e.g. 2,3,1");
  }

  auto* orb = app.add_subcommand("orbit", "orbit of a point under one of the algorithms");
  common(orb);
  orb->add_option("--algo", cfg.algo, "euclid, euclid-sigma, euclid-pi, rauzy, rauzy-normalized, poincare, "
                                      "daniels-parry, fs, fs-normalized, brun, selmer, jacobi-perron")
      ->required();
  orb->add_option("--start", cfg.start, "comma separated rationals, e.g. 5,3 or 1/2,1/3");
  orb->add_option("--perm", cfg.perm, "bottom row for rauzy");
  orb->add_option("--depth,--k", cfg.depth, "number of steps");

  auto* ex = app.add_subcommand("expand", "Euclid expansion and continued fraction digits");
  common(ex);
  ex->add_option("--start", cfg.start, "pair of rationals")->required();
  ex->add_option("--depth", cfg.depth, "maximum number of steps");

  auto* cp = app.add_subcommand("cone-partition", "distorted cone partition");
  common(cp);
  cp->add_option("--N", cfg.N, "distortion threshold");
  cp->add_option("--depth", cfg.depth, "depth cap");
  cp->add_option("--perm", cfg.perm, "loop permutation for the Rauzy partition; Euclid when omitted");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  common(ver);
  ver->add_option("suite", cfg.suite, "suite name or 'all'");
  ver->add_option("--n", cfg.n, "dimension for rauzy-proof");
  ver->add_option("--N", cfg.N, "distortion parameter for rauzy-proof");
  ver->add_option("--depth", cfg.depth, "depth cap for cone checks");
  ver->add_option("--samples", cfg.samples, "Monte Carlo samples");
  ver->add_option("--workers", cfg.workers, "Monte Carlo threads")->check(CLI::PositiveNumber);

  auto* mc = app.add_subcommand("mcf", "Markov check for Brun or Selmer");
  common(mc);
  mc->add_option("--algo", cfg.algo, "brun or selmer")->required();
  mc->add_option("--n", cfg.n, "dimension");
  mc->add_option("--samples", cfg.samples, "targets per branch");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const std::map<CLI::App*, std::function<int(const RunConfig&)>> handlers{
      {rc, cmd_rauzy_class}, {ge, cmd_rauzy_class}, {orb, cmd_orbit},  {ex, cmd_expand},
      {cp, cmd_cone_partition}, {ver, cmd_verify},  {mc, cmd_mcf}};
  for (const auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    cfg.command = sub->get_name();
    if (sub == ge && sub->count("--format") == 0) cfg.format = "dot";
    try {
      return handler(cfg);
    } catch (const UsageError& e) {
      std::cerr << "usage error: " << e.what() << '\n';
      return kUsage;
    } catch (const DomainError& e) {
      std::cerr << "invalid input: " << e.what() << '\n';
      return kUsage;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kAssertionFailure;
    }
  }
  return kUsage;
}
