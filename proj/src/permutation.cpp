#include "rauzy/permutation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "rauzy/errors.hpp"

namespace rauzy {

char to_char(Move m) { return m == Move::A ? 'a' : 'b'; }

namespace {

std::vector<int> invert(std::span<const int> images) {
  const auto n = images.size();
  if (n < 1) throw DomainError("permutation must have at least one element");
  std::vector<int> inv(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = images[i];
    if (v < 1 || static_cast<std::size_t>(v) > n || inv[static_cast<std::size_t>(v - 1)] != 0)
      throw DomainError("not a bijection of {1..n}");
    inv[static_cast<std::size_t>(v - 1)] = static_cast<int>(i + 1);
  }
  return inv;
}

void require_irreducible(const Perm& p, const char* who) {
  if (!is_irreducible(p)) throw DomainError(std::string(who) + ": reducible permutation " + p.label());
}

}  // namespace

Perm Perm::from_map(std::span<const int> images) {
  Perm p;
  p.inverse_ = invert(images);
  p.map_.assign(images.begin(), images.end());
  return p;
}

Perm Perm::from_bottom_row(std::span<const int> row) {
  Perm p;
  p.map_ = invert(row);
  p.inverse_.assign(row.begin(), row.end());
  return p;
}

Perm Perm::identity(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 1);
  return from_map(id);
}

std::string Perm::label() const {
  std::ostringstream out;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < inverse_.size(); ++i) {
    if (!compact && i > 0) out << ',';
    out << inverse_[i];
  }
  return out.str();
}

bool is_irreducible(const Perm& p) {
  const int n = p.size();
  int running_max = 0;
  for (int k = 1; k < n; ++k) {
    running_max = std::max(running_max, p(k));
    if (running_max == k) return false;
  }
  return true;
}

bool is_standard(const Perm& p) { return p(1) == p.size() && p(p.size()) == 1; }

bool is_loop(const Perm& p) {
  const int n = p.size();
  return n >= 2 && is_irreducible(p) && p(n - 1) == n;
}

Perm move_a(const Perm& p) {
  require_irreducible(p, "move_a");
  const int n = p.size();
  const int last = p(n);
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const int v = p(j);
    int w;
    if (v <= last) w = v;
    else if (v < n) w = v + 1;
    else w = last + 1;
    out[static_cast<std::size_t>(j - 1)] = w;
  }
  return Perm::from_map(out);
}

Perm move_b(const Perm& p) {
  require_irreducible(p, "move_b");
  const int n = p.size();
  const int pivot = p.inverse(n);
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    int w;
    if (j <= pivot) w = p(j);
    else if (j == pivot + 1) w = p(n);
    else w = p(j - 1);
    out[static_cast<std::size_t>(j - 1)] = w;
  }
  return Perm::from_map(out);
}

Perm apply_move(const Perm& p, Move m) { return m == Move::A ? move_a(p) : move_b(p); }

std::vector<Perm> irreducible_permutations(int n) {
  if (n < 2) throw DomainError("irreducible_permutations: n must be at least 2");
  std::vector<int> row(static_cast<std::size_t>(n));
  std::iota(row.begin(), row.end(), 1);
  std::vector<Perm> out;
  do {
    Perm p = Perm::from_bottom_row(row);
    if (is_irreducible(p)) out.push_back(std::move(p));
  } while (std::next_permutation(row.begin(), row.end()));
  return out;
}

std::size_t RauzyGraph::index_of(const Perm& p) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), p);
  if (it == nodes.end() || !(*it == p)) return nodes.size();
  return static_cast<std::size_t>(it - nodes.begin());
}

std::vector<std::size_t> RauzyGraph::in_degrees() const {
  std::vector<std::size_t> deg(nodes.size(), 0);
  for (const auto& f : followers) {
    ++deg[f[0]];
    ++deg[f[1]];
  }
  return deg;
}

bool RauzyGraph::strongly_connected() const {
  if (nodes.empty()) return true;
  auto reach = [&](bool reverse) {
    std::vector<std::vector<std::size_t>> adj(nodes.size());
    for (std::size_t v = 0; v < nodes.size(); ++v)
      for (std::size_t w : followers[v]) {
        if (reverse) adj[w].push_back(v);
        else adj[v].push_back(w);
      }
    std::vector<bool> seen(nodes.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
    }
    return count == nodes.size();
  };
  return reach(false) && reach(true);
}

RauzyGraph rauzy_class(const Perm& p0, const ClassLimits& limits) {
  require_irreducible(p0, "rauzy_class");
  if (p0.size() > limits.max_n)
    throw DomainError("rauzy_class: n exceeds the configured limit");

  std::map<Perm, std::array<Perm, 2>> edges;
  std::deque<Perm> queue{p0};
  edges.emplace(p0, std::array<Perm, 2>{});
  while (!queue.empty()) {
    Perm current = std::move(queue.front());
    queue.pop_front();
    std::array<Perm, 2> next{move_a(current), move_b(current)};
    for (const auto& f : next) {
      if (edges.find(f) == edges.end()) {
        if (edges.size() >= limits.max_nodes)
          throw DomainError("rauzy_class: node cap exceeded");
        edges.emplace(f, std::array<Perm, 2>{});
        queue.push_back(f);
      }
    }
    edges[current] = std::move(next);
  }

  RauzyGraph g;
  g.basepoint = p0;
  g.nodes.reserve(edges.size());
  for (const auto& [node, _] : edges) g.nodes.push_back(node);
  g.followers.reserve(edges.size());
  for (const auto& [node, next] : edges)
    g.followers.push_back({g.index_of(next[0]), g.index_of(next[1])});
  return g;
}

std::vector<RauzyGraph> rauzy_classes(int n, const ClassLimits& limits) {
  std::vector<RauzyGraph> classes;
  std::vector<Perm> remaining = irreducible_permutations(n);
  std::vector<bool> assigned(remaining.size(), false);
  for (std::size_t i = 0; i < remaining.size(); ++i) {
    if (assigned[i]) continue;
    RauzyGraph g = rauzy_class(remaining[i], limits);
    for (const auto& member : g.nodes) {
      auto it = std::lower_bound(remaining.begin(), remaining.end(), member);
      if (it != remaining.end() && *it == member)
        assigned[static_cast<std::size_t>(it - remaining.begin())] = true;
    }
    classes.push_back(std::move(g));
  }
  return classes;
}

std::pair<Perm, int> find_loop_from_standard(const Perm& s) {
  if (!is_standard(s) || !is_irreducible(s))
    throw DomainError("find_loop_from_standard: input is not a standard permutation");
  const int n = s.size();
  const int moves = n - s(n - 1);
  Perm p = s;
  for (int j = 0; j < moves; ++j) p = move_a(p);
  return {p, moves};
}

std::string export_dot(const RauzyGraph& g) {
  std::ostringstream out;
  out << "digraph rauzy {\n";
  for (const auto& node : g.nodes) out << "  \"" << node.label() << "\";\n";
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    out << "  \"" << g.nodes[v].label() << "\" -> \"" << g.nodes[g.followers[v][0]].label()
        << "\" [label=\"a\"];\n";
    out << "  \"" << g.nodes[v].label() << "\" -> \"" << g.nodes[g.followers[v][1]].label()
        << "\" [label=\"b\"];\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const Perm& p) { return p.bottom_row(); }

nlohmann::json to_json(const RauzyGraph& g) {
  nlohmann::json j;
  j["basepoint"] = to_json(g.basepoint);
  j["size"] = g.size();
  j["members"] = nlohmann::json::array();
  j["standard"] = nlohmann::json::array();
  j["loop"] = nlohmann::json::array();
  j["edges"] = nlohmann::json::array();
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto& p = g.nodes[v];
    j["members"].push_back(to_json(p));
    if (is_standard(p)) j["standard"].push_back(to_json(p));
    if (is_loop(p)) j["loop"].push_back(to_json(p));
    j["edges"].push_back({{"from", to_json(p)},
                          {"a", to_json(g.nodes[g.followers[v][0]])},
                          {"b", to_json(g.nodes[g.followers[v][1]])}});
  }
  return j;
}

}  // namespace rauzy
