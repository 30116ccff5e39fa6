#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace rauzy {

/// The two Rauzy moves. `A` is taken when the last top interval is the
/// longer one, `B` otherwise.
enum class Move { A, B };

char to_char(Move m);

/// Permutation of {1,...,n}, stored as the one-line map i -> pi(i).
///
/// The usual display form is the bottom row (pi^{-1}(1), ..., pi^{-1}(n)),
/// i.e. the order in which the intervals appear after the exchange. Use
/// from_bottom_row / bottom_row for that form; everything else works on the
/// map directly.
class Perm {
 public:
  Perm() = default;

  static Perm from_map(std::span<const int> images);
  static Perm from_bottom_row(std::span<const int> row);
  static Perm from_map(std::initializer_list<int> images) {
    return from_map(std::span<const int>(images.begin(), images.size()));
  }
  static Perm from_bottom_row(std::initializer_list<int> row) {
    return from_bottom_row(std::span<const int>(row.begin(), row.size()));
  }
  static Perm identity(int n);

  int size() const { return static_cast<int>(map_.size()); }

  /// pi(i) for 1 <= i <= n.
  int operator()(int i) const { return map_[static_cast<std::size_t>(i - 1)]; }
  /// pi^{-1}(i) for 1 <= i <= n.
  int inverse(int i) const { return inverse_[static_cast<std::size_t>(i - 1)]; }

  const std::vector<int>& map() const { return map_; }
  const std::vector<int>& bottom_row() const { return inverse_; }

  /// Bottom row as text: "231" for n <= 9, "2,3,1,..." otherwise.
  std::string label() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.map_ == b.map_; }
  /// Lexicographic on the bottom row.
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.inverse_ <=> b.inverse_;
  }

 private:
  std::vector<int> map_;
  std::vector<int> inverse_;
};

bool is_irreducible(const Perm& p);
bool is_standard(const Perm& p);
bool is_loop(const Perm& p);

/// pi' of the type-a move. Throws DomainError on reducible input.
Perm move_a(const Perm& p);
/// pi'' of the type-b move. Throws DomainError on reducible input.
Perm move_b(const Perm& p);
Perm apply_move(const Perm& p, Move m);

/// All permutations of {1..n} that are irreducible, ordered by bottom row.
std::vector<Perm> irreducible_permutations(int n);

struct ClassLimits {
  int max_n = 10;
  std::size_t max_nodes = 4'000'000;
};

/// Rauzy graph of a class: nodes sorted by bottom row, each with its a- and
/// b-follower given as indices into `nodes`.
struct RauzyGraph {
  Perm basepoint;
  std::vector<Perm> nodes;
  std::vector<std::array<std::size_t, 2>> followers;

  std::size_t size() const { return nodes.size(); }
  /// Index of p in `nodes`, or size() if absent.
  std::size_t index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p) < size(); }
  const Perm& follower(std::size_t node, Move m) const {
    return nodes[followers[node][m == Move::A ? 0 : 1]];
  }
  /// In-degree of every node, counting a- and b-edges (self-loops included).
  std::vector<std::size_t> in_degrees() const;
  /// Every node reaches every other node.
  bool strongly_connected() const;
};

/// Breadth-first closure of p0 under move_a and move_b (a-edge explored first).
RauzyGraph rauzy_class(const Perm& p0, const ClassLimits& limits = {});

/// Partition of all irreducible permutations of size n into Rauzy classes,
/// listed by their smallest member.
std::vector<RauzyGraph> rauzy_classes(int n, const ClassLimits& limits = {});

/// From a standard permutation, apply n - s(n-1) type-a moves to reach a
/// loop permutation. Returns the loop permutation and the number of moves.
std::pair<Perm, int> find_loop_from_standard(const Perm& s);

std::string export_dot(const RauzyGraph& g);

nlohmann::json to_json(const Perm& p);
nlohmann::json to_json(const RauzyGraph& g);

}  // namespace rauzy
