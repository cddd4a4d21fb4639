#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace steiner {

/// Vertex index, 0-based. Text formats use labels 1..n.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable labeled tree with O(1) LCA queries (Euler tour + sparse table,
/// rooted at vertex 0).
class Tree {
 public:
  /// Validates that `edges` form a tree on vertices 0..n-1; throws NotATree
  /// (wrong edge count, self-loop, cycle) or MalformedInput (bad label).
  static Tree from_edges(int n, std::vector<Edge> edges);

  int size() const noexcept { return n_; }
  /// Edges as (min, max) pairs in lexicographic order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Neighbors in increasing order.
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  std::vector<int> degrees() const;
  bool is_leaf(Vertex v) const { return degree(v) == 1; }
  bool adjacent(Vertex u, Vertex v) const;

  int depth(Vertex v) const { return depth_[check(v)]; }
  /// Position of v's first visit in the Euler tour.
  int first_visit(Vertex v) const { return first_[check(v)]; }

  Vertex lca(Vertex u, Vertex v) const;
  int distance(Vertex u, Vertex v) const;

  /// Edge count of the minimal subtree spanning the distinct vertices of
  /// `vertices`; duplicates are ignored. Throws EmptySet.
  int steiner_distance(std::span<const Vertex> vertices) const;
  /// Same, for the vertex set encoded as a bitmask (n <= 64).
  int steiner_distance_mask(std::uint64_t mask) const;

 private:
  Tree() = default;
  Vertex check(Vertex v) const;
  void build_lca();

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> adj_offset_;
  std::vector<Vertex> adj_;
  std::vector<int> depth_;
  std::vector<int> first_;
  std::vector<Vertex> euler_;
  std::vector<int> log2_;
  std::vector<std::vector<Vertex>> sparse_;  // sparse_[j][i]: min-depth vertex in euler_[i, i + 2^j)
};

/// Parses "n" followed by n-1 lines "u v" (1-indexed). Blank lines and
/// surrounding whitespace are ignored.
Tree parse_tree(std::string_view text);
/// Inverse of parse_tree: "n\n" followed by "u v\n" per edge.
std::string format_tree(const Tree& t);

/// Decodes a Pruefer sequence (0-based entries, length n-2).
Tree tree_from_prufer(int n, std::span<const Vertex> code);
/// Pruefer sequence of t (0-based entries, length max(n-2, 0)).
std::vector<Vertex> prufer_code(const Tree& t);

/// Tree decoded from a uniformly random Pruefer sequence drawn from
/// SplitMix64(seed).
Tree random_tree(int n, std::uint64_t seed);

/// Calls fn(tree) for every labeled tree on n vertices, in lexicographic
/// Pruefer order (n^(n-2) trees).
template <class Fn>
void for_each_labeled_tree(int n, Fn&& fn) {
  if (n <= 2) {
    fn(tree_from_prufer(n, {}));
    return;
  }
  std::vector<Vertex> code(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    fn(tree_from_prufer(n, code));
    std::size_t i = code.size();
    while (i > 0 && code[i - 1] == n - 1) code[--i] = 0;
    if (i == 0) return;
    ++code[i - 1];
  }
}

inline constexpr int kBruteForceMaxVertices = 12;

/// Exhaustive oracle: the minimum of |W| - 1 over vertex sets W containing
/// the distinct vertices of `vertices` that induce a connected subgraph.
/// Throws EmptySet, or TooLarge when n > 12.
int steiner_distance_bruteforce(const Tree& t, std::span<const Vertex> vertices);

// Named shapes used throughout the tests and docs.
Tree path_tree(int n);
/// Star with the center at vertex 0.
Tree star_tree(int n);

}  // namespace steiner
