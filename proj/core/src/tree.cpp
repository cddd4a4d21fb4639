#include "steiner/tree.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

#include "steiner/error.hpp"
#include "steiner/random.hpp"

namespace steiner {

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

Tree Tree::from_edges(int n, std::vector<Edge> edges) {
  if (n < 1) fail(ErrorCode::MalformedInput, "vertex count must be at least 1");
  if (static_cast<int>(edges.size()) != n - 1) {
    fail(ErrorCode::NotATree, "expected " + std::to_string(n - 1) + " edges, got " +
                                  std::to_string(edges.size()));
  }
  DisjointSets sets(n);
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      fail(ErrorCode::MalformedInput, "vertex label out of range");
    }
    if (u == v) fail(ErrorCode::NotATree, "self-loop at vertex " + std::to_string(u + 1));
    if (u > v) std::swap(u, v);
    if (!sets.unite(u, v)) {
      fail(ErrorCode::NotATree, "edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
                                    " closes a cycle");
    }
  }
  // n-1 edges and no cycle already imply connectivity.
  std::sort(edges.begin(), edges.end());

  Tree t;
  t.n_ = n;
  t.edges_ = std::move(edges);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : t.edges_) {
    ++deg[u];
    ++deg[v];
  }
  t.adj_offset_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) t.adj_offset_[v + 1] = t.adj_offset_[v] + deg[v];
  t.adj_.assign(t.adj_offset_.back(), 0);
  std::vector<int> fill(t.adj_offset_.begin(), t.adj_offset_.end() - 1);
  for (const auto& [u, v] : t.edges_) {
    t.adj_[fill[u]++] = v;
    t.adj_[fill[v]++] = u;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(t.adj_.begin() + t.adj_offset_[v], t.adj_.begin() + t.adj_offset_[v + 1]);
  }
  t.build_lca();
  return t;
}

Vertex Tree::check(Vertex v) const {
  if (v < 0 || v >= n_) fail(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
  return v;
}

std::span<const Vertex> Tree::neighbors(Vertex v) const {
  check(v);
  return {adj_.data() + adj_offset_[v], adj_.data() + adj_offset_[v + 1]};
}

std::vector<int> Tree::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

bool Tree::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), check(v));
}

void Tree::build_lca() {
  depth_.assign(static_cast<std::size_t>(n_), 0);
  first_.assign(static_cast<std::size_t>(n_), -1);
  euler_.clear();
  euler_.reserve(static_cast<std::size_t>(2 * n_));

  // Iterative DFS: (vertex, parent, next neighbor index).
  struct Frame {
    Vertex v, parent;
    int next;
  };
  std::vector<Frame> stack{{0, -1, 0}};
  first_[0] = 0;
  euler_.push_back(0);
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto nb = neighbors(f.v);
    if (f.next < static_cast<int>(nb.size())) {
      const Vertex w = nb[f.next++];
      if (w == f.parent) continue;
      depth_[w] = depth_[f.v] + 1;
      first_[w] = static_cast<int>(euler_.size());
      euler_.push_back(w);
      stack.push_back({w, f.v, 0});
    } else {
      stack.pop_back();
      if (!stack.empty()) euler_.push_back(stack.back().v);
    }
  }

  const std::size_t m = euler_.size();
  log2_.assign(m + 1, 0);
  for (std::size_t i = 2; i <= m; ++i) log2_[i] = log2_[i / 2] + 1;
  sparse_.assign(static_cast<std::size_t>(log2_[m]) + 1, {});
  sparse_[0] = euler_;
  for (std::size_t j = 1; j < sparse_.size(); ++j) {
    const std::size_t half = std::size_t{1} << (j - 1);
    const std::size_t len = m - (std::size_t{1} << j) + 1;
    sparse_[j].resize(len);
    for (std::size_t i = 0; i < len; ++i) {
      const Vertex a = sparse_[j - 1][i], b = sparse_[j - 1][i + half];
      sparse_[j][i] = depth_[a] <= depth_[b] ? a : b;
    }
  }
}

Vertex Tree::lca(Vertex u, Vertex v) const {
  int l = first_[check(u)], r = first_[check(v)];
  if (l > r) std::swap(l, r);
  const int j = log2_[r - l + 1];
  const Vertex a = sparse_[j][l], b = sparse_[j][r - (1 << j) + 1];
  return depth_[a] <= depth_[b] ? a : b;
}

int Tree::distance(Vertex u, Vertex v) const {
  return depth_[check(u)] + depth_[check(v)] - 2 * depth_[lca(u, v)];
}

int Tree::steiner_distance(std::span<const Vertex> vertices) const {
  if (vertices.empty()) fail(ErrorCode::EmptySet, "Steiner distance of an empty set");
  std::vector<Vertex> vs(vertices.begin(), vertices.end());
  for (Vertex v : vs) check(v);
  std::sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) { return first_[a] < first_[b]; });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  // Walking the distinct vertices in DFS order and returning to the start
  // traverses each edge of the spanning subtree exactly twice.
  int twice = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) twice += distance(vs[i], vs[(i + 1) % vs.size()]);
  return twice / 2;
}

int Tree::steiner_distance_mask(std::uint64_t mask) const {
  std::vector<Vertex> vs;
  vs.reserve(static_cast<std::size_t>(std::popcount(mask)));
  for (int v = 0; v < n_ && v < 64; ++v)
    if ((mask >> v) & 1U) vs.push_back(v);
  return steiner_distance(vs);
}

Tree parse_tree(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    }
  }
  if (lines.empty()) fail(ErrorCode::MalformedInput, "empty tree document");

  auto read_ints = [](const std::string& line, std::size_t expected, std::size_t lineno) {
    std::istringstream in(line);
    std::vector<long> values;
    std::string tok;
    while (in >> tok) {
      long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        fail(ErrorCode::MalformedInput, "line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
      }
      values.push_back(value);
    }
    if (values.size() != expected) {
      fail(ErrorCode::MalformedInput, "line " + std::to_string(lineno) + ": expected " +
                                          std::to_string(expected) + " integers");
    }
    return values;
  };

  const long n = read_ints(lines[0], 1, 1)[0];
  if (n < 1 || n > 1'000'000) fail(ErrorCode::MalformedInput, "vertex count out of range");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto uv = read_ints(lines[i], 2, i + 1);
    if (uv[0] < 1 || uv[0] > n || uv[1] < 1 || uv[1] > n) {
      fail(ErrorCode::MalformedInput, "line " + std::to_string(i + 1) + ": label out of 1.." + std::to_string(n));
    }
    edges.emplace_back(static_cast<Vertex>(uv[0] - 1), static_cast<Vertex>(uv[1] - 1));
  }
  return Tree::from_edges(static_cast<int>(n), std::move(edges));
}

std::string format_tree(const Tree& t) {
  std::string out = std::to_string(t.size()) + "\n";
  for (const auto& [u, v] : t.edges()) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

Tree tree_from_prufer(int n, std::span<const Vertex> code) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "tree needs at least one vertex");
  if (static_cast<int>(code.size()) != std::max(n - 2, 0)) {
    fail(ErrorCode::InvalidArgument, "Pruefer sequence must have length n-2");
  }
  if (n == 1) return Tree::from_edges(1, {});
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (Vertex v : code) {
    if (v < 0 || v >= n) fail(ErrorCode::InvalidArgument, "Pruefer entry out of range");
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (Vertex v : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Tree::from_edges(n, std::move(edges));
}

std::vector<Vertex> prufer_code(const Tree& t) {
  const int n = t.size();
  if (n <= 2) return {};
  std::vector<int> degree = t.degrees();
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Vertex> code;
  code.reserve(static_cast<std::size_t>(n - 2));
  while (static_cast<int>(code.size()) < n - 2) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    removed[leaf] = true;
    for (Vertex w : t.neighbors(leaf)) {
      if (removed[w]) continue;
      code.push_back(w);
      if (--degree[w] == 1) leaves.push(w);
    }
  }
  return code;
}

Tree random_tree(int n, std::uint64_t seed) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "tree needs at least one vertex");
  SplitMix64 rng(seed);
  std::vector<Vertex> code(static_cast<std::size_t>(std::max(n - 2, 0)));
  for (auto& c : code) c = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
  return tree_from_prufer(n, code);
}

int steiner_distance_bruteforce(const Tree& t, std::span<const Vertex> vertices) {
  if (vertices.empty()) fail(ErrorCode::EmptySet, "Steiner distance of an empty set");
  const int n = t.size();
  if (n > kBruteForceMaxVertices) fail(ErrorCode::TooLarge, "brute force limited to n <= 12");
  std::uint32_t required = 0;
  for (Vertex v : vertices) {
    if (v < 0 || v >= n) fail(ErrorCode::InvalidArgument, "vertex out of range");
    required |= 1U << v;
  }

  auto connected = [&](std::uint32_t w) {
    const int start = std::countr_zero(w);
    std::uint32_t seen = 1U << start;
    std::vector<Vertex> stack{start};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex x : t.neighbors(v)) {
        const std::uint32_t bit = 1U << x;
        if ((w & bit) && !(seen & bit)) {
          seen |= bit;
          stack.push_back(x);
        }
      }
    }
    return seen == w;
  };

  int best = n;
  const std::uint32_t all = (1U << n) - 1;
  for (std::uint32_t w = required; w <= all; w = (w + 1) | required) {
    const int size = std::popcount(w);
    if (size - 1 < best && connected(w)) best = size - 1;
    if (w == all) break;
  }
  return best;
}

Tree path_tree(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Tree::from_edges(n, std::move(edges));
}

Tree star_tree(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Tree::from_edges(n, std::move(edges));
}

}  // namespace steiner
