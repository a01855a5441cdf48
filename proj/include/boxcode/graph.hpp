#ifndef BOXCODE_GRAPH_HPP
#define BOXCODE_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boxcode/arith.hpp"

namespace boxcode {

/**
 * A simple undirected graph on vertices 0..M-1 (printed 1-indexed) with one
 * 64-bit adjacency mask per vertex.
 */
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  explicit Graph(std::size_t vertices) : adj_(vertices, 0) {
    if (vertices > kMaxVertices) throw std::length_error("graphs are limited to 64 vertices");
  }

  std::size_t size() const { return adj_.size(); }

  void add_edge(std::size_t u, std::size_t v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u + 1));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  bool adjacent(std::size_t u, std::size_t v) const {
    check(u);
    check(v);
    return (adj_[u] & bit(v)) != 0;
  }

  std::uint64_t neighbours(std::size_t u) const {
    check(u);
    return adj_[u];
  }

  std::size_t degree(std::size_t u) const { return static_cast<std::size_t>(std::popcount(neighbours(u))); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
    return twice / 2;
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < size(); ++u)
      for (std::size_t v = u + 1; v < size(); ++v)
        if (adj_[u] & bit(v)) out.emplace_back(u, v);
    return out;
  }

  bool is_isolated(std::size_t u) const { return neighbours(u) == 0; }

  /// The subgraph induced on the vertices with at least one neighbour, reindexed in order.
  Graph without_isolated() const {
    std::vector<std::size_t> keep;
    for (std::size_t u = 0; u < size(); ++u)
      if (!is_isolated(u)) keep.push_back(u);
    Graph g(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = i + 1; j < keep.size(); ++j)
        if (adjacent(keep[i], keep[j])) g.add_edge(i, j);
    return g;
  }

  std::uint64_t all_vertices() const { return size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1; }

  friend bool operator==(const Graph&, const Graph&) = default;

  static std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << v; }

 private:
  void check(std::size_t u) const {
    if (u >= size()) throw std::out_of_range("vertex " + std::to_string(u + 1) + " outside 1.." + std::to_string(size()));
  }

  std::vector<std::uint64_t> adj_;
};

// ---------------------------------------------------------------------------
// Generators

inline Graph complete_graph(std::size_t m) {
  Graph g(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v) g.add_edge(u, v);
  return g;
}

inline Graph edgeless_graph(std::size_t m) { return Graph(m); }

inline Graph cycle_graph(std::size_t m) {
  if (m < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g(m);
  for (std::size_t u = 0; u < m; ++u) g.add_edge(u, (u + 1) % m);
  return g;
}

inline Graph path_graph(std::size_t m) {
  Graph g(m);
  for (std::size_t u = 0; u + 1 < m; ++u) g.add_edge(u, u + 1);
  return g;
}

/// K_{1,leaves}; vertex 0 is the centre.
inline Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::size_t v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

/// G(M, p) with a seeded 64-bit Mersenne twister; edges are drawn in lexicographic order.
inline Graph erdos_renyi(std::size_t m, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// ---------------------------------------------------------------------------
// Exact invariants

inline constexpr std::size_t kIndependenceLimit = 30;
inline constexpr std::size_t kChromaticLimit = 20;

namespace detail {

// Branch and bound: take the lowest candidate or drop it; bound by |chosen| + |candidates|.
inline void max_independent(const Graph& g, std::uint64_t candidates, std::size_t chosen, std::size_t& best) {
  if (candidates == 0) {
    best = std::max(best, chosen);
    return;
  }
  if (chosen + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
  const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
  const std::uint64_t rest = candidates & ~Graph::bit(v);
  // a vertex with no candidate neighbour is always worth taking
  if ((g.neighbours(v) & rest) == 0) {
    max_independent(g, rest, chosen + 1, best);
    return;
  }
  max_independent(g, rest & ~g.neighbours(v), chosen + 1, best);
  max_independent(g, rest, chosen, best);
}

inline void check_independence_size(const Graph& g) {
  if (g.size() > kIndependenceLimit)
    throw std::length_error("exact independence number limited to " + std::to_string(kIndependenceLimit) + " vertices");
}

}  // namespace detail

/// α(G), exact.
inline std::size_t independence_number(const Graph& g) {
  detail::check_independence_size(g);
  std::size_t best = 0;
  detail::max_independent(g, g.all_vertices(), 0, best);
  return best;
}

/// α_u(G): the largest independent set containing u.
inline std::size_t independence_number_including(const Graph& g, std::size_t u) {
  detail::check_independence_size(g);
  std::size_t best = 0;
  detail::max_independent(g, g.all_vertices() & ~g.neighbours(u) & ~Graph::bit(u), 1, best);
  return best;
}

struct Coloring {
  std::size_t colors = 0;
  std::vector<std::size_t> color;  ///< per vertex, in [0, colors)
};

/**
 * χ(G) with a witness: tries k = 1, 2, ... and backtracks over vertices in
 * decreasing degree order, opening at most one new colour per step.
 */
inline Coloring chromatic_number(const Graph& g) {
  if (g.size() > kChromaticLimit)
    throw std::length_error("exact chromatic number limited to " + std::to_string(kChromaticLimit) + " vertices");
  const std::size_t m = g.size();
  Coloring out;
  if (m == 0) return out;
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });

  std::vector<std::size_t> color(m, 0);
  std::vector<std::uint64_t> members;
  const auto attempt = [&](auto&& self, std::size_t pos, std::size_t used, std::size_t k) -> bool {
    if (pos == m) return true;
    const std::size_t v = order[pos];
    for (std::size_t c = 0; c < std::min(used + 1, k); ++c) {
      if (members[c] & g.neighbours(v)) continue;
      members[c] |= Graph::bit(v);
      color[v] = c;
      if (self(self, pos + 1, std::max(used, c + 1), k)) return true;
      members[c] &= ~Graph::bit(v);
    }
    return false;
  };
  for (std::size_t k = 1; k <= m; ++k) {
    members.assign(k, 0);
    if (attempt(attempt, 0, 0, k)) {
      out.colors = k;
      out.color = color;
      return out;
    }
  }
  throw std::logic_error("no colouring found");
}

/// M²/(2α) − M/2, the Turán lower bound on |E|.
inline Rational turan_edge_lower(std::size_t m, std::size_t alpha) {
  if (alpha == 0) throw std::invalid_argument("independence number must be positive");
  const auto mm = static_cast<std::int64_t>(m);
  return Rational(mm * mm, 2 * static_cast<std::int64_t>(alpha)) - Rational(mm, 2);
}

inline Rational turan_edge_lower(const Graph& g) { return turan_edge_lower(g.size(), independence_number(g)); }

// ---------------------------------------------------------------------------
// Edge-list text: M on the first line, then one `u v` pair per line, 1-indexed.
// Blank lines and lines starting with '#' are ignored.

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  const auto content = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      line = line.substr(0, line.find('#'));
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out = line;
      return true;
    }
    return false;
  };
  const auto fail = [&](const std::string& why) {
    return std::invalid_argument("edge list line " + std::to_string(lineno) + ": " + why);
  };
  std::string text;
  if (!content(text)) throw std::invalid_argument("edge list is empty");
  std::istringstream head(text);
  long long m = -1;
  std::string extra;
  if (!(head >> m) || m < 0 || (head >> extra)) throw fail("expected the vertex count");
  Graph g(static_cast<std::size_t>(m));
  while (content(text)) {
    std::istringstream row(text);
    long long u = 0;
    long long v = 0;
    if (!(row >> u >> v) || (row >> extra)) throw fail("expected 'u v'");
    if (u < 1 || v < 1 || u > m || v > m) throw fail("vertex out of range 1.." + std::to_string(m));
    if (u == v) throw fail("self-loop");
    g.add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
  }
  return g;
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace boxcode

#endif  // BOXCODE_GRAPH_HPP
