#ifndef BOXCODE_COVERING_HPP
#define BOXCODE_COVERING_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boxcode/box_code.hpp"
#include "boxcode/graph.hpp"
#include "boxcode/words.hpp"

namespace boxcode {

/// A complete bipartite graph (A, B) on a subset of [M]; vertices are 0-based.
struct Biclique {
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;

  std::size_t order() const { return a.size() + b.size(); }
  bool empty() const { return a.empty() && b.empty(); }
  friend bool operator==(const Biclique&, const Biclique&) = default;
};

/**
 * A finite collection of bicliques over the vertex set [M]. Sides are kept
 * sorted; a vertex may appear in at most one side of a given biclique.
 */
class Covering {
 public:
  explicit Covering(std::size_t m, std::vector<Biclique> bicliques = {}) : m_(m) {
    for (auto& h : bicliques) add(std::move(h));
  }

  void add(Biclique h) {
    std::sort(h.a.begin(), h.a.end());
    std::sort(h.b.begin(), h.b.end());
    std::vector<char> seen(m_, 0);
    for (const auto* side : {&h.a, &h.b})
      for (const auto v : *side) {
        if (v >= m_) throw std::out_of_range("biclique vertex " + std::to_string(v + 1) + " outside 1.." + std::to_string(m_));
        if (seen[v]) throw std::invalid_argument("vertex " + std::to_string(v + 1) + " appears twice in one biclique");
        seen[v] = 1;
      }
    bicliques_.push_back(std::move(h));
  }

  std::size_t vertices() const { return m_; }
  const std::vector<Biclique>& bicliques() const { return bicliques_; }

  /// Σ_i |V(H_i)|.
  std::size_t capacity() const {
    std::size_t total = 0;
    for (const auto& h : bicliques_) total += h.order();
    return total;
  }

  /**
   * Drops fully empty bicliques, puts the side holding the smallest vertex
   * first and sorts the list. Two coverings that differ only in these
   * respects normalise to the same value.
   */
  Covering normalized() const {
    std::vector<Biclique> out;
    for (auto h : bicliques_) {
      if (h.empty()) continue;
      if (h.a.empty() || (!h.b.empty() && h.b.front() < h.a.front())) std::swap(h.a, h.b);
      out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), [](const Biclique& x, const Biclique& y) {
      return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    return Covering(m_, std::move(out));
  }

  /// Number of bicliques separating u and v.
  std::size_t edge_multiplicity(std::size_t u, std::size_t v) const {
    std::size_t count = 0;
    for (const auto& h : bicliques_) {
      const bool ua = std::binary_search(h.a.begin(), h.a.end(), u);
      const bool ub = std::binary_search(h.b.begin(), h.b.end(), u);
      const bool va = std::binary_search(h.a.begin(), h.a.end(), v);
      const bool vb = std::binary_search(h.b.begin(), h.b.end(), v);
      if ((ua && vb) || (ub && va)) ++count;
    }
    return count;
  }

  /// Row-major M×M table of edge multiplicities, for bulk checks.
  std::vector<std::uint32_t> multiplicity_table() const {
    std::vector<std::uint32_t> t(m_ * m_, 0);
    for (const auto& h : bicliques_)
      for (const auto u : h.a)
        for (const auto v : h.b) {
          ++t[u * m_ + v];
          ++t[v * m_ + u];
        }
    return t;
  }

  friend bool operator==(const Covering&, const Covering&) = default;

 private:
  std::size_t m_;
  std::vector<Biclique> bicliques_;
};

inline std::size_t capacity(const Covering& h) { return h.capacity(); }

/// One biclique per coordinate i < eta: A_i holds the codewords with 0 there, B_i those with 1.
inline Covering from_box_code(const BoxCode& code) {
  if (code.q() != 2) throw std::invalid_argument("the covering correspondence is defined for binary codes only");
  Covering h(code.size());
  for (std::size_t i = 0; i < code.eta(); ++i) {
    Biclique bc;
    for (std::size_t c = 0; c < code.size(); ++c) {
      const Symbol s = code[c][i];
      if (!s.is_protected()) continue;
      (s.value() == 0 ? bc.a : bc.b).push_back(c);
    }
    h.add(std::move(bc));
  }
  return h;
}

/**
 * Inverse correspondence: vertex v becomes a codeword whose coordinate i is
 * 0 or 1 by the side of H_i holding v, and · otherwise. The side holding
 * the smallest vertex of H_i is written as 0.
 */
inline BoxCode to_box_code(const Covering& h) {
  if (h.vertices() == 0) throw std::invalid_argument("a covering of the empty vertex set has no box code");
  const std::size_t eta = h.bicliques().size();
  std::vector<std::vector<Symbol>> rows(h.vertices(), std::vector<Symbol>(eta, kDot));
  for (std::size_t i = 0; i < eta; ++i) {
    const Biclique& bc = h.bicliques()[i];
    const bool flip = bc.a.empty() || (!bc.b.empty() && bc.b.front() < bc.a.front());
    for (const auto v : bc.a) rows[v][i] = Symbol::value(flip ? 1 : 0);
    for (const auto v : bc.b) rows[v][i] = Symbol::value(flip ? 0 : 1);
  }
  std::vector<Word> words;
  for (auto& r : rows) words.emplace_back(2, std::move(r));
  return BoxCode::family(std::move(words));
}

struct EdgeDeficit {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t multiplicity = 0;
  std::size_t deficit = 0;  ///< d − multiplicity
};

struct CoveringReport {
  bool covered = true;
  std::vector<EdgeDeficit> deficits;  ///< only edges covered fewer than d times
};

/// Every edge of G must be separated by at least d bicliques.
inline CoveringReport verify_covering(const Graph& g, const Covering& h, std::size_t d) {
  if (g.size() != h.vertices())
    throw std::invalid_argument("graph has " + std::to_string(g.size()) + " vertices, covering has " +
                                std::to_string(h.vertices()));
  CoveringReport rep;
  const auto table = h.multiplicity_table();
  for (const auto& [u, v] : g.edges()) {
    const std::size_t mult = table[u * h.vertices() + v];
    if (mult >= d) continue;
    rep.covered = false;
    rep.deficits.push_back({u, v, mult, d - mult});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Text form: `covering M=<M>`, then one `A: 1 3 | B: 2 5` line per biclique (1-indexed).

inline void write_covering(std::ostream& out, const Covering& h) {
  out << "covering M=" << h.vertices() << '\n';
  for (const auto& bc : h.bicliques()) {
    out << "A:";
    for (const auto v : bc.a) out << ' ' << v + 1;
    out << " | B:";
    for (const auto v : bc.b) out << ' ' << v + 1;
    out << '\n';
  }
}

inline Covering read_covering(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  const auto fail = [&](const std::string& why) {
    return std::invalid_argument("covering line " + std::to_string(lineno) + ": " + why);
  };
  const auto next = [&]() {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first != std::string::npos && line[first] != '#') return true;
    }
    return false;
  };
  if (!next()) throw std::invalid_argument("covering file is empty");
  std::istringstream head(line);
  std::string tag;
  std::string field;
  if (!(head >> tag >> field) || tag != "covering" || !field.starts_with("M=")) throw fail("expected 'covering M=<M>'");
  std::size_t m = 0;
  try {
    std::size_t used = 0;
    m = std::stoul(field.substr(2), &used);
    if (used != field.size() - 2) throw fail("bad vertex count");
  } catch (const std::logic_error&) {
    throw fail("bad vertex count");
  }
  Covering h(m);
  while (next()) {
    const auto bar = line.find('|');
    if (bar == std::string::npos) throw fail("expected 'A: ... | B: ...'");
    const auto side = [&](std::string text, const char* label) {
      std::istringstream s(text);
      std::string head_token;
      if (!(s >> head_token) || head_token != label) throw fail(std::string("expected '") + label + "'");
      std::vector<std::size_t> vs;
      std::string tok;
      while (s >> tok) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
          v = std::stoul(tok, &used);
        } catch (const std::logic_error&) {
          throw fail("bad vertex '" + tok + "'");
        }
        if (used != tok.size() || v < 1 || v > m) throw fail("vertex '" + tok + "' outside 1.." + std::to_string(m));
        vs.push_back(v - 1);
      }
      return vs;
    };
    Biclique bc{side(line.substr(0, bar), "A:"), side(line.substr(bar + 1), "B:")};
    try {
      h.add(std::move(bc));
    } catch (const std::exception& e) {
      throw fail(e.what());
    }
  }
  return h;
}

}  // namespace boxcode

#endif  // BOXCODE_COVERING_HPP
