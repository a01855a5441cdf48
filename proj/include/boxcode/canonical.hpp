#ifndef BOXCODE_CANONICAL_HPP
#define BOXCODE_CANONICAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "boxcode/box_code.hpp"
#include "boxcode/words.hpp"

namespace boxcode {

namespace detail {

/**
 * Canonical labelling of a vertex-coloured graph by individualisation and
 * refinement. Leaves are ordered by (refinement traces along the path,
 * certificate); the minimum leaf is label-independent. Automorphisms found
 * as pairs of equal leaves prune children lying in the same orbit.
 */
class CanonicalLabeler {
 public:
  using Certificate = std::vector<std::int64_t>;
  using CertificateFn = std::function<Certificate(const std::vector<int>& position)>;

  CanonicalLabeler(std::vector<std::vector<int>> adjacency, std::vector<int> initial_colour,
                   std::vector<int> branch_priority, CertificateFn certificate)
      : adj_(std::move(adjacency)),
        priority_(std::move(branch_priority)),
        certificate_(std::move(certificate)) {
    std::vector<std::uint64_t> trace;
    std::vector<int> colour = rank_colours(initial_colour);
    refine(colour, trace);
    path_traces_.push_back(hash(trace));
    search(colour);
  }

  /// position[v] of every vertex in the canonical order.
  const std::vector<int>& labeling() const { return best_position_; }
  std::size_t leaves_visited() const { return leaves_; }

 private:
  static std::vector<int> rank_colours(const std::vector<int>& c) {
    std::vector<int> sorted(c);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(c.size());
    for (std::size_t v = 0; v < c.size(); ++v)
      out[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c[v]) - sorted.begin());
    return out;
  }

  static std::uint64_t hash(const std::vector<std::uint64_t>& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto x : data) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return h;
  }

  /// Colour refinement to an equitable partition; appends the quotient to `trace`.
  void refine(std::vector<int>& colour, std::vector<std::uint64_t>& trace) const {
    const std::size_t n = adj_.size();
    std::vector<std::vector<int>> sig(n);
    std::vector<int> order(n);
    int cells = 1 + *std::max_element(colour.begin(), colour.end());
    while (true) {
      for (std::size_t v = 0; v < n; ++v) {
        sig[v].clear();
        sig[v].push_back(colour[v]);
        for (const int u : adj_[v]) sig[v].push_back(colour[static_cast<std::size_t>(u)]);
        std::sort(sig[v].begin() + 1, sig[v].end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)]; });
      std::vector<int> next(n);
      int rank = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && sig[static_cast<std::size_t>(order[i])] != sig[static_cast<std::size_t>(order[i - 1])]) ++rank;
        next[static_cast<std::size_t>(order[i])] = rank;
      }
      colour = std::move(next);
      if (rank + 1 == cells) break;
      cells = rank + 1;
    }
    // quotient: per cell, its size and the neighbour-colour multiset of a member
    trace.push_back(static_cast<std::uint64_t>(cells));
    int last = -1;
    for (std::size_t i = 0; i < n; ++i) {
      const auto v = static_cast<std::size_t>(order[i]);
      if (colour[v] == last) continue;
      last = colour[v];
      trace.push_back(0xFFFFFFFFull);
      for (const int x : sig[v]) trace.push_back(static_cast<std::uint64_t>(x));
    }
  }

  static bool discrete(const std::vector<int>& colour) {
    std::vector<char> seen(colour.size(), 0);
    for (const int c : colour) {
      if (seen[static_cast<std::size_t>(c)]) return false;
      seen[static_cast<std::size_t>(c)] = 1;
    }
    return true;
  }

  std::vector<int> target_cell(const std::vector<int>& colour) const {
    std::vector<int> size(colour.size(), 0);
    for (const int c : colour) ++size[static_cast<std::size_t>(c)];
    int best_colour = -1;
    std::pair<int, int> best_key{0, 0};
    for (std::size_t v = 0; v < colour.size(); ++v) {
      const int c = colour[v];
      if (size[static_cast<std::size_t>(c)] < 2) continue;
      const std::pair<int, int> key{priority_[v], c};
      if (best_colour < 0 || key < best_key) {
        best_key = key;
        best_colour = c;
      }
    }
    std::vector<int> cell;
    for (std::size_t v = 0; v < colour.size(); ++v)
      if (colour[v] == best_colour) cell.push_back(static_cast<int>(v));
    return cell;
  }

  static std::vector<int> individualize(const std::vector<int>& colour, int v) {
    std::vector<int> out(colour);
    const int cv = colour[static_cast<std::size_t>(v)];
    for (std::size_t u = 0; u < colour.size(); ++u)
      if (colour[u] > cv || (colour[u] == cv && static_cast<int>(u) != v)) ++out[u];
    return out;
  }

  /// -1, 0, +1 comparing the current path's traces with the best leaf's prefix.
  int compare_with_best() const {
    if (!have_best_) return -1;
    for (std::size_t i = 0; i < path_traces_.size() && i < best_traces_.size(); ++i) {
      if (path_traces_[i] < best_traces_[i]) return -1;
      if (path_traces_[i] > best_traces_[i]) return 1;
    }
    return 0;
  }

  bool fixes_path(const std::vector<int>& gamma) const {
    return std::all_of(path_.begin(), path_.end(), [&](int v) { return gamma[static_cast<std::size_t>(v)] == v; });
  }

  static int find(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }

  std::vector<int> stabiliser_orbits() const {
    std::vector<int> parent(adj_.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : automorphisms_) {
      if (!fixes_path(gamma)) continue;
      for (std::size_t v = 0; v < gamma.size(); ++v) {
        const int a = find(parent, static_cast<int>(v));
        const int b = find(parent, gamma[v]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = find(parent, static_cast<int>(v));
    return parent;
  }

  void search(const std::vector<int>& colour) {
    const int cmp = compare_with_best();
    if (cmp > 0) return;

    if (discrete(colour)) {
      ++leaves_;
      Certificate cert = certificate_(colour);
      if (cmp < 0 || !have_best_ || cert < best_cert_) {
        have_best_ = true;
        best_cert_ = std::move(cert);
        best_traces_ = path_traces_;
        best_position_ = colour;
      } else if (cert == best_cert_) {
        // equal leaves: gamma maps v to the vertex holding the same position in the best leaf
        std::vector<int> at_position(colour.size());
        for (std::size_t v = 0; v < colour.size(); ++v) at_position[static_cast<std::size_t>(best_position_[v])] = static_cast<int>(v);
        std::vector<int> gamma(colour.size());
        for (std::size_t v = 0; v < colour.size(); ++v) gamma[v] = at_position[static_cast<std::size_t>(colour[v])];
        automorphisms_.push_back(std::move(gamma));
      }
      return;
    }

    const std::vector<int> cell = target_cell(colour);
    std::vector<int> explored;
    for (const int v : cell) {
      if (!explored.empty()) {
        const auto orbit = stabiliser_orbits();
        const bool covered = std::any_of(explored.begin(), explored.end(), [&](int u) {
          return orbit[static_cast<std::size_t>(u)] == orbit[static_cast<std::size_t>(v)];
        });
        if (covered) continue;
      }
      explored.push_back(v);
      std::vector<int> child = individualize(colour, v);
      std::vector<std::uint64_t> trace;
      refine(child, trace);
      path_.push_back(v);
      path_traces_.push_back(hash(trace));
      search(child);
      path_traces_.pop_back();
      path_.pop_back();
    }
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> priority_;
  CertificateFn certificate_;

  std::vector<int> path_;
  std::vector<std::uint64_t> path_traces_;

  bool have_best_ = false;
  Certificate best_cert_;
  std::vector<std::uint64_t> best_traces_;
  std::vector<int> best_position_;
  std::vector<std::vector<int>> automorphisms_;
  std::size_t leaves_ = 0;
};

}  // namespace detail

/**
 * A canonical representative of the class of box codes equivalent under
 * coordinate permutation, per-coordinate relabelling of protected values and
 * reordering of codewords. All-unprotected coordinates are dropped. Two codes
 * are equivalent exactly when their canonical forms compare equal.
 */
inline BoxCode canonicalize(const BoxCode& code) {
  const unsigned q = code.q();

  // distinct rows with multiplicities; identical rows are twins and would only inflate the search
  std::map<std::vector<Symbol>, int> multiplicity;
  for (const auto& w : code.codewords()) ++multiplicity[w.symbols()];
  std::vector<std::vector<Symbol>> rows;
  std::vector<int> mult;
  for (const auto& [row, count] : multiplicity) {
    rows.push_back(row);
    mult.push_back(count);
  }

  std::vector<std::size_t> columns;
  for (std::size_t c = 0; c < code.eta(); ++c)
    if (std::any_of(rows.begin(), rows.end(), [&](const auto& r) { return r[c].is_protected(); })) columns.push_back(c);

  const int n_rows = static_cast<int>(rows.size());
  const int n_cols = static_cast<int>(columns.size());
  // symbol vertices: one per (column, protected value present in it)
  std::vector<int> symbol_column;
  std::vector<unsigned> symbol_value;
  std::vector<std::vector<int>> symbol_id(columns.size(), std::vector<int>(q, -1));
  for (int ci = 0; ci < n_cols; ++ci) {
    for (unsigned a = 0; a < q; ++a) {
      const bool present = std::any_of(rows.begin(), rows.end(), [&](const auto& r) {
        const Symbol s = r[columns[static_cast<std::size_t>(ci)]];
        return s.is_protected() && s.value() == a;
      });
      if (!present) continue;
      symbol_id[static_cast<std::size_t>(ci)][a] = n_rows + n_cols + static_cast<int>(symbol_column.size());
      symbol_column.push_back(ci);
      symbol_value.push_back(a);
    }
  }
  const int n_symbols = static_cast<int>(symbol_column.size());
  const std::size_t n_vertices = static_cast<std::size_t>(n_rows + n_cols + n_symbols);

  std::vector<std::vector<int>> adj(n_vertices);
  std::vector<int> colour(n_vertices);
  std::vector<int> priority(n_vertices);
  const auto link = [&](int a, int b) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  };
  for (int r = 0; r < n_rows; ++r) {
    colour[static_cast<std::size_t>(r)] = mult[static_cast<std::size_t>(r)];  // rows: colours 1..max multiplicity
    priority[static_cast<std::size_t>(r)] = 1;
    for (int ci = 0; ci < n_cols; ++ci) {
      const Symbol s = rows[static_cast<std::size_t>(r)][columns[static_cast<std::size_t>(ci)]];
      if (s.is_protected()) link(r, symbol_id[static_cast<std::size_t>(ci)][s.value()]);
    }
  }
  const int col_colour = 1 + *std::max_element(mult.begin(), mult.end());
  for (int ci = 0; ci < n_cols; ++ci) {
    colour[static_cast<std::size_t>(n_rows + ci)] = col_colour;
    priority[static_cast<std::size_t>(n_rows + ci)] = 0;
  }
  for (int s = 0; s < n_symbols; ++s) {
    const int v = n_rows + n_cols + s;
    colour[static_cast<std::size_t>(v)] = col_colour + 1;
    priority[static_cast<std::size_t>(v)] = 0;
    link(v, n_rows + symbol_column[static_cast<std::size_t>(s)]);
  }

  // relabelled matrix for a discrete labelling: rows and columns in position order,
  // values ranked by position among the column's symbol vertices
  struct Layout {
    std::vector<int> row_at, col_at;
    std::vector<int> symbol_rank;       // per symbol vertex index
    std::vector<int> symbol_col_pos;    // column position of each symbol, in symbol position order
  };
  const auto layout = [&](const std::vector<int>& pos) {
    Layout l;
    l.row_at.assign(static_cast<std::size_t>(n_rows), 0);
    l.col_at.assign(static_cast<std::size_t>(n_cols), 0);
    for (int r = 0; r < n_rows; ++r) l.row_at[static_cast<std::size_t>(pos[static_cast<std::size_t>(r)])] = r;
    std::vector<int> col_pos(static_cast<std::size_t>(n_cols));
    for (int ci = 0; ci < n_cols; ++ci) {
      col_pos[static_cast<std::size_t>(ci)] = pos[static_cast<std::size_t>(n_rows + ci)] - n_rows;
      l.col_at[static_cast<std::size_t>(col_pos[static_cast<std::size_t>(ci)])] = ci;
    }
    std::vector<int> sym_at(static_cast<std::size_t>(n_symbols));
    for (int s = 0; s < n_symbols; ++s)
      sym_at[static_cast<std::size_t>(pos[static_cast<std::size_t>(n_rows + n_cols + s)] - n_rows - n_cols)] = s;
    l.symbol_rank.assign(static_cast<std::size_t>(n_symbols), 0);
    std::vector<int> next_rank(static_cast<std::size_t>(n_cols), 0);
    for (const int s : sym_at) {
      const int ci = symbol_column[static_cast<std::size_t>(s)];
      l.symbol_rank[static_cast<std::size_t>(s)] = next_rank[static_cast<std::size_t>(ci)]++;
      l.symbol_col_pos.push_back(col_pos[static_cast<std::size_t>(ci)]);
    }
    return l;
  };
  const auto relabelled = [&](const Layout& l, int r) {
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(n_cols));
    for (const int ci : l.col_at) {
      const Symbol s = rows[static_cast<std::size_t>(r)][columns[static_cast<std::size_t>(ci)]];
      out.push_back(s.is_protected()
                        ? Symbol::value(static_cast<unsigned>(l.symbol_rank[static_cast<std::size_t>(symbol_id[static_cast<std::size_t>(ci)][s.value()] - n_rows - n_cols)]))
                        : kDot);
    }
    return out;
  };
  const auto certificate = [&](const std::vector<int>& pos) {
    const Layout l = layout(pos);
    detail::CanonicalLabeler::Certificate cert(l.symbol_col_pos.begin(), l.symbol_col_pos.end());
    for (const int r : l.row_at) {
      cert.push_back(mult[static_cast<std::size_t>(r)]);
      for (const Symbol s : relabelled(l, r)) cert.push_back(s.is_protected() ? static_cast<std::int64_t>(s.value()) : -1);
    }
    return cert;
  };

  const detail::CanonicalLabeler labeler(adj, colour, priority, certificate);
  const Layout l = layout(labeler.labeling());
  std::vector<Word> out;
  for (const int r : l.row_at)
    for (int k = 0; k < mult[static_cast<std::size_t>(r)]; ++k) out.emplace_back(q, relabelled(l, r));
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return a.symbols() < b.symbols(); });
  return BoxCode::family(std::move(out));
}

inline bool equivalent(const BoxCode& a, const BoxCode& b) {
  return a.q() == b.q() && a.size() == b.size() && canonicalize(a) == canonicalize(b);
}

}  // namespace boxcode

#endif  // BOXCODE_CANONICAL_HPP
