#ifndef BOXCODE_SEARCH_HPP
#define BOXCODE_SEARCH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxcode/arith.hpp"
#include "boxcode/box_code.hpp"
#include "boxcode/graph.hpp"
#include "boxcode/words.hpp"

namespace boxcode {

inline constexpr std::size_t kSearchMaxM = 4;
inline constexpr std::size_t kSearchMaxEta = 6;
inline constexpr unsigned kSearchMaxQ = 3;

struct SearchResult {
  std::size_t M = 0;
  std::size_t d = 0;
  unsigned q = 2;
  std::size_t eta_max = 0;
  bool feasible = false;
  Rational n;                     ///< meaningful only when feasible
  std::optional<BoxCode> witness;
  bool eta_limited = false;       ///< every optimum uses all eta_max coordinates
  std::uint64_t nodes_explored = 0;
};

namespace detail {

/**
 * Exhaustive search over multisets of columns. A column is a word of length
 * M over Σ_q ∪ {·} with protected values relabelled by first occurrence, so
 * per-coordinate relabellings are factored out; columns are chosen in
 * nondecreasing order, so coordinate permutations are too; and graph
 * automorphisms acting on rows prune the rest: a column set is kept only if
 * no automorphism maps one of its columns below its first column.
 */
class ColumnSearch {
 public:
  ColumnSearch(const Graph& g, std::size_t d, unsigned q, std::size_t eta_max)
      : g_(g), d_(d), q_(q), eta_max_(eta_max), m_(g.size()), edges_(g.edges()) {
    enumerate_columns();
    enumerate_automorphisms();
  }

  SearchResult run() {
    SearchResult res;
    res.M = m_;
    res.d = d_;
    res.q = q_;
    res.eta_max = eta_max_;

    best_cost_ = std::numeric_limits<std::size_t>::max();
    best_short_cost_ = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> deficit(edges_.size(), d_);
    std::vector<std::size_t> chosen;
    dfs(chosen, 0, 0, deficit);

    res.nodes_explored = nodes_;
    if (best_cost_ == std::numeric_limits<std::size_t>::max()) return res;
    res.feasible = true;
    res.n = Rational(static_cast<std::int64_t>(best_cost_), static_cast<std::int64_t>(m_));
    res.eta_limited = best_columns_.size() == eta_max_ && best_short_cost_ > best_cost_;
    res.witness = build(best_columns_);
    return res;
  }

 private:
  struct Column {
    std::vector<Symbol> rows;
    std::size_t cost = 0;
    std::vector<std::size_t> separates;  ///< indices of edges split by this column
  };

  static std::vector<Symbol> relabel(const std::vector<Symbol>& col) {
    std::vector<Symbol> out(col.size(), kDot);
    std::map<unsigned, unsigned> names;
    for (std::size_t r = 0; r < col.size(); ++r) {
      if (!col[r].is_protected()) continue;
      const auto [it, fresh] = names.emplace(col[r].value(), static_cast<unsigned>(names.size()));
      out[r] = Symbol::value(it->second);
    }
    return out;
  }

  void enumerate_columns() {
    // all words over {0..q-1, ·}^M already in first-occurrence form with >= 2 distinct values
    std::vector<Symbol> cur(m_, kDot);
    const auto rec = [&](auto&& self, std::size_t r, unsigned used) -> void {
      if (r == m_) {
        if (used >= 2) add_column(cur);
        return;
      }
      cur[r] = kDot;
      self(self, r + 1, used);
      for (unsigned v = 0; v <= std::min(used, q_ - 1); ++v) {
        cur[r] = Symbol::value(v);
        self(self, r + 1, std::max(used, v + 1));
      }
    };
    rec(rec, 0, 0);
    // most efficient columns first, so good codes are found early; ties by content
    std::stable_sort(columns_.begin(), columns_.end(), [](const Column& a, const Column& b) {
      const auto lhs = a.separates.size() * b.cost;
      const auto rhs = b.separates.size() * a.cost;
      if (lhs != rhs) return lhs > rhs;
      return a.rows < b.rows;
    });
    for (std::size_t i = 0; i < columns_.size(); ++i) index_[columns_[i].rows] = i;
    for (const auto& c : columns_) {
      if (c.separates.empty()) continue;
      best_ratio_ = std::max(best_ratio_, Rational(static_cast<std::int64_t>(c.separates.size()), static_cast<std::int64_t>(c.cost)));
    }
  }

  void add_column(const std::vector<Symbol>& rows) {
    Column c;
    c.rows = rows;
    c.cost = static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](Symbol s) { return s.is_protected(); }));
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const Symbol a = rows[edges_[e].first];
      const Symbol b = rows[edges_[e].second];
      if (a.is_protected() && b.is_protected() && a != b) c.separates.push_back(e);
    }
    columns_.push_back(std::move(c));
  }

  void enumerate_automorphisms() {
    std::vector<std::size_t> perm(m_);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (const auto& [u, v] : edges_)
        if (!g_.adjacent(perm[u], perm[v])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      bool identity = true;
      for (std::size_t i = 0; i < m_; ++i) identity = identity && perm[i] == i;
      if (identity) continue;
      std::vector<std::size_t> image(columns_.size());
      for (std::size_t c = 0; c < columns_.size(); ++c) {
        std::vector<Symbol> moved(m_);
        for (std::size_t r = 0; r < m_; ++r) moved[perm[r]] = columns_[c].rows[r];
        image[c] = index_.at(relabel(moved));
      }
      images_.push_back(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::size_t remaining_lower_bound(const std::vector<std::size_t>& deficit) const {
    std::size_t total = 0;
    std::size_t worst = 0;
    for (const auto x : deficit) {
      total += x;
      worst = std::max(worst, x);
    }
    if (total == 0) return 0;
    // each column splitting an edge has two protected entries on it
    std::size_t lb = 2 * worst;
    const Rational needed = Rational(static_cast<std::int64_t>(total)) / best_ratio_;
    const auto ceil_needed = static_cast<std::size_t>((needed.numerator() + needed.denominator() - 1) / needed.denominator());
    return std::max(lb, ceil_needed);
  }

  bool symmetric_smaller(std::size_t first, std::size_t c) const {
    return std::any_of(images_.begin(), images_.end(), [&](const auto& image) { return image[c] < first; });
  }

  void dfs(std::vector<std::size_t>& chosen, std::size_t start, std::size_t cost, const std::vector<std::size_t>& deficit) {
    ++nodes_;
    const bool done = std::all_of(deficit.begin(), deficit.end(), [](std::size_t x) { return x == 0; });
    if (done) {
      if (chosen.size() < eta_max_) best_short_cost_ = std::min(best_short_cost_, cost);
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_columns_ = chosen;
      }
      return;
    }
    if (chosen.size() == eta_max_ || best_ratio_.numerator() == 0) return;
    const std::size_t worst = *std::max_element(deficit.begin(), deficit.end());
    if (worst > eta_max_ - chosen.size()) return;
    const std::size_t lb = cost + remaining_lower_bound(deficit);
    // ties are kept only while they may reveal an optimum using fewer columns
    if (lb > best_cost_ || (lb == best_cost_ && best_short_cost_ <= best_cost_)) return;

    std::vector<std::size_t> next(deficit.size());
    for (std::size_t c = start; c < columns_.size(); ++c) {
      const Column& col = columns_[c];
      if (col.separates.empty()) continue;
      bool helps = false;
      for (const auto e : col.separates) helps = helps || deficit[e] > 0;
      if (!helps) continue;
      const std::size_t first = chosen.empty() ? c : chosen.front();
      if (symmetric_smaller(first, c)) continue;
      next = deficit;
      for (const auto e : col.separates)
        if (next[e] > 0) --next[e];
      chosen.push_back(c);
      dfs(chosen, c, cost + col.cost, next);
      chosen.pop_back();
    }
  }

  BoxCode build(const std::vector<std::size_t>& cols) const {
    std::vector<Word> words;
    for (std::size_t r = 0; r < m_; ++r) {
      std::vector<Symbol> s;
      for (const auto c : cols) s.push_back(columns_[c].rows[r]);
      words.emplace_back(q_, std::move(s));
    }
    return BoxCode::family(std::move(words));
  }

  const Graph& g_;
  std::size_t d_;
  unsigned q_;
  std::size_t eta_max_;
  std::size_t m_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<Column> columns_;
  std::map<std::vector<Symbol>, std::size_t> index_;
  std::vector<std::vector<std::size_t>> images_;
  Rational best_ratio_{0};

  std::size_t best_cost_ = 0;
  std::size_t best_short_cost_ = 0;
  std::vector<std::size_t> best_columns_;
  std::uint64_t nodes_ = 0;
};

inline void check_search_guards(std::size_t m, unsigned q, std::size_t eta_max) {
  if (m < 1 || m > kSearchMaxM) throw std::length_error("exact search needs 1 <= M <= 4, got " + std::to_string(m));
  if (q < 2 || q > kSearchMaxQ) throw std::length_error("exact search needs 2 <= q <= 3, got " + std::to_string(q));
  if (eta_max > kSearchMaxEta) throw std::length_error("exact search needs eta_max <= 6, got " + std::to_string(eta_max));
}

}  // namespace detail

/// min n over box codes for G: only G-edges need d^· >= d; protected entries confined to eta_max coordinates.
inline SearchResult exact_min_length_graph(const Graph& g, std::size_t d, unsigned q, std::size_t eta_max) {
  detail::check_search_guards(g.size(), q, eta_max);
  return detail::ColumnSearch(g, d, q, eta_max).run();
}

/// n^·_q(M, d) restricted to protected length eta_max.
inline SearchResult exact_min_length(std::size_t m, std::size_t d, unsigned q, std::size_t eta_max) {
  detail::check_search_guards(m, q, eta_max);
  return exact_min_length_graph(complete_graph(m), d, q, eta_max);
}

}  // namespace boxcode

#endif  // BOXCODE_SEARCH_HPP
