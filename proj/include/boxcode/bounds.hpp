#ifndef BOXCODE_BOUNDS_HPP
#define BOXCODE_BOUNDS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxcode/arith.hpp"
#include "boxcode/box_code.hpp"
#include "boxcode/graph.hpp"
#include "boxcode/words.hpp"

namespace boxcode {

/// Float slack used when an exact length is compared with a floating-point lower bound.
inline constexpr double kBoundSlack = 1e-9;

/// n >= bound up to rounding in the bound's evaluation.
inline bool respects_lower_bound(const Rational& n, double bound) { return to_double(n) + kBoundSlack >= bound; }

// ---------------------------------------------------------------------------
// Classical bounds (they constrain ordinary codes; box codes may beat them)

/// Smallest n with M·Σ_{i<=t} C(n,i)(q−1)^i <= q^n, t = ⌊(d−1)/2⌋.
inline std::size_t ball_packing_min_length(std::uint64_t m, std::size_t d, unsigned q) {
  if (m == 0 || d == 0 || q < 2) throw std::invalid_argument("ball packing needs M >= 1, d >= 1, q >= 2");
  const std::size_t t = (d - 1) / 2;
  for (std::size_t n = 0;; ++n) {
    BigInt volume = 0;
    for (std::size_t i = 0; i <= std::min(t, n); ++i) volume += big_binomial(n, i) * big_pow(q - 1, i);
    if (BigInt(m) * volume <= big_pow(q, n)) return n;
  }
}

/// ⌈log_q M⌉ + d − 1.
inline std::size_t singleton_min_length(std::uint64_t m, std::size_t d, unsigned q) {
  if (m == 0 || d == 0 || q < 2) throw std::invalid_argument("Singleton bound needs M >= 1, d >= 1, q >= 2");
  return ceil_log(m, q) + d - 1;
}

// ---------------------------------------------------------------------------
// Binary box-code lower bounds on n^·_2(M, d)

inline double han_lower(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("M must be positive");
  return std::log2(static_cast<double>(m));
}

namespace detail {

inline void check_md(std::uint64_t m, std::size_t d) {
  if (m < 2) throw std::invalid_argument("bound needs M >= 2");
  if (d < 1) throw std::invalid_argument("bound needs d >= 1");
}

inline double half_floor(std::size_t d) { return static_cast<double>((d - 1) / 2); }

}  // namespace detail

inline double kimlee_lower(std::uint64_t m, std::size_t d) {
  detail::check_md(m, d);
  const double lm = std::log2(static_cast<double>(m));
  const double first = 2.0 * static_cast<double>(d) * (1.0 - 1.0 / static_cast<double>(m));
  double second = lm - static_cast<double>(d) - 1.0;
  if (detail::half_floor(d) > 0) {
    const double arg = lm / static_cast<double>(d);
    if (arg <= 0) return first;
    second += detail::half_floor(d) * std::log2(arg);
  }
  return std::max(first, second);
}

/// log2 M + ⌊(d−1)/2⌋·log2(2 log2 M/(d−1)); the product is 0 when ⌊(d−1)/2⌋ = 0.
inline std::optional<double> alon_second_term(double log_ratio, std::size_t d) {
  if (detail::half_floor(d) == 0) return log_ratio;
  const double arg = 2.0 * log_ratio / static_cast<double>(d - 1);
  if (arg <= 0) return std::nullopt;
  return log_ratio + detail::half_floor(d) * std::log2(arg);
}

inline double alon_lower(std::uint64_t m, std::size_t d) {
  detail::check_md(m, d);
  const double first = 2.0 * static_cast<double>(d) * (1.0 - 1.0 / static_cast<double>(m));
  const auto second = alon_second_term(std::log2(static_cast<double>(m)), d);
  return second ? std::max(first, *second) : first;
}

// ---------------------------------------------------------------------------
// Graph bounds (per vertex, so directly comparable with n^·_{G,2})

inline double katona_szemeredi_lower(const Graph& g) {
  const double m = static_cast<double>(g.size());
  if (g.size() == 0) return 0.0;
  double sum = 0.0;
  for (std::size_t u = 0; u < g.size(); ++u) sum += std::log2(m / (m - static_cast<double>(g.degree(u))));
  return sum / m;
}

inline double alon_graph_lower(const Graph& g) {
  const double m = static_cast<double>(g.size());
  if (g.size() == 0) return 0.0;
  double sum = 0.0;
  for (std::size_t u = 0; u < g.size(); ++u)
    sum += std::log2(m / static_cast<double>(independence_number_including(g, u)));
  return sum / m;
}

struct IndependenceBound {
  double value = 0.0;
  std::array<std::optional<double>, 3> terms;  ///< absent when a term is undefined
  std::size_t isolated = 0;                    ///< vertices removed before evaluation
  std::size_t alpha = 0;                       ///< α of the stripped graph
};

/**
 * Lower bound on n^·_{G,2}(M, d) from the independence structure of G:
 * the max of 2d/α − 2d/M, the Alon-type term with M/α in place of M, and
 * ⌊(d−1)/2⌋ + (1/M)Σ_u log2(M/α_u). Evaluated on G with its isolated
 * vertices removed; a graph without edges gives 0.
 */
inline IndependenceBound independence_lower(const Graph& g, std::size_t d) {
  if (d < 1) throw std::invalid_argument("bound needs d >= 1");
  IndependenceBound out;
  const Graph h = g.without_isolated();
  out.isolated = g.size() - h.size();
  if (h.size() == 0) return out;

  const double m = static_cast<double>(h.size());
  out.alpha = independence_number(h);
  const double alpha = static_cast<double>(out.alpha);
  const double dd = static_cast<double>(d);
  out.terms[0] = 2.0 * dd / alpha - 2.0 * dd / m;
  out.terms[1] = alon_second_term(std::log2(m / alpha), d);
  double sum = 0.0;
  for (std::size_t u = 0; u < h.size(); ++u)
    sum += std::log2(m / static_cast<double>(independence_number_including(h, u)));
  out.terms[2] = detail::half_floor(d) + sum / m;
  out.value = 0.0;
  for (const auto& t : out.terms)
    if (t) out.value = std::max(out.value, *t);
  return out;
}

// ---------------------------------------------------------------------------
// Covering codes

/**
 * Smallest M with M·(Σ_{i<=R} C(n,i) − C(n,R)/⌈(n−R)/(R+1)⌉·(⌈(n+1)/(R+1)⌉ − (n+1)/(R+1))) >= 2^n,
 * Van Wee's bound on binary R-covering codes. The correction vanishes when R+1 divides n+1.
 */
inline BigInt vanwee_min_size(std::size_t n, std::size_t r) {
  if (r < 1 || n < r) throw std::invalid_argument("Van Wee bound needs n >= R >= 1");
  BigInt ball = 0;
  for (std::size_t i = 0; i <= r; ++i) ball += big_binomial(n, i);
  const BigInt space = big_pow(2, n);
  const std::size_t r1 = r + 1;
  const std::size_t excess = ((n + 1 + r) / r1) * r1 - (n + 1);  // ⌈(n+1)/(R+1)⌉(R+1) − (n+1)
  if (excess == 0) return (space + ball - 1) / ball;
  const std::size_t t = (n - r + r1 - 1) / r1;  // ⌈(n−R)/(R+1)⌉
  // coefficient = (ball·t·(R+1) − C(n,R)·excess) / (t·(R+1))
  const BigInt num = ball * t * r1 - big_binomial(n, r) * excess;
  const BigInt den = BigInt(t) * r1;
  if (num <= 0) throw std::domain_error("Van Wee coefficient is not positive");
  const BigInt target = space * den;
  return (target + num - 1) / num;
}

/// The plain ball-covering minimum ⌈2^n / Σ_{i<=R} C(n,i)⌉.
inline BigInt ball_covering_min_size(std::size_t n, std::size_t r) {
  BigInt ball = 0;
  for (std::size_t i = 0; i <= r; ++i) ball += big_binomial(n, i);
  return (big_pow(2, n) + ball - 1) / ball;
}

// ---------------------------------------------------------------------------
// Upper bound through colouring

struct ColoringCode {
  BoxCode code;                            ///< vertex-indexed, repeats allowed
  Coloring coloring;
  std::vector<std::size_t> class_codeword; ///< donor index used for each colour class
};

/**
 * A code for G obtained by giving every vertex of a colour class the same
 * donor codeword. Larger classes receive shorter donor codewords, so the
 * average length never exceeds that of the χ(G) donor codewords used.
 */
inline ColoringCode coloring_upper(const Graph& g, std::size_t d, unsigned q, const BoxCode& donor) {
  if (g.size() == 0) throw std::invalid_argument("graph has no vertices");
  if (donor.q() != q) throw std::invalid_argument("donor alphabet differs from q");
  Coloring col = chromatic_number(g);
  if (donor.size() < col.colors)
    throw std::invalid_argument("donor has " + std::to_string(donor.size()) + " codewords but chi(G) = " +
                                std::to_string(col.colors));

  std::vector<std::size_t> class_size(col.colors, 0);
  for (const auto c : col.color) ++class_size[c];
  std::vector<std::size_t> classes(col.colors);
  std::vector<std::size_t> words(donor.size());
  for (std::size_t i = 0; i < classes.size(); ++i) classes[i] = i;
  for (std::size_t i = 0; i < words.size(); ++i) words[i] = i;
  std::stable_sort(classes.begin(), classes.end(), [&](auto a, auto b) { return class_size[a] > class_size[b]; });
  std::stable_sort(words.begin(), words.end(), [&](auto a, auto b) { return donor[a].norm() < donor[b].norm(); });

  std::vector<std::size_t> chosen(col.colors);
  for (std::size_t i = 0; i < classes.size(); ++i) chosen[classes[i]] = words[i];
  for (std::size_t a = 0; a < chosen.size(); ++a)
    for (std::size_t b = a + 1; b < chosen.size(); ++b)
      if (box_distance(donor[chosen[a]], donor[chosen[b]]) < d)
        throw std::invalid_argument("donor codewords closer than d");

  std::vector<Word> assigned;
  for (std::size_t v = 0; v < g.size(); ++v) assigned.push_back(donor[chosen[col.color[v]]]);
  BoxCode code = BoxCode::family(std::move(assigned));
  for (const auto& [u, v] : g.edges())
    if (box_distance(code[u], code[v]) < d) throw std::logic_error("colouring code violates an edge");
  return {std::move(code), std::move(col), std::move(chosen)};
}

/// Every edge {u, v} of G has d^·(c_u, c_v) >= d.
inline bool is_graph_code(const Graph& g, const BoxCode& code, std::size_t d) {
  if (code.size() != g.size()) throw std::invalid_argument("code size differs from vertex count");
  for (const auto& [u, v] : g.edges())
    if (box_distance(code[u], code[v]) < d) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Report rows

struct BoundRow {
  std::string name;
  std::optional<double> value;  ///< absent when not applicable
  std::string scope;            ///< "box" (bounds n^·), "classical" (bounds n_q) or "graph"
  std::string citation;
  std::string note;
};

/// All bounds for (M, d, q) with M given.
inline std::vector<BoundRow> bound_table(std::uint64_t m, std::size_t d, unsigned q) {
  std::vector<BoundRow> rows;
  const bool binary = q == 2;
  const bool pair = m >= 2;
  rows.push_back({"han", binary && d == 1 ? std::optional<double>(han_lower(m)) : std::nullopt, "box",
                  "Hansel 1964", binary ? (d == 1 ? "" : "d = 1 only") : "binary only"});
  rows.push_back({"kimlee", binary && pair ? std::optional<double>(kimlee_lower(m, d)) : std::nullopt, "box",
                  "Kim and Lee 2023, Theorem 1.3", binary ? (pair ? "" : "needs M >= 2") : "binary only"});
  rows.push_back({"alon", binary && pair ? std::optional<double>(alon_lower(m, d)) : std::nullopt, "box",
                  "Alon 2023, Theorem 1.1", binary ? (pair ? "" : "needs M >= 2") : "binary only"});
  rows.push_back({"ball-packing", static_cast<double>(ball_packing_min_length(m, d, q)), "classical",
                  "sphere packing (MacWilliams and Sloane, ch. 1)", "radius floor((d-1)/2)"});
  rows.push_back({"singleton", static_cast<double>(singleton_min_length(m, d, q)), "classical", "Singleton 1964",
                  ""});
  return rows;
}

/// Graph bounds for n^·_{G,2}(M, d).
inline std::vector<BoundRow> graph_bound_table(const Graph& g, std::size_t d) {
  std::vector<BoundRow> rows;
  const IndependenceBound ib = independence_lower(g, d);
  rows.push_back({"independence", ib.value, "graph", "independence-number bound on n^._{G,2}",
                  "alpha=" + std::to_string(ib.alpha) + ", isolated removed=" + std::to_string(ib.isolated)});
  rows.push_back({"katona-szemeredi", d == 1 ? std::optional<double>(katona_szemeredi_lower(g)) : std::nullopt,
                  "graph", "Katona and Szemeredi 1967", d == 1 ? "" : "d = 1 only"});
  rows.push_back({"alon-graph", d == 1 ? std::optional<double>(alon_graph_lower(g)) : std::nullopt, "graph",
                  "Alon 2023", d == 1 ? "" : "d = 1 only"});
  if (g.size() <= kChromaticLimit)
    rows.push_back({"chromatic-number", static_cast<double>(chromatic_number(g).colors), "graph",
                    "upper bound: n^._{G,q}(M,d) <= n^._q(chi(G),d)", "value is chi(G)"});
  return rows;
}

}  // namespace boxcode

#endif  // BOXCODE_BOUNDS_HPP
