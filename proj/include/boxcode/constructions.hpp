#ifndef BOXCODE_CONSTRUCTIONS_HPP
#define BOXCODE_CONSTRUCTIONS_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boxcode/arith.hpp"
#include "boxcode/box_code.hpp"
#include "boxcode/classic_codes.hpp"
#include "boxcode/words.hpp"

namespace boxcode {

/// What a builder did: its inputs and every choice it had to make.
struct Provenance {
  std::string construction;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> choices;
  bool trusted_components = false;  ///< some component was too large to verify
  std::vector<std::string> notes;
};

struct Constructed {
  BoxCode code;
  Provenance provenance;
};

// ---------------------------------------------------------------------------
// Hamming

inline constexpr unsigned kHammingConstructionMaxM = 4;

struct HammingConstructionParameters {
  std::size_t n = 0;          ///< Hamming length 2^m − 1
  BigInt M = 0;               ///< Hamming code size
  BigInt size = 0;            ///< M/2 + ⌈M/(2n)⌉
  BigInt unprotected = 0;     ///< codewords that lose their first coordinate
  BigInt total_norm = 0;
  Rational length;            ///< exact only while it fits 64 bits
  bool length_exact = false;
};

/**
 * Parameters of the Hamming-based box code from the weight enumerator alone,
 * without listing codewords. Codewords of even weight w with |w − (n−1)/2| >= 4
 * carry one · each.
 */
inline HammingConstructionParameters hamming_construction_parameters(unsigned m) {
  if (m < 3) throw std::invalid_argument("the Hamming construction needs m >= 3");
  const auto a = hamming_weight_enumerator(m);
  HammingConstructionParameters p;
  p.n = (std::size_t{1} << m) - 1;
  p.M = big_pow(2, p.n - m);
  const BigInt odd = (p.M + 2 * p.n - 1) / (2 * p.n);
  p.size = p.M / 2 + odd;
  const std::size_t mid = (p.n - 1) / 2;
  for (std::size_t w = 0; w < a.size(); w += 2)
    if ((w > mid ? w - mid : mid - w) >= 4) p.unprotected += a[w];
  p.total_norm = p.size * p.n - p.unprotected;
  if (p.total_norm <= BigInt(std::numeric_limits<std::int64_t>::max())) {
    p.length = Rational(static_cast<std::int64_t>(p.total_norm), static_cast<std::int64_t>(p.size));
    p.length_exact = true;
  }
  return p;
}

/**
 * Even-weight Hamming codewords plus the ⌈M/(2n)⌉ lexicographically smallest
 * codewords of weight (n−1)/2; coordinate 1 becomes · in even-weight codewords
 * of weight w with |w − (n−1)/2| >= 4. Listed for 3 <= m <= 4.
 */
inline Constructed construction_hamming(unsigned m) {
  if (m < 3) throw std::invalid_argument("the Hamming construction needs m >= 3");
  if (m > kHammingConstructionMaxM)
    throw std::length_error("construction_hamming lists codewords only for m <= 4; use hamming_construction_parameters");
  const LinearCode code = hamming_code(m);
  const std::size_t n = code.n();
  const std::uint64_t big_m = code.size();
  const std::uint64_t odd_needed = (big_m + 2 * n - 1) / (2 * n);
  const std::size_t mid = (n - 1) / 2;

  std::vector<std::uint64_t> even;
  std::vector<std::uint64_t> middle;
  code.for_each_binary_codeword([&](std::uint64_t cw) {
    const auto w = static_cast<std::size_t>(std::popcount(cw));
    if (w % 2 == 0) even.push_back(cw);
    else if (w == mid) middle.push_back(cw);
  });
  if (middle.size() < odd_needed)
    throw std::logic_error("too few Hamming codewords of weight (n-1)/2");
  std::sort(even.begin(), even.end());
  std::sort(middle.begin(), middle.end());
  middle.resize(odd_needed);

  const auto to_symbols = [&](std::uint64_t cw) {
    std::vector<Symbol> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = Symbol::value(static_cast<unsigned>(cw >> (n - 1 - i) & 1u));
    return s;
  };
  std::vector<Word> words;
  std::size_t dotted = 0;
  for (const auto cw : even) {
    auto s = to_symbols(cw);
    const auto w = static_cast<std::size_t>(std::popcount(cw));
    if ((w > mid ? w - mid : mid - w) >= 4) {
      s[0] = kDot;
      ++dotted;
    }
    words.emplace_back(2, std::move(s));
  }
  for (const auto cw : middle) words.emplace_back(2, to_symbols(cw));

  Provenance p{"hamming", {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"M", std::to_string(big_m)}}, {}, false, {}};
  p.choices.push_back("odd-weight codewords: the " + std::to_string(odd_needed) + " lexicographically smallest of weight " +
                      std::to_string(mid));
  p.choices.push_back("parity-check columns in increasing integer order, systematic generator");
  p.notes.push_back(std::to_string(dotted) + " even-weight codewords carry a dot in coordinate 1");
  return {BoxCode::from_words(std::move(words)), std::move(p)};
}

// ---------------------------------------------------------------------------
// Reed–Solomon

/// k + d − 2 + (1 + (q−1)·C(k+d−1, d)) / (q^(k−1) + 1).
inline Rational rs_construction_length_bound(std::uint32_t q, std::size_t k, std::size_t d) {
  const auto qk = static_cast<std::int64_t>(checked_pow(q, k - 1));
  const auto num = 1 + static_cast<std::int64_t>(checked_mul(q - 1, binomial(k + d - 1, d)));
  return Rational(static_cast<std::int64_t>(k + d - 2)) + Rational(num, qk + 1);
}

/**
 * C2 ∪ {c*} with c* the evaluation of x^(k−1); codewords of C2 at Hamming
 * distance other than d from c* lose their first coordinate.
 */
inline Constructed construction_rs(std::uint32_t q, std::size_t k, std::size_t d) {
  const ReedSolomonPair pair = rs_code(q, k, d);
  const GaloisField& field = pair.c1.field();
  const std::size_t n = pair.c1.n();
  const FieldVector points = rs_evaluation_points(field, n);
  const FieldVector star = evaluate_monomial(field, points, k - 1);

  std::vector<Word> words;
  std::size_t kept = 0;
  pair.c2.for_each_codeword([&](const FieldVector& cw) {
    std::size_t dist = 0;
    for (std::size_t i = 0; i < n; ++i) dist += cw[i] != star[i] ? 1 : 0;
    std::vector<Symbol> s;
    for (const auto e : cw) s.push_back(Symbol::value(e));
    if (dist == d) ++kept;
    else s[0] = kDot;
    words.emplace_back(q, std::move(s));
  });
  words.push_back(pair.c1.to_word(star));

  std::string pts;
  for (const auto x : points) pts += (pts.empty() ? "" : ",") + std::to_string(x);
  Provenance p{"rs",
               {{"q", std::to_string(q)}, {"k", std::to_string(k)}, {"d", std::to_string(d)}, {"n", std::to_string(n)}},
               {},
               false,
               {}};
  p.choices.push_back("field " + field.descriptor() + ", primitive element " + std::to_string(field.primitive_element()));
  p.choices.push_back("evaluation points alpha^0..alpha^(n-1) = " + pts);
  p.choices.push_back("C2 = evaluations of polynomials of degree < k-1 (degree filtration inside C1)");
  p.choices.push_back("c* = evaluation of x^(k-1)");
  p.notes.push_back(std::to_string(kept) + " codewords of C2 at distance exactly d from c* keep coordinate 1");
  return {BoxCode::from_words(std::move(words)), std::move(p)};
}

// ---------------------------------------------------------------------------
// Composition of perfect codes

/**
 * ∪_a a·C_a for one perfect (r = 0) component per symbol a. Components are
 * checked by tiling when q^eta is small enough; otherwise `trusted` must be
 * set, and the result records it.
 */
inline Constructed compose_perfect(const std::vector<BoxCode>& components, bool trusted = false) {
  if (components.empty()) throw std::invalid_argument("compose_perfect needs one component per symbol");
  const unsigned q = components.front().q();
  if (components.size() != q)
    throw std::invalid_argument("compose_perfect needs exactly q = " + std::to_string(q) + " components, got " +
                                std::to_string(components.size()));
  bool used_trust = false;
  std::vector<Word> words;
  for (unsigned a = 0; a < q; ++a) {
    const BoxCode& comp = components[a];
    if (comp.q() != q) throw std::invalid_argument("component alphabets differ");
    bool enumerable = true;
    try {
      enumerable = space_size(q, comp.eta()) <= kTilingSpaceLimit;
    } catch (const std::overflow_error&) {
      enumerable = false;
    }
    if (enumerable) {
      const auto rep = is_perfect(comp, 0);
      if (!rep.perfect)
        throw std::invalid_argument("component for symbol " + std::to_string(a) + " is not perfect (witness " +
                                    rep.witness->to_string() + ")");
    } else if (trusted) {
      used_trust = true;
    } else {
      throw std::length_error("component for symbol " + std::to_string(a) +
                              " is too large to verify; pass trusted=true to accept it");
    }
    for (const auto& c : comp.codewords()) {
      std::vector<Symbol> s{Symbol::value(a)};
      s.insert(s.end(), c.symbols().begin(), c.symbols().end());
      words.emplace_back(q, std::move(s));
    }
  }
  Provenance p{"compose", {{"q", std::to_string(q)}}, {}, used_trust, {}};
  for (unsigned a = 0; a < q; ++a)
    p.parameters.emplace_back("M_" + std::to_string(a), std::to_string(components[a].size()));
  if (used_trust) p.notes.push_back("at least one component accepted without a tiling check");
  return {BoxCode::from_words(std::move(words)), std::move(p)};
}

/// n/2 + n/(n+1): the average norm of the chain code C(n), by direct count.
inline Rational chain_code_length(std::size_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  return Rational(nn, 2) + Rational(nn, nn + 1);
}

/// The closed form n/2 + 1 − 1/n quoted for the chain family; it disagrees with the count for every n >= 2.
inline Rational chain_code_quoted_length(std::size_t n) {
  if (n == 0) throw std::invalid_argument("quoted chain formula needs n >= 1");
  const auto nn = static_cast<std::int64_t>(n);
  return Rational(nn, 2) + 1 - Rational(1, nn);
}

inline constexpr std::size_t kChainMaxN = 4096;

/**
 * C(0) = {·^∞}; C(i) = 0·C(i−1) ∪ 1·{·^∞}. Each step is verified by tiling
 * while 2^eta fits the bitmap; beyond that the inductive guarantee is used.
 */
inline Constructed chain_code(std::size_t n) {
  if (n > kChainMaxN) throw std::length_error("chain code limited to n <= " + std::to_string(kChainMaxN));
  const BoxCode dot = BoxCode::from_words({Word::unprotected(2)});
  BoxCode code = dot;
  bool trusted = false;
  for (std::size_t i = 1; i <= n; ++i) {
    Constructed step = compose_perfect({code, dot}, true);
    trusted = trusted || step.provenance.trusted_components;
    code = std::move(step.code);
  }
  const Rational counted = code.length();
  if (counted != chain_code_length(n)) throw std::logic_error("chain code count disagrees with n/2 + n/(n+1)");
  Provenance p{"chain", {{"n", std::to_string(n)}}, {}, trusted, {}};
  p.choices.push_back("component for 0 is C(i-1), component for 1 is the single all-dot word");
  if (n >= 1) {
    const Rational quoted = chain_code_quoted_length(n);
    p.notes.push_back("counted length " + to_string(counted) + "; closed form n/2+1-1/n gives " + to_string(quoted) +
                      (quoted == counted ? " (agree)" : " (mismatch)"));
  }
  return {std::move(code), std::move(p)};
}

// ---------------------------------------------------------------------------
// Meshing and nearly perfect covering codes

/// c ⊡ c': the common word of a Hamming-distance-1 binary pair with · at the differing coordinate.
inline Word meshing(const Word& c, const Word& c2) {
  if (c.q() != 2 || c2.q() != 2) throw std::invalid_argument("meshing is defined for binary words");
  if (c.eta() != c2.eta()) throw std::invalid_argument("meshing needs words of equal length");
  if (!c.is_fully_protected() || !c2.is_fully_protected())
    throw std::invalid_argument("meshing needs fully protected words");
  std::vector<Symbol> s = c.symbols();
  std::size_t diff = 0;
  for (std::size_t i = 0; i < c.eta(); ++i)
    if (c[i] != c2[i]) {
      s[i] = kDot;
      ++diff;
    }
  if (diff != 1) throw std::invalid_argument("meshing needs Hamming distance 1, got " + std::to_string(diff));
  return Word(2, std::move(s));
}

/**
 * One meshed codeword per pair of the canonical partition of a type-A
 * nearly perfect 1-covering code of even length n and size 2^n/n.
 */
inline Constructed construction_np1cc(const CoveringCode& code) {
  const std::size_t n = code.n();
  if (n % 2 != 0) throw std::invalid_argument("NP1CC construction needs even length, got " + std::to_string(n));
  if (n >= 32 || (std::uint64_t{1} << n) % n != 0 || code.size() != (std::uint64_t{1} << n) / n)
    throw std::invalid_argument("NP1CC of length " + std::to_string(n) + " must have 2^n/n codewords, got " +
                                std::to_string(code.size()));
  if (n <= CoveringCode::kMaxVerifiableLength && code.covering_radius() != 1)
    throw std::invalid_argument("code does not have covering radius 1");
  const CanonicalPartition part = canonical_partition(code);
  std::vector<Word> words;
  for (const auto& pr : part.pairs)
    words.push_back(meshing(Word::parse(binary_string(pr.low, n), 2), Word::parse(binary_string(pr.high, n), 2)));
  Provenance p{"np1cc", {{"n", std::to_string(n)}, {"size", std::to_string(code.size())}}, {}, false, {}};
  p.choices.push_back("codewords listed in the order of the lower member of each pair");
  p.notes.push_back(part.is_balanced() ? "canonical partition is balanced" : "canonical partition is not balanced");
  if (n > CoveringCode::kMaxVerifiableLength) p.notes.push_back("covering radius not verified (n > 16)");
  return {BoxCode::from_words(std::move(words)), std::move(p)};
}

/// The length-8 instance shipped with the library.
inline Constructed construction_np1cc_builtin8() {
  auto built = construction_np1cc(embedded_np1cc_8().first);
  built.provenance.parameters.emplace_back("source", "builtin8");
  return built;
}

// ---------------------------------------------------------------------------
// d = 1 gap

inline Rational d1_gap_length(std::size_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  return Rational(nn - 1) + Rational(nn + 1, static_cast<std::int64_t>(checked_pow(2, n - 1)) + 1);
}

inline constexpr std::size_t kD1GapMaxN = 20;

/// Zero vector plus all odd-weight vectors of {0,1}^n; coordinate 1 becomes · when the weight is at least 3.
inline Constructed construction_d1_gap(std::size_t n) {
  if (n < 2) throw std::invalid_argument("d1 gap construction needs n >= 2");
  if (n > kD1GapMaxN) throw std::length_error("d1 gap construction limited to n <= " + std::to_string(kD1GapMaxN));
  std::vector<Word> words;
  words.push_back(Word::from_values(2, std::vector<unsigned>(n, 0)));
  for (std::uint32_t v = 0; v < (1u << n); ++v) {
    const int w = std::popcount(v);
    if (w % 2 == 0) continue;
    std::vector<Symbol> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = Symbol::value(v >> (n - 1 - i) & 1u);
    if (w >= 3) s[0] = kDot;
    words.emplace_back(2, std::move(s));
  }
  Provenance p{"d1gap", {{"n", std::to_string(n)}}, {}, false, {}};
  p.choices.push_back("codewords listed as the zero vector, then odd-weight vectors in lexicographic order");
  return {BoxCode::from_words(std::move(words)), std::move(p)};
}

}  // namespace boxcode

#endif  // BOXCODE_CONSTRUCTIONS_HPP
