#ifndef BOXCODE_CLASSIC_CODES_HPP
#define BOXCODE_CLASSIC_CODES_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "boxcode/arith.hpp"
#include "boxcode/finite_field.hpp"
#include "boxcode/words.hpp"

namespace boxcode {

using Element = GaloisField::Element;
using FieldVector = std::vector<Element>;

/**
 * A classical linear [n, k, d]_q code given by a k x n generator matrix.
 * The declared distance is trusted; minimum_distance() recomputes it by
 * enumeration when q^k is small enough.
 */
class LinearCode {
 public:
  static constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 22;
  static constexpr std::uint64_t kBinaryEnumerationLimit = std::uint64_t{1} << 26;

  LinearCode(GaloisField field, std::vector<FieldVector> generator, std::size_t declared_distance)
      : field_(std::move(field)), generator_(std::move(generator)), declared_distance_(declared_distance) {
    if (generator_.empty()) throw std::invalid_argument("generator matrix has no rows");
    n_ = generator_.front().size();
    for (const auto& row : generator_) {
      if (row.size() != n_) throw std::invalid_argument("generator rows differ in length");
      for (const Element e : row)
        if (e >= field_.order()) throw std::invalid_argument("generator entry outside the field");
    }
    if (rank() != generator_.size()) throw std::invalid_argument("generator rows are linearly dependent");
  }

  const GaloisField& field() const { return field_; }
  unsigned q() const { return field_.order(); }
  std::size_t n() const { return n_; }
  std::size_t k() const { return generator_.size(); }
  std::size_t declared_distance() const { return declared_distance_; }
  const std::vector<FieldVector>& generator() const { return generator_; }

  std::uint64_t size() const { return checked_pow(q(), k()); }

  FieldVector encode(const FieldVector& message) const {
    if (message.size() != k()) throw std::invalid_argument("message length must equal k");
    FieldVector cw(n_, 0);
    for (std::size_t r = 0; r < k(); ++r) {
      if (message[r] == 0) continue;
      for (std::size_t c = 0; c < n_; ++c)
        cw[c] = field_.add(cw[c], field_.mul(message[r], generator_[r][c]));
    }
    return cw;
  }

  /// Visits every codeword; messages run in base-q order with row 0 most significant.
  template <class Visitor>
  void for_each_codeword(Visitor&& visit) const {
    const std::uint64_t total = guarded_size(kEnumerationLimit);
    FieldVector message(k(), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t r = k(); r > 0; --r) {
        message[r - 1] = static_cast<Element>(rest % q());
        rest /= q();
      }
      visit(static_cast<const FieldVector&>(encode(message)));
    }
  }

  /// Binary codes only: codewords as bit masks (coordinate 0 is the most significant of n bits), Gray-code order.
  template <class Visitor>
  void for_each_binary_codeword(Visitor&& visit) const {
    if (q() != 2 || n_ > 64) throw std::invalid_argument("for_each_binary_codeword needs a binary code with n <= 64");
    const std::uint64_t total = guarded_size(kBinaryEnumerationLimit);
    std::vector<std::uint64_t> rows;
    for (const auto& row : generator_) rows.push_back(to_mask(row));
    std::uint64_t cw = 0;
    visit(cw);
    for (std::uint64_t i = 1; i < total; ++i) {
      cw ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
      visit(cw);
    }
  }

  std::vector<FieldVector> codewords() const {
    std::vector<FieldVector> out;
    for_each_codeword([&](const FieldVector& cw) { out.push_back(cw); });
    return out;
  }

  /// A_0..A_n by enumeration.
  std::vector<std::uint64_t> weight_distribution() const {
    std::vector<std::uint64_t> a(n_ + 1, 0);
    if (q() == 2 && n_ <= 64) {
      for_each_binary_codeword([&](std::uint64_t cw) { ++a[static_cast<std::size_t>(std::popcount(cw))]; });
    } else {
      for_each_codeword([&](const FieldVector& cw) {
        ++a[static_cast<std::size_t>(std::count_if(cw.begin(), cw.end(), [](Element e) { return e != 0; }))];
      });
    }
    return a;
  }

  /// Minimum nonzero weight, which equals the minimum distance of a linear code.
  std::size_t minimum_distance() const {
    const auto a = weight_distribution();
    for (std::size_t w = 1; w < a.size(); ++w)
      if (a[w] != 0) return w;
    throw std::logic_error("code has no nonzero codeword");
  }

  std::uint64_t to_mask(const FieldVector& v) const {
    std::uint64_t m = 0;
    for (const Element e : v) m = (m << 1) | (e & 1u);
    return m;
  }

  Word to_word(const FieldVector& v) const {
    std::vector<unsigned> vals(v.begin(), v.end());
    return Word::from_values(q(), vals);
  }

 private:
  std::uint64_t guarded_size(std::uint64_t limit) const {
    const auto too_big = [&] {
      return std::length_error("code too large to enumerate: q^k = " + std::to_string(q()) + "^" +
                               std::to_string(k()));
    };
    std::uint64_t total = 0;
    try {
      total = size();
    } catch (const std::overflow_error&) {
      throw too_big();
    }
    if (total > limit) throw too_big();
    return total;
  }

  std::size_t rank() const {
    auto m = generator_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n_ && rank < m.size(); ++col) {
      std::size_t pivot = rank;
      while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
      if (pivot == m.size()) continue;
      std::swap(m[rank], m[pivot]);
      const Element inv = field_.inv(m[rank][col]);
      for (auto& e : m[rank]) e = field_.mul(e, inv);
      for (std::size_t r = 0; r < m.size(); ++r) {
        if (r == rank || m[r][col] == 0) continue;
        const Element f = m[r][col];
        for (std::size_t c = 0; c < n_; ++c) m[r][c] = field_.sub(m[r][c], field_.mul(f, m[rank][c]));
      }
      ++rank;
    }
    return rank;
  }

  GaloisField field_;
  std::vector<FieldVector> generator_;
  std::size_t n_ = 0;
  std::size_t declared_distance_;
};

/// Parity-check columns of the binary Hamming code of redundancy m: column j holds the integer j+1.
inline std::vector<std::uint32_t> hamming_parity_check_columns(unsigned m) {
  std::vector<std::uint32_t> cols;
  for (std::uint32_t v = 1; v < (1u << m); ++v) cols.push_back(v);
  return cols;
}

/**
 * The [2^m-1, 2^m-m-1, 3]_2 Hamming code. Parity-check columns are the
 * nonzero m-bit integers in increasing order; the generator is systematic on
 * the positions whose column is not a power of two.
 */
inline LinearCode hamming_code(unsigned m) {
  if (m < 2) throw std::invalid_argument("hamming_code: m must be at least 2");
  if (m > 10) throw std::invalid_argument("hamming_code: m too large (m <= 10)");
  const std::size_t n = (std::size_t{1} << m) - 1;
  std::vector<FieldVector> gen;
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::uint32_t column = static_cast<std::uint32_t>(pos + 1);
    if (std::has_single_bit(column)) continue;
    FieldVector row(n, 0);
    row[pos] = 1;
    for (unsigned b = 0; b < m; ++b)
      if (column >> b & 1u) row[(std::size_t{1} << b) - 1] = 1;
    gen.push_back(std::move(row));
  }
  return LinearCode(GaloisField::prime(2), std::move(gen), 3);
}

/// Closed-form weight distribution of the binary Hamming code of redundancy m.
inline std::vector<std::uint64_t> hamming_weight_enumerator(unsigned m) {
  if (m < 2 || m > 6) throw std::invalid_argument("hamming_weight_enumerator: need 2 <= m <= 6");
  const std::size_t n = (std::size_t{1} << m) - 1;
  const std::size_t half = (n - 1) / 2;
  std::vector<std::uint64_t> a(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    BigInt delta = big_binomial(half, i / 2);
    if (i % 4 == 1 || i % 4 == 2) delta = -delta;
    const BigInt numerator = big_binomial(n, i) + BigInt(n) * delta;
    if (numerator % (n + 1) != 0) throw std::logic_error("weight enumerator is not integral");
    a[i] = static_cast<std::uint64_t>(numerator / (n + 1));
  }
  return a;
}

/// Evaluation points α^0, ..., α^(n-1) for the canonical primitive element α.
inline FieldVector rs_evaluation_points(const GaloisField& field, std::size_t n) {
  FieldVector pts;
  Element x = 1;
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(x);
    x = field.mul(x, field.primitive_element());
  }
  return pts;
}

inline FieldVector evaluate_monomial(const GaloisField& field, const FieldVector& points, std::size_t degree) {
  FieldVector out;
  for (const Element x : points) out.push_back(field.pow(x, degree));
  return out;
}

struct ReedSolomonPair {
  LinearCode c1;  ///< [n, k, d]_q, polynomials of degree < k
  LinearCode c2;  ///< [n, k-1, d+1]_q, polynomials of degree < k-1
};

/// The nested RS codes C2 ⊆ C1 of length n = k + d - 1 over GF(q).
inline ReedSolomonPair rs_code(std::uint32_t q, std::size_t k, std::size_t d) {
  if (k < 2) throw std::invalid_argument("rs_code: k must be at least 2");
  if (d < 1) throw std::invalid_argument("rs_code: d must be at least 1");
  const std::size_t n = k + d - 1;
  if (q < n + 1)
    throw std::invalid_argument("rs_code: q >= n+1 violated (" + std::to_string(q) + " < " + std::to_string(n + 1) + ")");
  GaloisField field = GaloisField::of_order(q);
  const FieldVector points = rs_evaluation_points(field, n);
  std::vector<FieldVector> g1;
  for (std::size_t j = 0; j < k; ++j) g1.push_back(evaluate_monomial(field, points, j));
  std::vector<FieldVector> g2(g1.begin(), g1.end() - 1);
  return {LinearCode(field, g1, d), LinearCode(field, g2, d + 1)};
}

/// Number of codewords whose weight equals the declared minimum distance.
inline std::uint64_t min_weight_count(const LinearCode& code) {
  const auto a = code.weight_distribution();
  return code.declared_distance() < a.size() ? a[code.declared_distance()] : 0;
}

// ---------------------------------------------------------------------------
// Binary covering codes. Vectors of length n <= 32 are bit masks with
// coordinate 0 as the most significant bit, so integer order is string order.

inline std::string binary_string(std::uint32_t v, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t i = 0; i < n; ++i)
    if (v >> (n - 1 - i) & 1u) s[i] = '1';
  return s;
}

inline std::uint32_t parse_binary(std::string_view s) {
  if (s.empty() || s.size() > 32) throw std::invalid_argument("binary word must have 1..32 symbols");
  std::uint32_t v = 0;
  for (const char ch : s) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("invalid binary symbol '" + std::string(1, ch) + "'");
    v = (v << 1) | static_cast<std::uint32_t>(ch - '0');
  }
  return v;
}

class CoveringCode {
 public:
  static constexpr std::size_t kMaxVerifiableLength = 16;

  CoveringCode(std::size_t n, std::vector<std::uint32_t> words) : n_(n), words_(std::move(words)) {
    if (n_ == 0 || n_ > 32) throw std::invalid_argument("covering code length must be 1..32");
    for (const auto w : words_)
      if (n_ < 32 && (w >> n_) != 0) throw std::invalid_argument("codeword longer than n");
    std::sort(words_.begin(), words_.end());
    if (std::adjacent_find(words_.begin(), words_.end()) != words_.end())
      throw std::invalid_argument("covering code has repeated codewords");
    if (words_.empty()) throw std::invalid_argument("covering code is empty");
  }

  static CoveringCode from_strings(const std::vector<std::string>& words) {
    if (words.empty()) throw std::invalid_argument("covering code is empty");
    std::vector<std::uint32_t> v;
    for (const auto& w : words) {
      if (w.size() != words.front().size()) throw std::invalid_argument("codewords differ in length");
      v.push_back(parse_binary(w));
    }
    return CoveringCode(words.front().size(), std::move(v));
  }

  std::size_t n() const { return n_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<std::uint32_t>& words() const { return words_; }

  /// max over Σ_2^n of the distance to the nearest codeword (multi-source BFS on the cube).
  std::size_t covering_radius() const {
    if (n_ > kMaxVerifiableLength) throw std::length_error("covering radius check limited to n <= 16");
    const std::uint32_t total = 1u << n_;
    std::vector<std::uint8_t> dist(total, 0xFF);
    std::vector<std::uint32_t> frontier;
    for (const auto w : words_) {
      dist[w] = 0;
      frontier.push_back(w);
    }
    std::size_t radius = 0;
    while (!frontier.empty()) {
      std::vector<std::uint32_t> next;
      for (const auto v : frontier)
        for (std::size_t b = 0; b < n_; ++b) {
          const std::uint32_t u = v ^ (1u << b);
          if (dist[u] == 0xFF) {
            dist[u] = static_cast<std::uint8_t>(dist[v] + 1);
            next.push_back(u);
          }
        }
      if (!next.empty()) ++radius;
      frontier = std::move(next);
    }
    return radius;
  }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto w : words_) out.push_back(binary_string(w, n_));
    return out;
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> words_;
};

struct CodewordPair {
  std::uint32_t low;   ///< the member with 0 at the differing coordinate
  std::uint32_t high;  ///< the member with 1 there
  std::size_t coordinate;
};

struct CanonicalPartition {
  std::size_t n = 0;
  std::vector<CodewordPair> pairs;

  /// How many pairs differ in each coordinate.
  std::vector<std::size_t> coordinate_histogram() const {
    std::vector<std::size_t> h(n, 0);
    for (const auto& p : pairs) ++h[p.coordinate];
    return h;
  }

  bool is_balanced() const {
    const auto h = coordinate_histogram();
    return std::adjacent_find(h.begin(), h.end(), std::not_equal_to<>()) == h.end();
  }
};

/**
 * The unique partition of a type-A code into distance-1 pairs. Throws unless
 * every codeword has exactly one other codeword at Hamming distance 1.
 */
inline CanonicalPartition canonical_partition(const CoveringCode& code) {
  const std::unordered_set<std::uint32_t> members(code.words().begin(), code.words().end());
  CanonicalPartition part;
  part.n = code.n();
  for (const auto w : code.words()) {
    std::vector<std::size_t> neighbour_coords;
    for (std::size_t i = 0; i < code.n(); ++i)
      if (members.contains(w ^ (1u << (code.n() - 1 - i)))) neighbour_coords.push_back(i);
    if (neighbour_coords.size() != 1)
      throw std::invalid_argument("code is not of type A: codeword " + binary_string(w, code.n()) + " has " +
                                  std::to_string(neighbour_coords.size()) + " codewords at distance 1");
    const std::size_t i = neighbour_coords.front();
    const std::uint32_t bit = 1u << (code.n() - 1 - i);
    if ((w & bit) == 0) part.pairs.push_back({w, w | bit, i});
  }
  return part;
}

/// The balanced length-8 nearly perfect 1-covering code of type A, listed by its meshed pairs.
inline const std::vector<std::string>& embedded_np1cc_8_meshed() {
  static const std::vector<std::string> words = {
      "0001101*", "1110010*", "001101*1", "110010*0", "01101*11", "10010*00", "1101*111", "0010*000",
      "101*1110", "010*0001", "01*11100", "10*00011", "1*111001", "0*000110", "*1110010", "*0001101"};
  return words;
}

inline std::pair<CoveringCode, CanonicalPartition> embedded_np1cc_8() {
  std::vector<std::uint32_t> words;
  for (const auto& meshed : embedded_np1cc_8_meshed()) {
    const auto star = meshed.find('*');
    std::string lo = meshed;
    std::string hi = meshed;
    lo[star] = '0';
    hi[star] = '1';
    words.push_back(parse_binary(lo));
    words.push_back(parse_binary(hi));
  }
  CoveringCode code(8, std::move(words));
  CanonicalPartition part = canonical_partition(code);
  return {std::move(code), std::move(part)};
}

}  // namespace boxcode

#endif  // BOXCODE_CLASSIC_CODES_HPP
