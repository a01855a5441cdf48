#ifndef BOXCODE_BOX_CODE_HPP
#define BOXCODE_BOX_CODE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boxcode/arith.hpp"
#include "boxcode/words.hpp"

namespace boxcode {

struct Parameters {
  Rational n;                    ///< average norm, exact
  std::size_t M = 0;             ///< number of codewords
  std::optional<std::size_t> d;  ///< absent for a single codeword
  unsigned q = 2;
  std::size_t eta = 0;           ///< protected length
};

/**
 * A box code: an indexed collection of words over Σ_q ∪ {·}. Every codeword
 * is stored with exactly eta() symbols, where eta() is one past the last
 * protected coordinate of the whole code.
 *
 * from_words() enforces set semantics (no two codewords with the same
 * protected entries). family() admits repeats, as needed for codes indexed by
 * graph vertices where several vertices may share a codeword.
 */
class BoxCode {
 public:
  static BoxCode from_words(std::vector<Word> words) { return BoxCode(std::move(words), false); }
  static BoxCode family(std::vector<Word> words) { return BoxCode(std::move(words), true); }

  /// Parses each string with Word::parse.
  static BoxCode from_strings(unsigned q, const std::vector<std::string>& words) {
    std::vector<Word> w;
    for (const auto& s : words) w.push_back(Word::parse(s, q));
    return from_words(std::move(w));
  }

  unsigned q() const { return q_; }
  std::size_t size() const { return words_.size(); }
  std::size_t eta() const { return eta_; }
  const std::vector<Word>& codewords() const { return words_; }
  const Word& operator[](std::size_t i) const { return words_.at(i); }

  std::size_t total_norm() const { return total_norm_; }
  Rational length() const { return Rational(static_cast<std::int64_t>(total_norm_), static_cast<std::int64_t>(size())); }
  std::optional<std::size_t> min_distance() const { return min_distance_; }
  bool has_repeats() const { return has_repeats_; }

  Parameters parameters() const { return {length(), size(), min_distance_, q_, eta_}; }

  /// Coordinates below eta that are unprotected in every codeword.
  std::size_t empty_columns() const {
    std::size_t count = 0;
    for (std::size_t c = 0; c < eta_; ++c)
      if (std::none_of(words_.begin(), words_.end(), [&](const Word& w) { return w[c].is_protected(); })) ++count;
    return count;
  }

  /// Every coordinate below eta is protected in every codeword.
  bool is_degenerate() const {
    return std::all_of(words_.begin(), words_.end(), [](const Word& w) { return w.is_fully_protected(); });
  }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto& w : words_) out.push_back(w.to_string());
    return out;
  }

  friend bool operator==(const BoxCode&, const BoxCode&) = default;

 private:
  BoxCode(std::vector<Word> words, bool allow_repeats) {
    if (words.empty()) throw std::invalid_argument("a box code needs at least one codeword");
    q_ = words.front().q();
    for (const auto& w : words) {
      if (w.q() != q_) throw std::invalid_argument("codewords over different alphabets");
      eta_ = std::max(eta_, w.support_end());
    }
    words_.reserve(words.size());
    for (auto& w : words) {
      total_norm_ += w.norm();
      words_.push_back(w.resized(eta_));
    }
    scan_pairs();
    if (has_repeats_ && !allow_repeats)
      throw std::invalid_argument("box code has repeated codewords (same protected entries)");
  }

  void scan_pairs() {
    const std::size_t m = words_.size();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < m; ++i) {
      const auto& a = words_[i].symbols();
      for (std::size_t j = i + 1; j < m; ++j) {
        const auto& b = words_[j].symbols();
        std::size_t dist = 0;
        bool identical = true;
        for (std::size_t c = 0; c < eta_; ++c) {
          if (a[c] != b[c]) {
            identical = false;
            if (a[c].is_protected() && b[c].is_protected()) ++dist;
          }
        }
        has_repeats_ = has_repeats_ || identical;
        best = std::min(best, dist);
      }
    }
    if (m >= 2) min_distance_ = best;
  }

  unsigned q_ = 2;
  std::size_t eta_ = 0;
  std::vector<Word> words_;
  std::size_t total_norm_ = 0;
  std::optional<std::size_t> min_distance_;
  bool has_repeats_ = false;
};

/// Appends ·^∞ to a classical code: same (n, M, d), every entry protected.
inline BoxCode from_classical(unsigned q, const std::vector<std::vector<unsigned>>& codewords) {
  std::vector<Word> w;
  for (const auto& c : codewords) w.push_back(Word::from_values(q, c));
  return BoxCode::from_words(std::move(w));
}

// ---------------------------------------------------------------------------
// Perfectness: protected balls of radius r around the codewords tile Σ_q^eta.

enum class TilingDefect { none, uncovered, overlap };

struct PerfectnessReport {
  bool perfect = false;
  std::size_t radius = 0;
  std::uint64_t volume_sum = 0;  ///< Σ_c |B^·_r(c)|
  std::uint64_t space_size = 0;  ///< q^eta
  TilingDefect defect = TilingDefect::none;
  std::optional<Word> witness;   ///< smallest vector that is uncovered or covered twice
};

inline constexpr std::uint64_t kTilingSpaceLimit = std::uint64_t{1} << 24;

namespace detail {

inline std::uint64_t tiling_space(const BoxCode& code) {
  std::uint64_t space = 0;
  try {
    space = space_size(code.q(), code.eta());
  } catch (const std::overflow_error&) {
    space = kTilingSpaceLimit + 1;
  }
  if (space > kTilingSpaceLimit)
    throw std::length_error("tiling check needs q^eta <= 2^24 (q=" + std::to_string(code.q()) +
                            ", eta=" + std::to_string(code.eta()) + ")");
  return space;
}

inline std::uint64_t volume_sum(const BoxCode& code, std::size_t r) {
  std::uint64_t sum = 0;
  for (const auto& c : code.codewords())
    sum = checked_add(sum, protected_ball_size(code.q(), code.eta(), c.norm(), r));
  return sum;
}

}  // namespace detail

/**
 * Marks every protected ball in a pair of bitmaps over Σ_q^eta; the code is
 * perfect when each vector is marked exactly once.
 */
inline PerfectnessReport is_perfect(const BoxCode& code, std::size_t r) {
  PerfectnessReport rep;
  rep.radius = r;
  rep.space_size = detail::tiling_space(code);
  rep.volume_sum = detail::volume_sum(code, r);

  std::vector<bool> covered(rep.space_size, false);
  std::vector<bool> repeated(rep.space_size, false);
  for (const auto& c : code.codewords()) {
    ProtectedBall(c, r, code.eta()).for_each_index([&](std::uint64_t idx) {
      if (covered[idx]) repeated[idx] = true;
      covered[idx] = true;
    });
  }
  for (std::uint64_t idx = 0; idx < rep.space_size; ++idx) {
    if (!covered[idx] || repeated[idx]) {
      rep.defect = covered[idx] ? TilingDefect::overlap : TilingDefect::uncovered;
      rep.witness = vector_at(idx, code.q(), code.eta());
      return rep;
    }
  }
  rep.perfect = true;
  return rep;
}

/**
 * Second route to the same verdict: the volumes must add up to q^eta and
 * every vector must lie within distance r of some codeword (tested directly
 * with d^·, without enumerating balls).
 */
inline bool is_perfect_by_volume(const BoxCode& code, std::size_t r) {
  const std::uint64_t space = detail::tiling_space(code);
  if (detail::volume_sum(code, r) != space) return false;
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    const Word v = vector_at(idx, code.q(), code.eta());
    const bool hit = std::any_of(code.codewords().begin(), code.codewords().end(),
                                 [&](const Word& c) { return box_distance(c, v) <= r; });
    if (!hit) return false;
  }
  return true;
}

}  // namespace boxcode

#endif  // BOXCODE_BOX_CODE_HPP
