#ifndef BOXCODE_WORDS_HPP
#define BOXCODE_WORDS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boxcode/arith.hpp"

namespace boxcode {

/**
 * One entry of a word: either a protected value in {0,...,q-1} or the
 * unprotected marker. A default-constructed Symbol is unprotected.
 */
class Symbol {
 public:
  constexpr Symbol() = default;

  static constexpr Symbol unprotected() { return Symbol{}; }
  static constexpr Symbol value(unsigned v) {
    Symbol s;
    s.raw_ = static_cast<std::uint16_t>(v);
    return s;
  }

  constexpr bool is_protected() const { return raw_ != kDot; }
  constexpr unsigned value() const { return raw_; }

  // Protected values order before the marker.
  constexpr auto operator<=>(const Symbol&) const = default;

 private:
  static constexpr std::uint16_t kDot = std::numeric_limits<std::uint16_t>::max();
  std::uint16_t raw_ = kDot;
};

inline constexpr Symbol kDot = Symbol::unprotected();

/// Largest alphabet the text rendering can spell (digits then lowercase letters).
inline constexpr unsigned kMaxTextQ = 36;

/**
 * A word over Σ_q ∪ {·}: the finite prefix of `eta()` symbols is stored,
 * everything beyond it is implicitly unprotected.
 *
 * operator== compares the stored prefix exactly; use same_support() when
 * two words of different prefix length should be identified.
 */
class Word {
 public:
  Word() = default;

  Word(unsigned q, std::vector<Symbol> symbols) : q_(q), symbols_(std::move(symbols)) {
    if (q_ < 2) throw std::invalid_argument("alphabet size q must be at least 2");
    if (q_ > 0xFFFE) throw std::invalid_argument("alphabet size q too large");
    for (const Symbol s : symbols_)
      if (s.is_protected() && s.value() >= q_)
        throw std::invalid_argument("protected value " + std::to_string(s.value()) +
                                    " out of range for q=" + std::to_string(q_));
  }

  /// The all-unprotected word ·^∞ stored with a prefix of `eta` markers.
  static Word unprotected(unsigned q, std::size_t eta = 0) {
    return Word(q, std::vector<Symbol>(eta, kDot));
  }

  /// A fully protected word from plain values.
  static Word from_values(unsigned q, const std::vector<unsigned>& values) {
    std::vector<Symbol> s;
    s.reserve(values.size());
    for (unsigned v : values) s.push_back(Symbol::value(v));
    return Word(q, std::move(s));
  }

  /// Parses digits 0-9, letters a-z for 10..35 and `*` (the unprotected marker), e.g. "11*".
  static Word parse(std::string_view text, unsigned q) {
    if (q > kMaxTextQ) throw std::invalid_argument("text rendering supports q <= 36 only");
    std::vector<Symbol> s;
    s.reserve(text.size());
    for (const char ch : text) {
      unsigned v = q;
      if (ch >= '0' && ch <= '9') v = static_cast<unsigned>(ch - '0');
      if (ch >= 'a' && ch <= 'z') v = static_cast<unsigned>(ch - 'a') + 10;
      if (ch == '*') {
        s.push_back(kDot);
      } else if (v < q) {
        s.push_back(Symbol::value(v));
      } else {
        throw std::invalid_argument(std::string("invalid symbol '") + ch + "' for q=" +
                                    std::to_string(q));
      }
    }
    return Word(q, std::move(s));
  }

  unsigned q() const { return q_; }
  std::size_t eta() const { return symbols_.size(); }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  Symbol operator[](std::size_t i) const { return i < symbols_.size() ? symbols_[i] : kDot; }

  /// Number of protected entries, ‖w‖_·.
  std::size_t norm() const {
    return static_cast<std::size_t>(
        std::count_if(symbols_.begin(), symbols_.end(), [](Symbol s) { return s.is_protected(); }));
  }

  /// One past the last protected index (0 when no entry is protected).
  std::size_t support_end() const {
    for (std::size_t i = symbols_.size(); i > 0; --i)
      if (symbols_[i - 1].is_protected()) return i;
    return 0;
  }

  bool is_fully_protected() const { return norm() == eta(); }

  /// The same word stored with exactly `eta` symbols; fails if that would drop a protected entry.
  Word resized(std::size_t eta) const {
    if (eta < support_end())
      throw std::invalid_argument("eta " + std::to_string(eta) + " cuts protected support ending at " +
                                  std::to_string(support_end()));
    std::vector<Symbol> s(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(
                                                                 std::min(eta, symbols_.size())));
    s.resize(eta, kDot);
    return Word(q_, std::move(s));
  }

  Word trimmed() const { return resized(support_end()); }

  std::string to_string() const {
    std::string out;
    out.reserve(symbols_.size());
    for (const Symbol s : symbols_) {
      if (!s.is_protected())
        out.push_back('*');
      else if (s.value() < 10)
        out.push_back(static_cast<char>('0' + s.value()));
      else if (s.value() < kMaxTextQ)
        out.push_back(static_cast<char>('a' + (s.value() - 10)));
      else
        throw std::invalid_argument("text rendering supports q <= 36 only");
    }
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  unsigned q_ = 2;
  std::vector<Symbol> symbols_;
};

/// Equality of the protected entries, ignoring how long the stored prefixes are.
inline bool same_support(const Word& a, const Word& b) {
  if (a.q() != b.q()) return false;
  const std::size_t len = std::max(a.eta(), b.eta());
  for (std::size_t i = 0; i < len; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

/// d^·(w, w'): positions where both words are protected and differ.
inline std::size_t box_distance(const Word& a, const Word& b) {
  if (a.q() != b.q()) throw std::invalid_argument("box_distance: alphabet mismatch");
  const std::size_t len = std::min(a.eta(), b.eta());
  std::size_t dist = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const Symbol x = a.symbols()[i];
    const Symbol y = b.symbols()[i];
    if (x.is_protected() && y.is_protected() && x != y) ++dist;
  }
  return dist;
}

// Fully protected vectors of Σ_q^eta are indexed in base q, coordinate 0 most
// significant, so increasing index is lexicographic order.

inline std::uint64_t space_size(unsigned q, std::size_t eta) { return checked_pow(q, eta); }

inline std::uint64_t vector_index(const Word& v) {
  std::uint64_t idx = 0;
  for (const Symbol s : v.symbols()) {
    if (!s.is_protected()) throw std::invalid_argument("vector_index: word is not fully protected");
    idx = checked_add(checked_mul(idx, v.q()), s.value());
  }
  return idx;
}

inline Word vector_at(std::uint64_t index, unsigned q, std::size_t eta) {
  std::vector<Symbol> s(eta);
  for (std::size_t i = eta; i > 0; --i) {
    s[i - 1] = Symbol::value(static_cast<unsigned>(index % q));
    index /= q;
  }
  if (index != 0) throw std::out_of_range("vector_at: index exceeds q^eta");
  return Word(q, std::move(s));
}

/// |B^·_r(w)| = q^(eta-‖w‖) Σ_{i<=r} C(‖w‖, i)(q-1)^i.
inline std::uint64_t protected_ball_size(unsigned q, std::size_t eta, std::size_t norm, std::size_t r) {
  if (norm > eta) throw std::invalid_argument("protected_ball_size: norm exceeds eta");
  std::uint64_t shell = 0;
  for (std::size_t i = 0; i <= std::min(r, norm); ++i)
    shell = checked_add(shell, checked_mul(binomial(norm, i), checked_pow(q - 1, i)));
  return checked_mul(checked_pow(q, eta - norm), shell);
}

/**
 * The protected ball B^·_r(w) inside Σ_q^eta. Members are visited in
 * increasing index order; materialize() refuses balls above kMaterializeLimit.
 */
class ProtectedBall {
 public:
  static constexpr std::uint64_t kMaterializeLimit = std::uint64_t{1} << 20;

  ProtectedBall(Word center, std::size_t radius, std::size_t eta)
      : center_(std::move(center)), radius_(radius), eta_(eta) {
    if (eta_ < center_.support_end())
      throw std::invalid_argument("protected ball: eta " + std::to_string(eta_) +
                                  " is below the protected support of the center");
    center_ = center_.resized(eta_);
  }

  const Word& center() const { return center_; }
  std::size_t radius() const { return radius_; }
  std::size_t eta() const { return eta_; }

  std::uint64_t size() const { return protected_ball_size(center_.q(), eta_, center_.norm(), radius_); }

  template <class Visitor>
  void for_each_index(Visitor&& visit) const {
    space_size(center_.q(), eta_);  // overflow guard for the index encoding
    walk(0, 0, radius_, visit);
  }

  template <class Visitor>
  void for_each(Visitor&& visit) const {
    for_each_index([&](std::uint64_t idx) { visit(vector_at(idx, center_.q(), eta_)); });
  }

  std::vector<Word> materialize() const {
    if (size() > kMaterializeLimit)
      throw std::length_error("protected ball has " + std::to_string(size()) +
                              " members; use for_each instead");
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](Word v) { out.push_back(std::move(v)); });
    return out;
  }

  bool contains(const Word& v) const {
    if (v.q() != center_.q() || v.eta() != eta_ || !v.is_fully_protected()) return false;
    return box_distance(center_, v) <= radius_;
  }

 private:
  template <class Visitor>
  void walk(std::size_t pos, std::uint64_t prefix, std::size_t budget, Visitor& visit) const {
    if (pos == eta_) {
      visit(prefix);
      return;
    }
    const unsigned q = center_.q();
    const Symbol s = center_.symbols()[pos];
    for (unsigned v = 0; v < q; ++v) {
      if (!s.is_protected() || s.value() == v)
        walk(pos + 1, prefix * q + v, budget, visit);
      else if (budget > 0)
        walk(pos + 1, prefix * q + v, budget - 1, visit);
    }
  }

  Word center_;
  std::size_t radius_;
  std::size_t eta_;
};

inline ProtectedBall protected_ball(const Word& w, std::size_t r, std::size_t eta) {
  return ProtectedBall(w, r, eta);
}

/// X(w): the fully protected length-eta words consistent with w.
inline std::vector<Word> consistent_set(const Word& w, std::size_t eta) {
  return ProtectedBall(w, 0, eta).materialize();
}

}  // namespace boxcode

#endif  // BOXCODE_WORDS_HPP
