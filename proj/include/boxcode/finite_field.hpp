#ifndef BOXCODE_FINITE_FIELD_HPP
#define BOXCODE_FINITE_FIELD_HPP

#include <bit>
#include <charconv>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boxcode {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

namespace detail {

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    out.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline unsigned poly_degree(std::uint32_t p) { return p == 0 ? 0 : 31u - static_cast<unsigned>(std::countl_zero(p)); }

/// Remainder of a mod b over GF(2)[x].
inline std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
  const unsigned db = poly_degree(b);
  while (a != 0 && poly_degree(a) >= db) a ^= b << (poly_degree(a) - db);
  return a;
}

/// Carry-less product reduced modulo `modulus`.
inline std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus) {
  std::uint32_t acc = 0;
  const unsigned deg = poly_degree(modulus);
  while (b != 0) {
    if (b & 1u) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> deg & 1u) a ^= modulus;
  }
  return acc;
}

}  // namespace detail

/// Irreducibility over GF(2) by trial division with every polynomial of degree <= deg/2.
inline bool is_irreducible_gf2(std::uint32_t poly) {
  const unsigned deg = detail::poly_degree(poly);
  if (deg == 0) return false;
  for (std::uint32_t d = 2; detail::poly_degree(d) <= deg / 2; ++d)
    if (detail::poly_mod(poly, d) == 0) return false;
  return true;
}

/// The lexicographically smallest irreducible polynomial of degree e over GF(2).
inline std::uint32_t smallest_irreducible(unsigned e) {
  if (e == 0 || e > 16) throw std::invalid_argument("smallest_irreducible: degree out of range");
  for (std::uint32_t p = 1u << e; p < (2u << e); ++p)
    if (is_irreducible_gf2(p)) return p;
  throw std::logic_error("no irreducible polynomial found");
}

/**
 * GF(p) for prime p <= 2^16, or GF(2^e) for e <= 8 with a fixed irreducible
 * modulus (by default the lexicographically smallest one: x^3+x+1 for e=3,
 * x^4+x+1 for e=4, x^8+x^4+x^3+x+1 for e=8, ...).
 *
 * Elements are indices in [0, q). For GF(2^e) an index is the bit pattern of
 * a polynomial in x, so index 2 is x.
 */
class GaloisField {
 public:
  using Element = std::uint32_t;

  static GaloisField prime(std::uint32_t p) {
    if (!is_prime(p) || p > 65536) throw std::invalid_argument("GF(p) needs a prime p <= 2^16, got " + std::to_string(p));
    GaloisField f;
    f.q_ = p;
    f.characteristic_ = p;
    f.degree_ = 1;
    f.init_primitive();
    return f;
  }

  static GaloisField binary_extension(unsigned e) { return binary_extension(e, smallest_irreducible(e)); }

  static GaloisField binary_extension(unsigned e, std::uint32_t modulus) {
    if (e == 0 || e > 8) throw std::invalid_argument("GF(2^e) supported for 1 <= e <= 8");
    if (detail::poly_degree(modulus) != e || !is_irreducible_gf2(modulus))
      throw std::invalid_argument("modulus is not an irreducible polynomial of degree " + std::to_string(e));
    GaloisField f;
    f.q_ = 1u << e;
    f.characteristic_ = 2;
    f.degree_ = e;
    f.modulus_ = modulus;
    f.init_primitive();
    f.build_tables();
    return f;
  }

  /// Prime order -> GF(p); power of two -> GF(2^e) with the default modulus.
  static GaloisField of_order(std::uint32_t q) {
    if (is_prime(q)) return prime(q);
    if (q >= 4 && std::has_single_bit(q)) return binary_extension(static_cast<unsigned>(std::countr_zero(q)));
    throw std::invalid_argument("unsupported field order " + std::to_string(q) +
                                " (need a prime or a power of two up to 2^8)");
  }

  /// Descriptor strings: `p=5` or `2^3:0b1011` (the modulus may be omitted: `2^3`).
  static GaloisField parse(std::string_view text) {
    const auto fail = [&] { return std::invalid_argument("bad field descriptor '" + std::string(text) + "'"); };
    const auto number = [&](std::string_view digits, int base) {
      unsigned long v = 0;
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v, base);
      if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) throw fail();
      return v;
    };
    if (text.starts_with("p=")) return prime(static_cast<std::uint32_t>(number(text.substr(2), 10)));
    if (!text.starts_with("2^")) throw fail();
    const auto colon = text.find(':');
    const auto e = static_cast<unsigned>(number(text.substr(2, colon == std::string_view::npos ? text.npos : colon - 2), 10));
    if (colon == std::string_view::npos) return binary_extension(e);
    const auto poly = text.substr(colon + 1);
    if (!poly.starts_with("0b")) throw fail();
    return binary_extension(e, static_cast<std::uint32_t>(number(poly.substr(2), 2)));
  }

  std::string descriptor() const {
    if (modulus_ == 0) return "p=" + std::to_string(q_);
    std::string bits;
    for (int b = static_cast<int>(degree_); b >= 0; --b) bits.push_back((modulus_ >> b & 1u) ? '1' : '0');
    return "2^" + std::to_string(degree_) + ":0b" + bits;
  }

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return characteristic_; }
  unsigned degree() const { return degree_; }
  bool is_prime_field() const { return modulus_ == 0; }
  std::uint32_t modulus_polynomial() const { return modulus_; }

  Element add(Element a, Element b) const {
    check(a);
    check(b);
    if (is_prime_field()) return (a + b) % q_;
    return a ^ b;
  }

  Element neg(Element a) const {
    check(a);
    if (is_prime_field()) return a == 0 ? 0 : q_ - a;
    return a;
  }

  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element mul(Element a, Element b) const {
    check(a);
    check(b);
    if (a == 0 || b == 0) return 0;
    if (is_prime_field()) return static_cast<Element>(std::uint64_t{a} * b % q_);
    return exp_[log_[a] + log_[b]];
  }

  Element inv(Element a) const {
    check(a);
    if (a == 0) throw std::domain_error("inverse of zero");
    if (is_prime_field()) return pow(a, q_ - 2);
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element pow(Element a, std::uint64_t e) const {
    check(a);
    Element result = 1;
    Element base = a;
    while (e != 0) {
      if (e & 1u) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  /// Smallest-index generator of the multiplicative group.
  Element primitive_element() const { return primitive_; }

  std::uint64_t multiplicative_order(Element a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative order");
    std::uint64_t k = 1;
    for (Element x = a; x != 1; x = mul(x, a)) ++k;
    return k;
  }

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.q_ == b.q_ && a.modulus_ == b.modulus_;
  }

 private:
  GaloisField() = default;

  void check(Element a) const {
    if (a >= q_) throw std::out_of_range("element " + std::to_string(a) + " outside GF(" + std::to_string(q_) + ")");
  }

  Element slow_mul(Element a, Element b) const {
    if (is_prime_field()) return static_cast<Element>(std::uint64_t{a} * b % q_);
    return detail::poly_mulmod(a, b, modulus_);
  }

  void init_primitive() {
    if (q_ == 2) {
      primitive_ = 1;
      return;
    }
    const auto factors = detail::prime_factors(q_ - 1);
    for (Element g = 2; g < q_; ++g) {
      bool generator = true;
      for (const auto f : factors) {
        Element x = 1;
        for (std::uint64_t i = 0; i < (q_ - 1) / f; ++i) x = slow_mul(x, g);
        if (x == 1) {
          generator = false;
          break;
        }
      }
      if (generator) {
        primitive_ = g;
        return;
      }
    }
    throw std::logic_error("no primitive element found");
  }

  void build_tables() {
    exp_.assign(2 * static_cast<std::size_t>(q_), 0);
    log_.assign(q_, 0);
    Element x = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
      exp_[i] = x;
      exp_[i + q_ - 1] = x;
      log_[x] = i;
      x = slow_mul(x, primitive_);
    }
  }

  std::uint32_t q_ = 0;
  std::uint32_t characteristic_ = 0;
  unsigned degree_ = 1;
  std::uint32_t modulus_ = 0;
  Element primitive_ = 1;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
};

/// An element bound to its field; arithmetic across different fields throws.
class FieldElement {
 public:
  FieldElement(std::shared_ptr<const GaloisField> field, GaloisField::Element value)
      : field_(std::move(field)), value_(value) {
    if (!field_) throw std::invalid_argument("null field");
    if (value_ >= field_->order()) throw std::out_of_range("element outside field");
  }

  GaloisField::Element value() const { return value_; }
  const GaloisField& field() const { return *field_; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return {same(a, b), a.field_->add(a.value_, b.value_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return {same(a, b), a.field_->sub(a.value_, b.value_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return {same(a, b), a.field_->mul(a.value_, b.value_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return {same(a, b), a.field_->div(a.value_, b.value_)};
  }
  FieldElement inverse() const { return {field_, field_->inv(value_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return *a.field_ == *b.field_ && a.value_ == b.value_;
  }

 private:
  static const std::shared_ptr<const GaloisField>& same(const FieldElement& a, const FieldElement& b) {
    if (!(*a.field_ == *b.field_)) throw std::invalid_argument("field mismatch");
    return a.field_;
  }

  std::shared_ptr<const GaloisField> field_;
  GaloisField::Element value_;
};

}  // namespace boxcode

#endif  // BOXCODE_FINITE_FIELD_HPP
