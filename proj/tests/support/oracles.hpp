// Slow reference implementations for the test suite. They work on plain
// strings ('0'..'9' protected, '*' unprotected) and never call into the
// library, so agreement with it is meaningful.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline char at(const std::string& w, std::size_t i) { return i < w.size() ? w[i] : '*'; }

inline std::size_t norm(const std::string& w) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](char c) { return c != '*'; }));
}

inline std::size_t distance(const std::string& a, const std::string& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i)
    if (at(a, i) != '*' && at(b, i) != '*' && at(a, i) != at(b, i)) ++d;
  return d;
}

inline std::vector<std::string> all_vectors(unsigned q, std::size_t eta) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < eta; ++i) {
    std::vector<std::string> next;
    for (const auto& p : out)
      for (unsigned v = 0; v < q; ++v) next.push_back(p + static_cast<char>('0' + v));
    out = std::move(next);
  }
  return out;
}

inline std::set<std::string> ball(const std::string& w, std::size_t r, unsigned q, std::size_t eta) {
  std::set<std::string> out;
  for (const auto& v : all_vectors(q, eta))
    if (distance(w, v) <= r) out.insert(v);
  return out;
}

/// Empty string when the balls tile; otherwise the first vector covered 0 or >= 2 times.
inline std::string tiling_defect(const std::vector<std::string>& code, std::size_t r, unsigned q, std::size_t eta) {
  for (const auto& v : all_vectors(q, eta)) {
    std::size_t hits = 0;
    for (const auto& c : code) hits += distance(c, v) <= r ? 1 : 0;
    if (hits != 1) return v;
  }
  return "";
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return b == 0 ? (a < 0 ? -a : a) : gcd(b, a % b); }

/// Reduced fraction as "a" or "a/b".
inline std::string fraction(std::int64_t num, std::int64_t den) {
  const std::int64_t g = gcd(num, den);
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

inline std::string length(const std::vector<std::string>& code) {
  std::int64_t total = 0;
  for (const auto& c : code) total += static_cast<std::int64_t>(norm(c));
  return fraction(total, static_cast<std::int64_t>(code.size()));
}

inline std::int64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    const std::int64_t g = std::gcd(r, i);
    r = r / g * ((n - k + i) / (i / g));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Hamming codes

/// Weight counts of {x : Hx = 0}, H with columns 1..n; the syndrome is the XOR of the set positions.
inline std::vector<std::int64_t> hamming_weights_by_syndrome(unsigned m) {
  const unsigned n = (1u << m) - 1;
  std::vector<std::int64_t> a(n + 1, 0);
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    std::uint32_t syndrome = 0;
    for (unsigned i = 0; i < n; ++i)
      if (x >> i & 1u) syndrome ^= i + 1;
    if (syndrome == 0) ++a[static_cast<std::size_t>(__builtin_popcount(x))];
  }
  return a;
}

/// A_i = (C(n,i) + n·Δ_i)/(n+1), Δ_i = ±C((n−1)/2, ⌊i/2⌋) with + for i ≡ 0,3 mod 4.
inline std::vector<std::int64_t> hamming_weights_closed_form(unsigned m) {
  const std::int64_t n = (std::int64_t{1} << m) - 1;
  std::vector<std::int64_t> a;
  for (std::int64_t i = 0; i <= n; ++i) {
    std::int64_t delta = choose((n - 1) / 2, i / 2);
    if (i % 4 == 1 || i % 4 == 2) delta = -delta;
    a.push_back((choose(n, i) + n * delta) / (n + 1));
  }
  return a;
}

// ---------------------------------------------------------------------------
// Prime fields and GF(2^e)

inline unsigned mul_order(unsigned a, unsigned p) {
  unsigned k = 1;
  for (unsigned x = a % p; x != 1; x = x * a % p) ++k;
  return k;
}

inline unsigned smallest_generator(unsigned p) {
  for (unsigned g = 1; g < p; ++g)
    if (mul_order(g, p) == p - 1) return g;
  return 0;
}

/// Schoolbook carry-less product reduced by repeated subtraction of the modulus.
inline unsigned gf2_poly_mul(unsigned a, unsigned b, unsigned modulus, unsigned degree) {
  unsigned prod = 0;
  for (unsigned i = 0; i < 16; ++i)
    if (b >> i & 1u) prod ^= a << i;
  for (int bit = 31; bit >= static_cast<int>(degree); --bit)
    if (prod >> bit & 1u) prod ^= modulus << (static_cast<unsigned>(bit) - degree);
  return prod;
}

// ---------------------------------------------------------------------------
// Graphs, as adjacency matrices

using Adjacency = std::vector<std::vector<bool>>;

inline bool independent(const Adjacency& g, std::uint32_t set) {
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if ((set >> u & 1u) && (set >> v & 1u) && g[u][v]) return false;
  return true;
}

inline std::size_t alpha(const Adjacency& g, int forced = -1) {
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << g.size()); ++s) {
    if (forced >= 0 && !(s >> forced & 1u)) continue;
    if (independent(g, s)) best = std::max(best, static_cast<std::size_t>(__builtin_popcount(s)));
  }
  return best;
}

/// Smallest vertex cover by subsets.
inline std::size_t vertex_cover(const Adjacency& g) {
  std::size_t best = g.size();
  for (std::uint32_t s = 0; s < (1u << g.size()); ++s) {
    bool ok = true;
    for (std::size_t u = 0; u < g.size() && ok; ++u)
      for (std::size_t v = u + 1; v < g.size() && ok; ++v)
        if (g[u][v] && !(s >> u & 1u) && !(s >> v & 1u)) ok = false;
    if (ok) best = std::min(best, static_cast<std::size_t>(__builtin_popcount(s)));
  }
  return best;
}

/// χ by trying every assignment of k colours, k = 1, 2, ...
inline std::size_t chromatic(const Adjacency& g) {
  const std::size_t m = g.size();
  if (m == 0) return 0;
  for (std::size_t k = 1;; ++k) {
    std::vector<std::size_t> c(m, 0);
    while (true) {
      bool ok = true;
      for (std::size_t u = 0; u < m && ok; ++u)
        for (std::size_t v = u + 1; v < m && ok; ++v)
          if (g[u][v] && c[u] == c[v]) ok = false;
      if (ok) return k;
      std::size_t i = 0;
      while (i < m && ++c[i] == k) c[i++] = 0;
      if (i == m) break;
    }
  }
}

// ---------------------------------------------------------------------------
// Tiny box codes

/// min total norm over all M-word codes in (Σ_q ∪ {·})^eta whose listed pairs have distance >= d; -1 if none.
inline std::int64_t brute_min_total_norm(std::size_t m, std::size_t d, unsigned q, std::size_t eta,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  const std::size_t cells = m * eta;
  std::vector<unsigned> cell(cells, 0);  // value q stands for '*'
  std::int64_t best = -1;
  while (true) {
    std::vector<std::string> words(m, std::string(eta, '*'));
    std::int64_t total = 0;
    for (std::size_t i = 0; i < cells; ++i)
      if (cell[i] < q) {
        words[i / eta][i % eta] = static_cast<char>('0' + cell[i]);
        ++total;
      }
    if (best < 0 || total < best) {
      bool ok = true;
      for (const auto& [u, v] : pairs) ok = ok && distance(words[u], words[v]) >= d;
      if (ok) best = total;
    }
    std::size_t i = 0;
    while (i < cells && ++cell[i] == q + 1) cell[i++] = 0;
    if (i == cells) break;
  }
  return best;
}

inline std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t m) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v) out.emplace_back(u, v);
  return out;
}

/**
 * Equivalence class key for tiny codes: minimum over coordinate permutations
 * and per-coordinate relabellings of the sorted codeword list. All-'*'
 * columns are dropped first.
 */
inline std::vector<std::string> class_key(std::vector<std::string> code, unsigned q) {
  std::size_t eta = 0;
  for (const auto& w : code) eta = std::max(eta, w.size());
  for (auto& w : code) w.resize(eta, '*');
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < eta; ++i)
    if (std::any_of(code.begin(), code.end(), [&](const std::string& w) { return w[i] != '*'; })) keep.push_back(i);
  for (auto& w : code) {
    std::string s;
    for (const auto i : keep) s += w[i];
    w = s;
  }
  eta = keep.size();

  std::vector<std::vector<unsigned>> relabels;
  {
    std::vector<unsigned> p(q);
    std::iota(p.begin(), p.end(), 0u);
    do relabels.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<std::string> best;
  std::vector<std::size_t> perm(eta);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> choice(eta, 0);
    while (true) {
      std::vector<std::string> image;
      for (const auto& w : code) {
        std::string s(eta, '*');
        for (std::size_t j = 0; j < eta; ++j) {
          const char c = w[perm[j]];
          s[j] = c == '*' ? '*' : static_cast<char>('0' + relabels[choice[j]][static_cast<unsigned>(c - '0')]);
        }
        image.push_back(s);
      }
      std::sort(image.begin(), image.end());
      if (best.empty() || image < best) best = image;
      std::size_t i = 0;
      while (i < eta && ++choice[i] == relabels.size()) choice[i++] = 0;
      if (i == eta) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace oracle
