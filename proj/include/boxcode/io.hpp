#ifndef BOXCODE_IO_HPP
#define BOXCODE_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxcode/box_code.hpp"
#include "boxcode/words.hpp"

namespace boxcode {

/**
 * `.boxcode` text:
 *
 *     boxcode q=2 eta=3
 *     011
 *     11*
 *     *0*
 *
 * Each codeword line holds at least eta symbols; anything past eta must be
 * `*`. A codeword with eta = 0 is written as a single `*`. Blank lines and
 * lines starting with '#' are skipped. The header eta must match the
 * protected length recomputed from the codewords.
 */
inline void write_boxcode(std::ostream& out, const BoxCode& code) {
  if (code.q() > kMaxTextQ) throw std::invalid_argument("text rendering needs q <= 36");
  out << "boxcode q=" << code.q() << " eta=" << code.eta() << '\n';
  for (const auto& w : code.codewords()) {
    const std::string s = w.resized(code.eta()).to_string();
    out << (s.empty() ? "*" : s) << '\n';
  }
}

inline std::string to_boxcode_text(const BoxCode& code) {
  std::ostringstream out;
  write_boxcode(out, code);
  return out.str();
}

namespace detail {

inline unsigned parse_header_field(const std::string& token, const std::string& key, std::size_t lineno) {
  const auto fail = [&] {
    return std::invalid_argument("line " + std::to_string(lineno) + ": expected " + key + "=<number>, got '" + token + "'");
  };
  if (token.rfind(key + "=", 0) != 0) throw fail();
  const std::string digits = token.substr(key.size() + 1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6) throw fail();
  return static_cast<unsigned>(std::stoul(digits));
}

}  // namespace detail

/// Reads a `.boxcode` stream; `allow_repeats` admits vertex-indexed families.
inline BoxCode read_boxcode(std::istream& in, bool allow_repeats = false) {
  std::string line;
  std::size_t lineno = 0;
  const auto next = [&]() {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      line = line.substr(first, line.find_last_not_of(" \t") - first + 1);
      return true;
    }
    return false;
  };
  if (!next()) throw std::invalid_argument("empty .boxcode input");
  std::istringstream head(line);
  std::string tag, qf, ef, extra;
  if (!(head >> tag >> qf >> ef) || tag != "boxcode" || (head >> extra))
    throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'boxcode q=<q> eta=<eta>'");
  const unsigned q = detail::parse_header_field(qf, "q", lineno);
  const std::size_t eta = detail::parse_header_field(ef, "eta", lineno);
  if (q < 2 || q > kMaxTextQ) throw std::invalid_argument("line " + std::to_string(lineno) + ": q must be in 2..36");

  std::vector<Word> words;
  while (next()) {
    const std::string text = line == "*" && eta == 0 ? std::string() : line;
    if (text.size() < eta)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": codeword '" + line + "' has " +
                                  std::to_string(text.size()) + " symbols, expected " + std::to_string(eta));
    if (text.find_first_not_of('*', eta) != std::string::npos)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": protected symbol beyond eta=" + std::to_string(eta));
    try {
      words.push_back(Word::parse(text.substr(0, eta), q));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (words.empty()) throw std::invalid_argument("no codewords after the header");
  BoxCode code = allow_repeats ? BoxCode::family(std::move(words)) : BoxCode::from_words(std::move(words));
  if (code.eta() != eta)
    throw std::invalid_argument("header eta=" + std::to_string(eta) + " but the codewords have protected length " +
                                std::to_string(code.eta()));
  return code;
}

inline BoxCode parse_boxcode(const std::string& text, bool allow_repeats = false) {
  std::istringstream in(text);
  return read_boxcode(in, allow_repeats);
}

}  // namespace boxcode

#endif  // BOXCODE_IO_HPP
