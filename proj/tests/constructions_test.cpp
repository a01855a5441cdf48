#include <gtest/gtest.h>

#include <set>

#include "boxcode/bounds.hpp"
#include "boxcode/canonical.hpp"
#include "boxcode/constructions.hpp"
#include "oracles.hpp"

using namespace boxcode;

namespace {

std::vector<std::string> padded(const BoxCode& c) {
  std::vector<std::string> out;
  for (const auto& w : c.codewords()) out.push_back(w.resized(c.eta()).to_string());
  return out;
}

std::size_t oracle_min_distance(const std::vector<std::string>& words) {
  std::size_t best = 1000;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) best = std::min(best, oracle::distance(words[i], words[j]));
  return best;
}

// The sixteen meshed codewords of the length-8 example, transcribed.
const std::vector<std::string> kNp1cc8Listed = {
    "0001101*", "1110010*", "001101*1", "110010*0", "01101*11", "10010*00", "1101*111", "0010*000",
    "101*1110", "010*0001", "01*11100", "10*00011", "1*111001", "0*000110", "*1110010", "*0001101"};

}  // namespace

TEST(HammingConstruction, MEqualsThree) {
  const Constructed c = construction_hamming(3);
  EXPECT_EQ(c.code.size(), 10u);  // 8 even-weight words + ⌈16/14⌉
  const auto words = padded(c.code);
  EXPECT_EQ(oracle_min_distance(words), 3u);
  EXPECT_EQ(*c.code.min_distance(), 3u);
  const auto p = hamming_construction_parameters(3);
  EXPECT_EQ(p.size, 10);
  ASSERT_TRUE(p.length_exact);
  EXPECT_EQ(p.length, c.code.length());
  EXPECT_EQ(oracle::length(words), to_string(c.code.length()));
}

TEST(HammingConstruction, MEqualsFourBeatsBallPacking) {
  const Constructed c = construction_hamming(4);
  EXPECT_EQ(c.code.size(), 1093u);
  EXPECT_EQ(*c.code.min_distance(), 3u);
  EXPECT_EQ(c.code.length(), Rational(16359, 1093));
  EXPECT_LT(c.code.length(), Rational(15));
  EXPECT_EQ(ball_packing_min_length(1093, 3, 2), 15u);
  EXPECT_EQ(hamming_construction_parameters(4).length, c.code.length());
}

TEST(HammingConstruction, ParametersWithoutListing) {
  const auto p = hamming_construction_parameters(5);
  EXPECT_EQ(p.size, 34636834);
  EXPECT_EQ(p.length, Rational(534360841, 17318417));
  EXPECT_LT(p.length, Rational(31));
  EXPECT_THROW(construction_hamming(5), std::length_error);
  EXPECT_THROW(construction_hamming(2), std::invalid_argument);
}

TEST(RsConstruction, FiveTwoThree) {
  const Constructed c = construction_rs(5, 2, 3);
  EXPECT_EQ(c.code.to_strings(), (std::vector<std::string>{"*000", "1111", "2222", "3333", "4444", "1243"}));
  EXPECT_EQ(c.code.size(), 6u);  // q^(k−1) + 1
  EXPECT_EQ(oracle_min_distance(padded(c.code)), 3u);
  EXPECT_EQ(c.code.length(), Rational(23, 6));
  // k + d − 2 + (1 + (q−1)·C(k+d−1, d))/(q^(k−1)+1) = 3 + 17/6
  EXPECT_EQ(rs_construction_length_bound(5, 2, 3), Rational(35, 6));
  EXPECT_LE(c.code.length(), rs_construction_length_bound(5, 2, 3));
}

TEST(RsConstruction, SevenTwoFour) {
  const Constructed c = construction_rs(7, 2, 4);
  EXPECT_EQ(c.code.size(), 8u);
  EXPECT_EQ(oracle_min_distance(padded(c.code)), 4u);
  EXPECT_EQ(c.code.length(), Rational(19, 4));
  EXPECT_EQ(rs_construction_length_bound(7, 2, 4), Rational(63, 8));
}

TEST(RsConstruction, LargerInstancesKeepDistance) {
  for (const auto& [q, k, d] : {std::tuple{7u, 3u, 3u}, {8u, 2u, 3u}, {8u, 3u, 4u}, {11u, 2u, 5u}}) {
    const Constructed c = construction_rs(q, k, d);
    EXPECT_EQ(c.code.size(), checked_pow(q, k - 1) + 1);
    EXPECT_GE(*c.code.min_distance(), d);
    EXPECT_LE(c.code.length(), rs_construction_length_bound(q, k, d));
  }
  EXPECT_THROW(construction_rs(4, 2, 3), std::invalid_argument);
}

TEST(Compose, ChecksComponentsAndAlphabetSize) {
  const BoxCode dot = BoxCode::from_words({Word::unprotected(2)});
  const BoxCode bits = BoxCode::from_strings(2, {"0", "1"});
  EXPECT_EQ(compose_perfect({bits, dot}).code.to_strings(), (std::vector<std::string>{"00", "01", "1*"}));
  EXPECT_THROW(compose_perfect({bits}), std::invalid_argument);
  EXPECT_THROW(compose_perfect({BoxCode::from_strings(2, {"0"}), dot}), std::invalid_argument);
}

TEST(ChainCode, SmallListings) {
  EXPECT_EQ(chain_code(1).code.to_strings(), (std::vector<std::string>{"0", "1"}));
  EXPECT_EQ(chain_code(3).code.to_strings(), (std::vector<std::string>{"000", "001", "01*", "1**"}));
}

TEST(ChainCode, PerfectAndCountedLength) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const Constructed c = chain_code(n);
    const auto words = padded(c.code);
    EXPECT_EQ(oracle::tiling_defect(words, 0, 2, c.code.eta()), "") << n;
    EXPECT_TRUE(is_perfect(c.code, 0).perfect);
    EXPECT_EQ(c.code.size(), n + 1);
    // norms 1, 2, ..., n, n over n+1 words
    const auto nn = static_cast<std::int64_t>(n);
    EXPECT_EQ(oracle::length(words), oracle::fraction(nn * (nn + 1) / 2 + nn, nn + 1));
    EXPECT_EQ(c.code.length(), chain_code_length(n));
    EXPECT_NE(c.code.length(), chain_code_quoted_length(n));
    EXPECT_FALSE(c.code.is_degenerate());
  }
  EXPECT_EQ(chain_code(2).code.length(), Rational(5, 3));
  EXPECT_EQ(chain_code(12).code.length(), Rational(90, 13));
}

TEST(ChainCode, ProvenanceRecordsTheFormulaMismatch) {
  const auto notes = chain_code(4).provenance.notes;
  ASSERT_EQ(notes.size(), 1u);
  EXPECT_NE(notes.front().find("(mismatch)"), std::string::npos);
}

TEST(Meshing, ReplacesTheDifferingCoordinate) {
  EXPECT_EQ(meshing(Word::parse("0110", 2), Word::parse("0100", 2)).to_string(), "01*0");
  EXPECT_THROW(meshing(Word::parse("0110", 2), Word::parse("0101", 2)), std::invalid_argument);
  EXPECT_THROW(meshing(Word::parse("01*0", 2), Word::parse("0100", 2)), std::invalid_argument);
}

TEST(Np1ccConstruction, LengthEightExample) {
  const Constructed c = construction_np1cc_builtin8();
  const BoxCode listed = BoxCode::from_strings(2, kNp1cc8Listed);
  EXPECT_TRUE(equivalent(c.code, listed));
  EXPECT_EQ(c.code.size(), 16u);
  EXPECT_EQ(c.code.length(), Rational(7));
  EXPECT_EQ(*c.code.min_distance(), 3u);
  EXPECT_EQ(oracle_min_distance(kNp1cc8Listed), 3u);
  EXPECT_EQ(oracle::tiling_defect(kNp1cc8Listed, 1, 2, 8), "");
  EXPECT_TRUE(is_perfect(c.code, 1).perfect);
  EXPECT_FALSE(c.code.is_degenerate());
}

TEST(Np1ccConstruction, RejectsWrongSizesAndShapes) {
  EXPECT_THROW(construction_np1cc(CoveringCode::from_strings({"000", "111"})), std::invalid_argument);
  EXPECT_THROW(construction_np1cc(CoveringCode::from_strings({"0000", "1111"})), std::invalid_argument);
}

TEST(D1Gap, SizesAndLengths) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const Constructed c = construction_d1_gap(n);
    EXPECT_EQ(c.code.size(), (std::size_t{1} << (n - 1)) + 1);
    EXPECT_GE(oracle_min_distance(padded(c.code)), 1u);
    EXPECT_EQ(c.code.length(), d1_gap_length(n));
    // n − 1 + (n+1)/(2^(n−1)+1), evaluated independently
    const auto nn = static_cast<std::int64_t>(n);
    const std::int64_t den = (std::int64_t{1} << (n - 1)) + 1;
    EXPECT_EQ(oracle::length(padded(c.code)), oracle::fraction((nn - 1) * den + nn + 1, den));
    // a classical binary code with this many words needs length n
    const auto classical = static_cast<std::int64_t>(ball_packing_min_length(c.code.size(), 1, 2));
    EXPECT_EQ(classical, nn);
    if (n >= 3) {
      EXPECT_LT(c.code.length(), Rational(classical));
    } else {
      EXPECT_EQ(c.code.length(), Rational(classical));
    }
  }
  EXPECT_EQ(construction_d1_gap(3).code.length(), Rational(14, 5));
}
