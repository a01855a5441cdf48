#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "boxcode/canonical.hpp"
#include "boxcode/constructions.hpp"
#include "boxcode/covering.hpp"
#include "oracles.hpp"

using namespace boxcode;

namespace {

const BoxCode kThreeWords = BoxCode::from_strings(2, {"011", "11*", "*0*"});

}  // namespace

TEST(FromBoxCode, ThreeWordExample) {
  const Covering h = from_box_code(kThreeWords);
  ASSERT_EQ(h.bicliques().size(), 3u);
  // coordinate 1: 0 at c1, 1 at c2; coordinate 2: 0 at c3, 1 at c1 and c2; coordinate 3: 1 at c1
  EXPECT_EQ(h.bicliques()[0].a, std::vector<std::size_t>{0});
  EXPECT_EQ(h.bicliques()[0].b, std::vector<std::size_t>{1});
  EXPECT_EQ(h.bicliques()[1].a, std::vector<std::size_t>{2});
  EXPECT_EQ(h.bicliques()[1].b, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(h.bicliques()[2].a.empty());
  EXPECT_EQ(h.bicliques()[2].b, std::vector<std::size_t>{0});
  EXPECT_EQ(capacity(h), 6u);
  EXPECT_EQ(Rational(static_cast<std::int64_t>(capacity(h)), 3), kThreeWords.length());
}

TEST(FromBoxCode, OnlyBinaryCodes) {
  EXPECT_THROW(from_box_code(BoxCode::from_strings(3, {"0", "2"})), std::invalid_argument);
}

TEST(FromBoxCode, SingletonAndClassicalCodes) {
  const Covering single = from_box_code(BoxCode::from_strings(2, {"1*0"}));
  EXPECT_EQ(capacity(single), 2u);
  for (const auto& b : single.bicliques()) EXPECT_TRUE(b.a.empty() || b.b.empty());
  const BoxCode rep = from_classical(2, {{0, 0, 0, 0}, {1, 1, 1, 1}, {0, 1, 0, 1}});
  EXPECT_EQ(capacity(from_box_code(rep)), 12u);
}

TEST(VerifyCovering, CompleteGraphOnThree) {
  const Covering h = from_box_code(kThreeWords);
  EXPECT_TRUE(verify_covering(complete_graph(3), h, 1).covered);
  const CoveringReport two = verify_covering(complete_graph(3), h, 2);
  EXPECT_FALSE(two.covered);
  ASSERT_EQ(two.deficits.size(), 3u);
  for (const auto& e : two.deficits) EXPECT_EQ(e.deficit, 1u);
  EXPECT_TRUE(verify_covering(edgeless_graph(4), Covering(4), 5).covered);
  EXPECT_THROW(verify_covering(complete_graph(4), h, 1), std::invalid_argument);
}

TEST(ToBoxCode, SmallCases) {
  const BoxCode empty = to_box_code(Covering(3));
  EXPECT_EQ(empty.size(), 3u);
  EXPECT_EQ(empty.length(), Rational(0));
  Covering one(2);
  one.add({{0}, {1}});
  EXPECT_EQ(to_box_code(one).to_strings(), (std::vector<std::string>{"0", "1"}));
  // the side holding the smallest vertex becomes symbol 0
  Covering flipped(2);
  flipped.add({{1}, {0}});
  EXPECT_EQ(to_box_code(flipped).to_strings(), (std::vector<std::string>{"0", "1"}));
}

TEST(ToBoxCode, RejectsOverlappingSides) {
  Covering h(3);
  EXPECT_THROW(h.add({{0, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(h.add({{0}, {3}}), std::out_of_range);
}

TEST(Bijection, RoundTripCapacityAndMultiplicity) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 2 + static_cast<std::size_t>(t % 6);
    std::vector<std::string> words;
    std::vector<Word> ws;
    while (words.size() < m) {
      std::string s;
      for (int i = 0; i < 6; ++i) s += "01*"[pick(rng)];
      words.push_back(s);
      ws.push_back(Word::parse(s, 2));
    }
    const BoxCode c = BoxCode::family(ws);
    const Covering h = from_box_code(c);
    ASSERT_EQ(Rational(static_cast<std::int64_t>(capacity(h)), static_cast<std::int64_t>(m)), c.length());
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t v = u + 1; v < m; ++v) ASSERT_EQ(h.edge_multiplicity(u, v), oracle::distance(words[u], words[v]));
    ASSERT_TRUE(equivalent(to_box_code(h), c)) << t;
  }
}

TEST(Bijection, ConstructedBinaryCodes) {
  for (const BoxCode& c : {chain_code(6).code, construction_np1cc_builtin8().code, construction_d1_gap(5).code,
                           construction_hamming(3).code}) {
    const Covering h = from_box_code(c);
    EXPECT_EQ(Rational(static_cast<std::int64_t>(capacity(h)), static_cast<std::int64_t>(c.size())), c.length());
    EXPECT_TRUE(verify_covering(complete_graph(c.size()), h, *c.min_distance()).covered);
    EXPECT_FALSE(verify_covering(complete_graph(c.size()), h, *c.min_distance() + 1).covered);
    EXPECT_TRUE(equivalent(to_box_code(h), c));
  }
}

TEST(Normalize, DropsEmptyBicliques) {
  Covering h(3);
  h.add({{}, {}});
  h.add({{}, {2}});
  h.add({{0}, {1}});
  EXPECT_EQ(h.normalized().bicliques().size(), 2u);
  EXPECT_EQ(h.capacity(), h.normalized().capacity());
}

TEST(CoveringFile, RoundTripAndErrors) {
  std::stringstream s;
  write_covering(s, from_box_code(kThreeWords));
  EXPECT_EQ(s.str(), "covering M=3\nA: 1 | B: 2\nA: 3 | B: 1 2\nA: | B: 1\n");
  const Covering back = read_covering(s);
  EXPECT_EQ(back.bicliques().size(), 3u);
  EXPECT_EQ(back.capacity(), 6u);

  std::istringstream bad("covering M=3\nA: 1 | B: 2\nA: 1 4 | B: 2\n");
  try {
    read_covering(bad);
    FAIL() << "expected an error";
  } catch (const std::exception& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}
