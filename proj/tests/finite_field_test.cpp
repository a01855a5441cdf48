#include <gtest/gtest.h>

#include <set>

#include "boxcode/finite_field.hpp"
#include "oracles.hpp"

using namespace boxcode;

TEST(PrimeField, ArithmeticMatchesModularIntegers) {
  for (const std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const GaloisField f = GaloisField::prime(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        ASSERT_EQ(f.add(a, b), (a + b) % p);
        ASSERT_EQ(f.mul(a, b), a * b % p);
        ASSERT_EQ(f.sub(a, b), (a + p - b) % p);
      }
      if (a != 0) {
        ASSERT_EQ(f.mul(a, f.inv(a)), 1u);
      }
    }
  }
}

TEST(PrimeField, PrimitiveElementIsTheSmallestGenerator) {
  for (const std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 101u}) {
    const GaloisField f = GaloisField::prime(p);
    EXPECT_EQ(f.primitive_element(), oracle::smallest_generator(p)) << p;
    EXPECT_EQ(oracle::mul_order(f.primitive_element(), p), p - 1);
  }
  EXPECT_EQ(GaloisField::prime(5).primitive_element(), 2u);
  EXPECT_EQ(GaloisField::prime(7).primitive_element(), 3u);
}

TEST(PrimeField, RejectsComposites) {
  EXPECT_THROW(GaloisField::prime(9), std::invalid_argument);
  EXPECT_THROW(GaloisField::prime(1), std::invalid_argument);
  EXPECT_THROW(GaloisField::of_order(6), std::invalid_argument);
}

TEST(BinaryExtension, DefaultModulusForGF8) {
  const GaloisField f = GaloisField::of_order(8);
  EXPECT_EQ(f.descriptor(), "2^3:0b1011");  // x^3 + x + 1
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b) {
      ASSERT_EQ(f.mul(a, b), oracle::gf2_poly_mul(a, b, 0b1011, 3));
      ASSERT_EQ(f.add(a, b), a ^ b);
    }
}

TEST(BinaryExtension, EveryNonzeroElementHasAnInverse) {
  for (unsigned e = 1; e <= 8; ++e) {
    const GaloisField f = GaloisField::binary_extension(e);
    for (std::uint32_t a = 1; a < f.order(); ++a) ASSERT_EQ(f.mul(a, f.inv(a)), 1u) << "e=" << e << " a=" << a;
  }
}

TEST(BinaryExtension, PrimitiveElementGeneratesTheGroup) {
  for (unsigned e = 2; e <= 8; ++e) {
    const GaloisField f = GaloisField::binary_extension(e);
    std::set<std::uint32_t> seen;
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i + 1 < f.order(); ++i) {
      seen.insert(x);
      x = f.mul(x, f.primitive_element());
    }
    EXPECT_EQ(seen.size(), f.order() - 1) << "e=" << e;
    EXPECT_EQ(x, 1u);
  }
}

TEST(BinaryExtension, ExplicitModulus) {
  const GaloisField f = GaloisField::parse("2^3:0b1101");  // x^3 + x^2 + 1
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b) ASSERT_EQ(f.mul(a, b), oracle::gf2_poly_mul(a, b, 0b1101, 3));
  EXPECT_THROW(GaloisField::parse("2^3:0b1111"), std::invalid_argument);  // reducible
  EXPECT_THROW(GaloisField::parse("3^2"), std::invalid_argument);
}

TEST(Irreducible, SmallDegrees) {
  EXPECT_TRUE(is_irreducible_gf2(0b111));
  EXPECT_FALSE(is_irreducible_gf2(0b101));  // (x+1)^2
  EXPECT_EQ(smallest_irreducible(4), 0b10011u);
  EXPECT_EQ(smallest_irreducible(8), 0b100011011u);
}

TEST(FieldDescriptor, RoundTrip) {
  for (const char* text : {"p=2", "p=5", "p=13", "2^2:0b111", "2^4:0b10011"})
    EXPECT_EQ(GaloisField::parse(text).descriptor(), text);
  EXPECT_EQ(GaloisField::parse("2^5").order(), 32u);
  EXPECT_THROW(GaloisField::parse("q=4"), std::invalid_argument);
}

TEST(FieldElement, OperatorsFollowTheField) {
  const auto f = std::make_shared<const GaloisField>(GaloisField::of_order(7));
  const FieldElement a(f, 3);
  const FieldElement b(f, 5);
  EXPECT_EQ((a + b).value(), 1u);
  EXPECT_EQ((a * b).value(), 1u);
  EXPECT_EQ((a - b).value(), 5u);
  EXPECT_EQ(a.inverse().value(), 5u);
  EXPECT_EQ(a.pow(6).value(), 1u);
}
