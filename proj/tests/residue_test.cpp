#include "cglab/residue.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cglab/errors.hpp"
#include "oracle.hpp"

namespace cglab {
namespace {

TEST(Modulus, One) {
  const Modulus m = Modulus::build(1);
  EXPECT_TRUE(m.factorization().empty());
  EXPECT_EQ(m.phi(), 1u);
  EXPECT_TRUE(m.is_cubefree());
  EXPECT_FALSE(m.is_prime());
}

TEST(Modulus, PrimeCube) {
  const Modulus m = Modulus::build(8);
  ASSERT_EQ(m.factorization().size(), 1u);
  EXPECT_EQ(m.factorization()[0], (PrimePower{2, 3}));
  EXPECT_FALSE(m.is_cubefree());
  EXPECT_EQ(m.phi(), 4u);
}

TEST(Modulus, FiftyFive) {
  const Modulus m = Modulus::build(55);
  EXPECT_EQ(m.factorization(), (std::vector<PrimePower>{{5, 1}, {11, 1}}));
  EXPECT_EQ(m.phi(), 40u);  // brute-force gcd count
}

TEST(Modulus, RejectsZero) { EXPECT_THROW(Modulus::build(0), InvalidArgument); }

TEST(Modulus, InvariantsUpTo10000) {
  for (u64 v = 1; v <= 10000; ++v) {
    const Modulus m = Modulus::build(v);
    u64 prod = 1;
    u64 prev = 0;
    bool cubefree = true;
    for (const auto& pp : m.factorization()) {
      ASSERT_GT(pp.prime, prev);
      ASSERT_GE(pp.exponent, 1);
      prev = pp.prime;
      prod *= pp.value();
      cubefree = cubefree && pp.exponent <= 2;
    }
    ASSERT_EQ(prod, v);
    ASSERT_EQ(m.phi(), oracle::phi(v)) << "m = " << v;
    ASSERT_EQ(m.is_cubefree(), cubefree);
    ASSERT_EQ(m.is_prime(), oracle::is_prime(v));
  }
}

TEST(ModInverse, Examples) {
  EXPECT_EQ(mod_inverse(1, Modulus::build(7)), 1u);
  EXPECT_EQ(mod_inverse(1, Modulus::build(1000)), 1u);
  EXPECT_EQ(mod_inverse(3, Modulus::build(7)), 5u);
  EXPECT_THROW(mod_inverse(5, Modulus::build(55)), NonInvertible);
}

TEST(ModInverse, NegativeAndLargeInputs) {
  const Modulus m = Modulus::build(1'000'000'007);
  EXPECT_EQ(mul_mod(mod_inverse(-2, m), m.reduce(-2), m.value()), 1u);
  EXPECT_EQ(mul_mod(mod_inverse(INT64_MAX, m), m.reduce(INT64_MAX), m.value()), 1u);
}

TEST(ModInverse, PropertyRandom) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const u64 mv = 2 + rng() % 100000;
    const Modulus m = Modulus::build(mv);
    const i64 a = static_cast<i64>(rng() % 1'000'000) - 500'000;
    if (!m.is_unit(a)) {
      EXPECT_THROW(mod_inverse(a, m), NonInvertible);
      continue;
    }
    const u64 b = mod_inverse(a, m);
    ASSERT_GE(b, 1u);
    ASSERT_LT(b, mv);
    ASSERT_EQ(mul_mod(b, m.reduce(a), mv), 1u);
  }
}

TEST(Divisors, Examples) {
  EXPECT_EQ(divisors(1), (std::vector<u64>{1}));
  EXPECT_EQ(divisors(12), (std::vector<u64>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisor_count(60), 12u);
  EXPECT_THROW(divisors(0), InvalidArgument);
}

TEST(Divisors, PairingAndCount) {
  for (u64 x = 1; x <= 3000; ++x) {
    const auto d = divisors(x);
    ASSERT_TRUE(std::is_sorted(d.begin(), d.end()));
    ASSERT_EQ(d.size(), divisor_count(x));
    u64 brute = 0;
    for (u64 i = 1; i <= x; ++i) brute += x % i == 0;
    ASSERT_EQ(d.size(), brute);
    for (std::size_t i = 0; i < d.size(); ++i) ASSERT_EQ(d[i] * d[d.size() - 1 - i], x);
  }
}

TEST(Arithmetic, ReduceNegative) {
  EXPECT_EQ(reduce(-1, 7), 6u);
  EXPECT_EQ(reduce(-14, 7), 0u);
  EXPECT_EQ(reduce(INT64_MIN, 3), static_cast<u64>((INT64_MIN % 3 + 3) % 3));
}

TEST(Arithmetic, MulModNoOverflow) {
  const u64 m = (u64{1} << 62) + 57;
  EXPECT_EQ(mul_mod(m - 1, m - 1, m), 1u);
}

TEST(Arithmetic, InverseTable) {
  const auto inv = inverse_table(101);
  for (u64 a = 1; a < 101; ++a) EXPECT_EQ(a * inv[a] % 101, 1u);
}

TEST(Arithmetic, CeilPowerSnapsExactPowers) {
  EXPECT_EQ(ceil_power(1000, 1.0 / 3.0), 10u);
  EXPECT_EQ(ceil_power(1009, 0.4), 16u);
  EXPECT_EQ(ceil_power(1, 0.5), 1u);
}

}  // namespace
}  // namespace cglab
