#include "cglab/coverage.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "cglab/errors.hpp"
#include "oracle.hpp"

namespace cglab {
namespace {

ResidueSet products(u64 m, std::vector<u64> bounds, const Budget& budget = {}) {
  return product_set(Modulus::build(m), bounds, budget);
}

TEST(ResidueSet, Basics) {
  const auto m = Modulus::build(10);
  const std::vector<i64> r = {3, 13, -1, 0};
  const auto s = ResidueSet::from_residues(m, r);
  EXPECT_EQ(s.members(), (std::vector<u64>{0, 3, 9}));
  EXPECT_EQ(s.covered_total(), 3u);
  EXPECT_EQ(s.covered_units(), 2u);
  EXPECT_EQ(s.missing_units(), 2u);
  EXPECT_FALSE(s.full());
  EXPECT_EQ(ResidueSet::units(m).members(), (std::vector<u64>{1, 3, 7, 9}));
  EXPECT_EQ(s.missing().size(), 7u);
}

TEST(ProductSet, WorkedExamples) {
  EXPECT_EQ(products(7, {1, 1, 1}).members(), (std::vector<u64>{1}));
  EXPECT_EQ(products(10, {2, 2, 2}).members(), (std::vector<u64>{1, 2, 4, 8}));
  const auto s = products(55, {3, 3, 3});
  EXPECT_EQ(s.covered_total(), 10u);
  const auto by_gcd = missing_by_gcd(s);
  EXPECT_EQ(by_gcd.at(11), (std::vector<u64>{11, 22, 33, 44}));
}

TEST(ProductSet, AgainstBruteForce) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    const u64 m = 1 + rng() % 150;
    const unsigned k = 1 + rng() % 4;
    std::vector<u64> bounds(k);
    for (auto& b : bounds) b = 1 + rng() % 12;
    const auto expect = oracle::product_set(m, bounds);
    const auto got = products(m, bounds).members();
    ASSERT_EQ(std::vector<u64>(expect.begin(), expect.end()), got) << "m=" << m;
  }
}

TEST(ProductSet, MonotoneAndSymmetric) {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 100; ++it) {
    const u64 m = 2 + rng() % 400;
    std::vector<u64> bounds = {1 + rng() % 20, 1 + rng() % 20, 1 + rng() % 20};
    const auto base = products(m, bounds);
    auto bigger = bounds;
    bigger[rng() % 3] += 1 + rng() % 5;
    const auto grown = products(m, bigger);
    for (u64 r : base.members()) ASSERT_TRUE(grown.contains(r));
    auto shuffled = bounds;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    ASSERT_EQ(base, products(m, shuffled));
    ASSERT_LE(base.covered_total(), m);
  }
}

TEST(ProductSet, LargeBoundsCoverEverything) {
  const auto s = products(97, {97, 97, 97});
  EXPECT_TRUE(s.full());
  EXPECT_EQ(s.missing_units(), 0u);
  // Bounds beyond m behave like m.
  EXPECT_EQ(products(30, {500, 2, 3}), products(30, {30, 2, 3}));
}

TEST(ProductSet, FrozenDeficiency) {
  // m = 1009, k = 3, epsilon = 0.2 gives N = ceil(1009^0.4) = 16.
  EXPECT_EQ(ceil_power(1009, 1.2 / 3.0), 16u);
  const auto s = products(1009, {16, 16, 16});
  EXPECT_EQ(s.covered_total(), 355u);
  EXPECT_EQ(1009 - s.covered_total(), 654u);
}

TEST(ProductSet, Errors) {
  const auto m = Modulus::build(10);
  EXPECT_THROW(product_set(m, std::vector<u64>{}), InvalidArgument);
  EXPECT_THROW(product_set(m, std::vector<u64>{2, 0, 2}), InvalidArgument);
  Budget tiny;
  tiny.sweep_cap = 100;
  EXPECT_THROW(products(1000, {10, 10, 10}, tiny), BudgetExceeded);
}

TEST(MissingByGcd, PartitionsTheComplement) {
  for (u64 m : {12u, 55u, 360u}) {
    const auto s = products(m, {3, 4, 5});
    const auto by_gcd = missing_by_gcd(s);
    EXPECT_EQ(by_gcd.size(), divisor_count(m));
    u64 total = 0;
    for (const auto& [d, rs] : by_gcd) {
      for (u64 r : rs) EXPECT_EQ(std::gcd(r, m), d);
      total += rs.size();
    }
    EXPECT_EQ(total, m - s.covered_total());
    EXPECT_EQ(by_gcd.at(1).size(), s.missing_units());
  }
}

TEST(Counterexample, Cases) {
  EXPECT_TRUE(verify_counterexample(11, 5, 3));
  EXPECT_TRUE(verify_counterexample(101, 20, 12));
  EXPECT_TRUE(verify_counterexample(101, 20, 1));
  EXPECT_THROW(verify_counterexample(12, 5, 3), PreconditionFailed);   // q not prime
  EXPECT_THROW(verify_counterexample(11, 5, 11), PreconditionFailed);  // q <= B
  EXPECT_THROW(verify_counterexample(11, 1, 3), PreconditionFailed);   // B^3 >= m
}

TEST(Counterexample, AgreesWithBruteForce) {
  for (u64 q : {5u, 7u, 11u, 13u}) {
    for (u64 n = 1; n <= 12; ++n) {
      const u64 m = q * n;
      for (u64 b = 1; b < q && b * b * b < m; ++b) {
        const auto s = oracle::product_set(m, {b, b, b});
        bool none = true;
        for (u64 j = 1; j <= n; ++j) none = none && !s.count(j * q % m);
        ASSERT_EQ(verify_counterexample(q, n, b), none);
      }
    }
  }
}

TEST(SetProduct, ExampleAndMismatch) {
  const auto m = Modulus::build(10);
  const std::vector<i64> a = {2, 3}, b = {3, 5};
  EXPECT_EQ(set_product(ResidueSet::from_residues(m, a), ResidueSet::from_residues(m, b)).members(),
            (std::vector<u64>{0, 5, 6, 9}));
  const ResidueSet other(Modulus::build(11));
  EXPECT_THROW(set_product(ResidueSet::from_residues(m, a), other), ModulusMismatch);
}

TEST(SetProduct, MatchesProductSetComposition) {
  const auto m = Modulus::build(91);
  const auto ab = set_product(product_set(m, std::vector<u64>{5}), product_set(m, std::vector<u64>{7}));
  EXPECT_EQ(ab, product_set(m, std::vector<u64>{5, 7}));
}

TEST(Collisions, WorkedExample) {
  const auto r = collision_count(Modulus::build(7), std::vector<u64>{2, 2, 2});
  EXPECT_EQ(r.tuples, 8u);
  EXPECT_EQ(r.collisions, 22u);
  EXPECT_DOUBLE_EQ(r.ratio, 22.0 * 7.0 / 64.0);
}

TEST(Collisions, AgainstBruteForce) {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 60; ++it) {
    const u64 m = 2 + rng() % 200;
    std::vector<u64> bounds = {1 + rng() % 22, 1 + rng() % 22, 1 + rng() % 22};
    if (bounds[0] * bounds[1] * bounds[2] > 10'000) continue;
    const auto r = collision_count(Modulus::build(m), bounds);
    ASSERT_EQ(r.collisions, oracle::collisions(m, bounds));
    const u64 t = r.tuples;
    ASSERT_GE(r.collisions, t);          // diagonal pairs
    ASSERT_GE(r.collisions * m, t * t);  // Cauchy-Schwarz
  }
}

TEST(Collisions, Budget) {
  Budget tiny;
  tiny.enumeration_cap = 10;
  EXPECT_THROW(collision_count(Modulus::build(7), std::vector<u64>{3, 3, 3}, tiny), BudgetExceeded);
}

TEST(CoverageReport, Fields) {
  const auto r = coverage_report(Modulus::build(55), std::vector<u64>{3, 3, 3});
  EXPECT_EQ(r.covered_total, 10u);
  EXPECT_EQ(r.deficiency, 45u);
  EXPECT_DOUBLE_EQ(r.deficiency_fraction, 45.0 / 55.0);
  EXPECT_EQ(r.missing_by_gcd.at(11), 4u);
  EXPECT_TRUE(r.cubefree);
}

TEST(CoverageSweep, SortedAndFiltered) {
  const std::vector<u64> grid = {1009, 101, 8 * 13, 27 * 5};
  const auto k3 = coverage_sweep(grid, 0.2, 3);
  ASSERT_EQ(k3.size(), 4u);
  for (std::size_t i = 1; i < k3.size(); ++i) EXPECT_LT(k3[i - 1].modulus, k3[i].modulus);
  EXPECT_EQ(k3.back().deficiency, 654u);
  const auto k4 = coverage_sweep(grid, 0.2, 4, {}, 2);
  ASSERT_EQ(k4.size(), 2u);  // 104 = 8*13 and 135 = 27*5 are not cubefree
  for (const auto& r : k4) EXPECT_TRUE(r.cubefree);
  EXPECT_THROW(coverage_sweep(grid, 0.2, 5), InvalidArgument);
}

}  // namespace
}  // namespace cglab
