#include "cglab/charsum.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cglab/errors.hpp"
#include "oracle.hpp"

namespace cglab {
namespace {

CharacterGroup group_of(u64 m) { return build_group(Modulus::build(m)); }

// The unique character of order 2 modulo an odd prime.
Character quadratic(const CharacterGroup& g) {
  return g.from_exponents({g.components()[0].order / 2});
}

TEST(IntervalSum, FullPeriod) {
  for (u64 m : {5u, 12u, 97u, 360u}) {
    const auto g = group_of(m);
    for (const auto& chi : all_characters(g)) {
      const auto s = interval_sum(chi, m);
      const double expected = chi.is_principal() ? static_cast<double>(g.size()) : 0.0;
      EXPECT_NEAR(std::abs(s - expected), 0.0, 1e-9);
    }
  }
}

TEST(IntervalSum, QuadraticModFive) {
  const auto g = group_of(5);
  EXPECT_NEAR(std::abs(interval_sum(quadratic(g), 2)), 0.0, 1e-12);
  EXPECT_EQ(interval_sum(g.principal(), 0), std::complex<double>(0.0));
}

TEST(IntervalSum, LongRangesAndWindowAdditivity) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 40; ++it) {
    const u64 m = 2 + rng() % 300;
    const auto g = group_of(m);
    const auto chi = g.character(rng() % g.size());
    const u64 n = rng() % (5 * m);
    std::complex<double> direct = 0.0;
    for (u64 x = 1; x <= n; ++x) direct += evaluate(chi, static_cast<i64>(x)).render();
    ASSERT_NEAR(std::abs(interval_sum(chi, n) - direct), 0.0, 1e-8);
    if (!chi.is_principal()) {
      const u64 cut = rng() % (m + 1);
      std::complex<double> tail = 0.0;
      for (u64 x = cut + 1; x <= m; ++x) tail += evaluate(chi, static_cast<i64>(x)).render();
      ASSERT_NEAR(std::abs(interval_sum(chi, cut) + tail), 0.0, 1e-9);
    }
    ASSERT_LE(std::abs(interval_sum(chi, n)), static_cast<double>(n) + 1e-9);
  }
}

TEST(ShiftedPrimeSum, Examples) {
  const auto primes = PrimeTable::sieve(100);
  const auto g7 = group_of(7);
  EXPECT_EQ(shifted_prime_sum(g7.principal(), primes, 1, 1), std::complex<double>(0.0));
  EXPECT_NEAR(std::abs(shifted_prime_sum(quadratic(g7), primes, 3, 1)), 0.0, 1e-12);
  const auto g101 = group_of(101);
  EXPECT_NEAR(shifted_prime_sum(g101.principal(), primes, 100, 0).real(), 25.0, 1e-12);
  EXPECT_THROW(shifted_prime_sum(g101.principal(), primes, 101, 0), InvalidArgument);
}

TEST(CharacterSums, MatchDirectEvaluation) {
  const auto g = group_of(360);
  const std::vector<i64> values = {1, 7, 7, 11, 360 + 7, -1, 2, 49};
  const auto sums = character_sums(g, values, 3);
  ASSERT_EQ(sums.size(), g.size());
  for (u64 i = 0; i < g.size(); ++i) {
    std::complex<double> direct = 0.0;
    for (i64 v : values) direct += evaluate(g.character(i), v).render();
    ASSERT_NEAR(std::abs(sums[i] - direct), 0.0, 1e-9);
  }
}

TEST(CharacterSums, WorkerCountDoesNotChangeOutput) {
  const auto g = group_of(1009);
  std::vector<i64> values;
  for (i64 x = 1; x <= 300; ++x) values.push_back(x * x + 3);
  const auto one = character_sums(g, values, 1);
  const auto four = character_sums(g, values, 4);
  ASSERT_EQ(one, four);
}

TEST(MomentIdentity, WorkedExample) {
  const auto r = moment_identity_check(group_of(7), 2, 2);
  EXPECT_NEAR(r.lhs, 6.0, 1e-6);
  EXPECT_EQ(r.rhs_congruence, 6u);
  EXPECT_EQ(r.rhs_equation, 6u);
  EXPECT_TRUE(r.equation_applies);
}

TEST(MomentIdentity, TrivialCases) {
  for (u64 m : {5u, 12u, 30u}) {
    const auto r = moment_identity_check(group_of(m), 1, 3);
    EXPECT_NEAR(r.lhs, 1.0, 1e-9);
    EXPECT_EQ(r.rhs_congruence, 1u);
    EXPECT_EQ(r.rhs_equation, 1u);
  }
  const auto r = moment_identity_check(group_of(4), 2, 1);
  EXPECT_NEAR(r.lhs, 1.0, 1e-9);
  EXPECT_EQ(r.rhs_congruence, 1u);
  EXPECT_EQ(r.rhs_equation, 1u);
}

TEST(MomentIdentity, AgainstBruteForce) {
  for (u64 m : {6u, 7u, 10u, 13u, 24u, 31u}) {
    const auto g = group_of(m);
    for (unsigned n = 1; n <= 3; ++n) {
      for (u64 u = 1; u <= 6; ++u) {
        const auto r = moment_identity_check(g, u, n);
        const auto [cong, eq] = oracle::moment_counts(m, u, n);
        ASSERT_EQ(r.rhs_congruence, cong);
        ASSERT_EQ(r.rhs_equation, eq);
        ASSERT_NEAR(r.lhs, static_cast<double>(cong), 1e-6);
        u64 un = 1;
        for (unsigned i = 0; i < n; ++i) un *= u;
        ASSERT_EQ(r.equation_applies, un <= m);
        if (un <= m) ASSERT_EQ(cong, eq);
      }
    }
  }
}

TEST(MomentIdentity, Errors) {
  Budget b;
  b.enumeration_cap = 100;
  EXPECT_THROW(moment_identity_check(group_of(7), 11, 2, b), BudgetExceeded);
  EXPECT_THROW(moment_identity_check(group_of(7), 0, 2), InvalidArgument);
}

TEST(Parseval, Examples) {
  for (u64 m : {7u, 12u, 100u}) {
    const auto g = group_of(m);
    const std::vector<i64> one = {1}, two = {1, 1};
    EXPECT_NEAR(parseval_check(g, one).lhs, static_cast<double>(g.size()), 1e-9);
    EXPECT_NEAR(parseval_check(g, two).lhs, 4.0 * static_cast<double>(g.size()), 1e-9);
  }
  const std::vector<i64> primes = {2, 3, 5};
  const auto r = parseval_check(group_of(7), primes);
  EXPECT_NEAR(r.lhs, 18.0, 1e-9);
  EXPECT_EQ(r.rhs, 18u);
}

TEST(Parseval, RandomMultisets) {
  std::mt19937_64 rng(17);
  for (u64 m : {12u, 101u, 360u, 1024u}) {
    const auto g = group_of(m);
    for (int s = 0; s < 10; ++s) {
      std::vector<i64> values(1 + rng() % 60);
      for (auto& v : values) v = static_cast<i64>(rng() % 5000) - 2500;
      const auto r = parseval_check(g, values);
      ASSERT_NEAR(r.lhs, static_cast<double>(r.rhs), 1e-6);
    }
  }
}

TEST(LargeValues, CensusAgainstFrozenOracle) {
  // Values from tests/oracles/frozen_values.py.
  const auto g = group_of(101);
  std::vector<i64> support;
  for (u64 q : oracle::primes_upto(50)) support.push_back(static_cast<i64>(q));
  const std::vector<double> v = {0.0, 3.0, 5.0, 16.0};
  const auto c = large_value_census(g, support, 50, v);
  EXPECT_EQ(c.counts, (std::vector<u64>{99, 53, 16, 0}));
  EXPECT_NEAR(c.parseval_total, 1500.0, 1e-6);
  EXPECT_DOUBLE_EQ(c.huxley_rhs[1], 2500.0 / 9.0 + 101.0 * 50.0 * 50 * 50 * 50 / 729.0);
}

TEST(LargeValues, MonotoneAndChebyshev) {
  for (u64 p : {101u, 1009u}) {
    const auto g = group_of(p);
    std::vector<i64> support;
    for (u64 q : oracle::primes_upto(p - 1)) support.push_back(static_cast<i64>(q));
    std::vector<double> v;
    for (double x = 0.0; x <= 60.0; x += 0.5) v.push_back(x);
    const auto c = large_value_census(g, support, p - 1, v);
    EXPECT_EQ(c.counts.front(), p - 2);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) ASSERT_LE(c.counts[i], c.counts[i - 1]);
      ASSERT_LE(static_cast<double>(c.counts[i]) * v[i] * v[i], c.parseval_total + 1e-6);
    }
    const double terms = static_cast<double>(support.size());
    const std::vector<double> above = {terms + 1.0};
    EXPECT_EQ(large_value_census(g, support, p - 1, above).counts[0], 0u);
  }
}

TEST(LargeValues, DyadicBlocks) {
  const auto blocks = dyadic_blocks(1, 100);
  ASSERT_FALSE(blocks.empty());
  EXPECT_EQ(blocks.front(), (std::pair<u64, u64>{1, 2}));
  EXPECT_EQ(blocks.back().second, 100u);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    EXPECT_LT(blocks[i].first, blocks[i].second);
    EXPECT_LE(blocks[i].second, 2 * blocks[i].first);
    if (i) EXPECT_EQ(blocks[i].first, blocks[i - 1].second);
  }
  EXPECT_THROW(dyadic_blocks(0, 10), InvalidArgument);

  const auto g = group_of(101);
  std::vector<i64> support;
  for (u64 q : oracle::primes_upto(100)) support.push_back(static_cast<i64>(q));
  const std::vector<double> v = {0.0, 2.0};
  const auto per_block = large_value_census_dyadic(g, support, 100, v);
  ASSERT_EQ(per_block.size(), blocks.size());
  for (const auto& c : per_block) EXPECT_EQ(c.length, c.block_lo);
}

TEST(LargeValues, RejectsBadThresholds) {
  const std::vector<i64> s = {1};
  const std::vector<double> bad = {2.0, 1.0};
  EXPECT_THROW(large_value_census(group_of(7), s, 1, bad), InvalidArgument);
}

TEST(BurgessReport, Examples) {
  const auto g = group_of(1009);
  const std::vector<u64> grid = {1008, 1, 100};
  const auto rows = burgess_report(g, grid);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].length, 1u);
  EXPECT_NEAR(rows[0].max_magnitude, 1.0, 1e-12);
  // Frozen from the brute-force oracle: generator 11, argmax exponent 99.
  EXPECT_EQ(rows[1].length, 100u);
  EXPECT_NEAR(rows[1].max_magnitude, 29.104037343047395, 1e-9);
  EXPECT_NEAR(rows[1].ratio, 0.29104037343047395, 1e-11);
  EXPECT_EQ(rows[1].chi_index, std::optional<u64>(99));
  EXPECT_EQ(rows[2].length, 1008u);
  EXPECT_NEAR(rows[2].max_magnitude, 0.0, 1e-9);
  EXPECT_NEAR(rows[1].delta_eff, -std::log(rows[1].ratio) / std::log(1009.0), 1e-12);
}

TEST(BurgessReport, MatchesOracleTable) {
  const u64 p = 211;
  const auto table = oracle::prime_character_table(p);
  const auto g = group_of(p);
  const std::vector<u64> grid = {5, 17, 60, 150};
  const auto rows = burgess_report(g, grid, 2);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double best = 0.0;
    for (std::size_t a = 1; a < table.size(); ++a) {
      std::complex<double> s = 0.0;
      for (u64 x = 1; x <= grid[i]; ++x) s += table[a][x];
      best = std::max(best, std::abs(s));
    }
    EXPECT_NEAR(rows[i].max_magnitude, best, 1e-9);
  }
}

TEST(VinogradovReport, ShapesAndPrecondition) {
  const auto primes = PrimeTable::sieve(1000);
  const auto g = group_of(1009);
  const std::vector<u64> grid = {100, 1000};
  const auto rows = vinogradov_report(g, primes, grid, 1);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.shift, std::optional<i64>(1));
    EXPECT_LE(r.max_magnitude, static_cast<double>(r.terms) + 1e-9);
    EXPECT_NEAR(r.reference_value, std::pow(1009.0, 0.25) * std::pow(static_cast<double>(r.length), 2.0 / 3.0), 1e-9);
  }
  // Cross-check one grid point by direct evaluation.
  double best = 0.0;
  for (u64 i = 1; i < g.size(); ++i) best = std::max(best, std::abs(shifted_prime_sum(g.character(i), primes, 100, 1)));
  EXPECT_NEAR(rows[0].max_magnitude, best, 1e-9);
  EXPECT_THROW(vinogradov_report(group_of(1000), primes, grid, 1), PreconditionFailed);
}

}  // namespace
}  // namespace cglab
