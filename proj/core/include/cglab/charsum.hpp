#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cglab/budget.hpp"
#include "cglab/characters.hpp"
#include "cglab/primes.hpp"

namespace cglab {

// Sum over x = 1..N of chi(x). Whole periods are collapsed: they contribute
// phi(m) each for the principal character and 0 otherwise.
std::complex<double> interval_sum(const Character& chi, u64 n);

// Sum over primes p' <= N of chi(p' + k). The table must cover N.
std::complex<double> shifted_prime_sum(const Character& chi, const PrimeTable& primes,
                                       u64 n, i64 k);

// sum_{s in values} chi(s) for every character of the group, in canonical
// order. Values are taken with multiplicity.
std::vector<std::complex<double>> character_sums(const CharacterGroup& group,
                                                 std::span<const i64> values,
                                                 unsigned workers = 1);

struct MomentCheck {
  u64 modulus = 0;
  u64 range = 0;     // U
  unsigned half_power = 0;  // n
  double lhs = 0.0;  // (1/phi) sum_chi |sum_{u<=U} chi(u)|^{2n}
  u64 rhs_congruence = 0;  // u1..un = u_{n+1}..u_{2n} (mod m), units in [1,U]
  u64 rhs_equation = 0;    // same with equality over the integers
  bool equation_applies = false;  // U^n <= m
};

// Throws BudgetExceeded when U^n exceeds budget.enumeration_cap and
// InvalidArgument for U == 0 or n == 0.
MomentCheck moment_identity_check(const CharacterGroup& group, u64 range, unsigned half_power,
                                  const Budget& budget = {}, unsigned workers = 1);

struct ParsevalCheck {
  double lhs = 0.0;  // sum_chi |sum_{s in S} chi(s)|^2
  u64 rhs = 0;       // phi(m) * sum_a c_a^2 over unit classes a
};

ParsevalCheck parseval_check(const CharacterGroup& group, std::span<const i64> values,
                             unsigned workers = 1);

struct LevelCensus {
  u64 modulus = 0;
  u64 length = 0;     // N in the large-value curve
  u64 block_lo = 0;   // support lies in (block_lo, block_hi]
  u64 block_hi = 0;
  std::vector<double> thresholds;
  std::vector<u64> counts;         // R(V): nonprincipal chi with |S| >= V
  std::vector<double> huxley_rhs;  // N^2/V^2 + m N^4/V^6, constant 1
  double parseval_total = 0.0;     // sum over all chi of |S|^2
};

double huxley_curve(u64 modulus, u64 length, double threshold);

// Census of |sum_{s in support} chi(s)| over nonprincipal characters. Each
// support element carries coefficient 1. Thresholds must be nonnegative and
// ascending; magnitudes within 1e-9 below a threshold count as reaching it.
LevelCensus large_value_census(const CharacterGroup& group, std::span<const i64> support,
                               u64 length, std::span<const double> thresholds,
                               unsigned workers = 1);

// Intervals (a, b] with a < b <= 2a covering (lo, hi]; lo must be >= 1.
std::vector<std::pair<u64, u64>> dyadic_blocks(u64 lo, u64 hi);

// One census per dyadic block of (1, N], restricted to support elements in
// that block; length is the block's lower end.
std::vector<LevelCensus> large_value_census_dyadic(const CharacterGroup& group,
                                                   std::span<const i64> support, u64 n,
                                                   std::span<const double> thresholds,
                                                   unsigned workers = 1);

struct SumRecord {
  u64 modulus = 0;
  u64 length = 0;
  std::optional<i64> shift;          // k, for shifted-prime sums
  std::optional<u64> chi_index;      // argmax over nonprincipal chi
  double max_magnitude = 0.0;
  std::string reference;             // "trivial" or "vinogradov"
  double reference_value = 0.0;
  double ratio = 0.0;                // max_magnitude / reference_value
  double delta_eff = 0.0;            // -log_m(max_magnitude / terms)
  u64 terms = 0;                     // number of summands
};

// Max over nonprincipal chi of |sum_{x<=N} chi(x)| for each N in the grid,
// against the trivial bound N. Rows come out in ascending N.
std::vector<SumRecord> burgess_report(const CharacterGroup& group, std::span<const u64> n_grid,
                                      unsigned workers = 1);

// Max over nonprincipal chi of |sum_{p'<=N} chi(p'+k)| against p^{1/4} N^{2/3}.
// Throws PreconditionFailed unless the group modulus is prime.
std::vector<SumRecord> vinogradov_report(const CharacterGroup& group, const PrimeTable& primes,
                                         std::span<const u64> n_grid, i64 k,
                                         unsigned workers = 1);

}  // namespace cglab
