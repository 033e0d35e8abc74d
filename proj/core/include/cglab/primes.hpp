#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cglab/budget.hpp"
#include "cglab/residue.hpp"

namespace cglab {

// Primes up to a limit, with a dense membership index. Immutable.
class PrimeTable {
 public:
  // Eratosthenes sieve. Throws BudgetExceeded when limit > budget.sieve_max_n
  // and InvalidArgument when limit == 0.
  static PrimeTable sieve(u64 limit, const Budget& budget = {});

  u64 limit() const { return limit_; }
  std::span<const u64> primes() const { return primes_; }
  bool contains(u64 n) const { return n <= limit_ && composite_[n] == 0; }
  // pi(x) for x <= limit (clamped otherwise).
  u64 count_upto(u64 x) const;
  // Primes <= x.
  std::span<const u64> primes_upto(u64 x) const;

 private:
  u64 limit_ = 0;
  std::vector<u64> primes_;
  std::vector<std::uint8_t> composite_;
};

// pi(N); sieves internally.
u64 prime_count(u64 n, const Budget& budget = {});

}  // namespace cglab
