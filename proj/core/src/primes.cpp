#include "cglab/primes.hpp"

#include <algorithm>
#include <string>

#include "cglab/errors.hpp"

namespace cglab {

PrimeTable PrimeTable::sieve(u64 limit, const Budget& budget) {
  if (limit == 0) throw InvalidArgument("sieve limit must be positive");
  if (limit > budget.sieve_max_n) {
    throw BudgetExceeded("sieve limit " + std::to_string(limit) +
                         " exceeds sieve.max_n = " +
                         std::to_string(budget.sieve_max_n));
  }
  PrimeTable t;
  t.limit_ = limit;
  t.composite_.assign(limit + 1, 0);
  t.composite_[0] = 1;
  t.composite_[1] = 1;
  for (u64 i = 2; i <= limit / i; ++i) {
    if (t.composite_[i]) continue;
    for (u64 j = i * i; j <= limit; j += i) t.composite_[j] = 1;
  }
  for (u64 i = 2; i <= limit; ++i) {
    if (!t.composite_[i]) t.primes_.push_back(i);
  }
  return t;
}

u64 PrimeTable::count_upto(u64 x) const {
  return static_cast<u64>(
      std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

std::span<const u64> PrimeTable::primes_upto(u64 x) const {
  return std::span<const u64>(primes_).first(count_upto(x));
}

u64 prime_count(u64 n, const Budget& budget) {
  if (n < 2) return 0;
  return PrimeTable::sieve(n, budget).primes().size();
}

}  // namespace cglab
