#pragma once

#include <cstdint>

namespace cglab {

// Resource caps shared by the enumeration-heavy operations. The runner fills
// these from its config (keys under "budgets"); library defaults are sized
// for a desktop machine.
struct Budget {
  // Largest N accepted by the prime sieve (config key sieve.max_n).
  std::uint64_t sieve_max_n = 200'000'000;
  // Cap on raw enumeration counts: N1*N2*N3 for collision counts, U^n for
  // moment checks, pi(N)^2 for J counting.
  std::uint64_t enumeration_cap = 2'000'000'000;
  // Cap on m * (N1 + ... + Nk) for product-set construction.
  std::uint64_t sweep_cap = 1'000'000'000;
  // Largest modulus for which dense per-residue tables are built.
  std::uint64_t max_modulus = 100'000'000;
};

}  // namespace cglab
