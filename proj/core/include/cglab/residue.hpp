#pragma once

#include <cstdint>
#include <vector>

namespace cglab {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

struct PrimePower {
  u64 prime = 0;
  int exponent = 0;

  u64 value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Residue of a (any sign) in [0, m).
u64 reduce(i64 a, u64 m);

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

// Trial division; intended for n up to ~10^12.
std::vector<PrimePower> factorize(u64 n);

// Deterministic trial-division primality test.
bool is_prime(u64 n);

// Euler's totient from a factorization.
u64 totient(const std::vector<PrimePower>& factorization);

// A positive modulus together with its factorization and derived flags.
// Immutable after construction.
class Modulus {
 public:
  // Throws InvalidArgument for m == 0.
  static Modulus build(u64 m);

  u64 value() const { return value_; }
  const std::vector<PrimePower>& factorization() const { return factors_; }
  u64 phi() const { return phi_; }
  bool is_prime() const { return is_prime_; }
  bool is_cubefree() const { return is_cubefree_; }

  bool is_unit(i64 a) const;
  u64 reduce(i64 a) const { return cglab::reduce(a, value_); }

  friend bool operator==(const Modulus& a, const Modulus& b) {
    return a.value_ == b.value_;
  }

 private:
  Modulus() = default;

  u64 value_ = 1;
  std::vector<PrimePower> factors_;
  u64 phi_ = 1;
  bool is_prime_ = false;
  bool is_cubefree_ = true;
};

// Returns b in [1, m-1] with a*b = 1 (mod m); returns 0 when m == 1.
// Throws NonInvertible when gcd(a, m) > 1.
u64 mod_inverse(i64 a, const Modulus& m);

// Sorted list of positive divisors. Throws InvalidArgument for x == 0.
std::vector<u64> divisors(u64 x);
u64 divisor_count(u64 x);

// Table of inverses of 1..m-1 modulo a prime m; entry 0 is 0.
std::vector<u64> inverse_table(u64 prime);

// ceil(m^e) as an integer, guarded against floating round-off at exact
// integer powers.
u64 ceil_power(u64 m, double e);

}  // namespace cglab
