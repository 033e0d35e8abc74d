#include "cglab/residue.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cglab/errors.hpp"

namespace cglab {

u64 PrimePower::value() const {
  u64 v = 1;
  for (int i = 0; i < exponent; ++i) v *= prime;
  return v;
}

u64 reduce(i64 a, u64 m) {
  if (a >= 0) return static_cast<u64>(a) % m;
  // Magnitude of a negative i64 fits in u64 even for INT64_MIN.
  const u64 mag = static_cast<u64>(-(a + 1)) + 1;
  const u64 r = mag % m;
  return r == 0 ? 0 : m - r;
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::vector<PrimePower> factorize(u64 n) {
  std::vector<PrimePower> out;
  if (n <= 1) return out;
  auto strip = [&](u64 p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (u64 p = 5; p <= n / p; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (u64 p = 5; p <= n / p; p += 6) {
    if (n % p == 0 || n % (p + 2) == 0) return false;
  }
  return true;
}

u64 totient(const std::vector<PrimePower>& factorization) {
  u64 phi = 1;
  for (const auto& pp : factorization) {
    phi *= pp.value() / pp.prime * (pp.prime - 1);
  }
  return phi;
}

Modulus Modulus::build(u64 m) {
  if (m == 0) throw InvalidArgument("modulus must be positive");
  Modulus out;
  out.value_ = m;
  out.factors_ = factorize(m);
  out.phi_ = totient(out.factors_);
  out.is_prime_ = out.factors_.size() == 1 && out.factors_[0].exponent == 1;
  out.is_cubefree_ = std::all_of(out.factors_.begin(), out.factors_.end(),
                                 [](const PrimePower& pp) { return pp.exponent <= 2; });
  return out;
}

bool Modulus::is_unit(i64 a) const {
  return std::gcd(reduce(a), value_) == 1;
}

u64 mod_inverse(i64 a, const Modulus& m) {
  const u64 n = m.value();
  const u64 r = m.reduce(a);
  if (std::gcd(r, n) != 1) {
    throw NonInvertible(std::to_string(a) + " is not invertible modulo " +
                        std::to_string(n));
  }
  if (n == 1) return 0;
  // Extended Euclid on signed 128-bit to avoid overflow near 2^63.
  __int128 old_r = r, cur_r = n;
  __int128 old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    const __int128 q = old_r / cur_r;
    std::swap(old_r, cur_r);
    cur_r -= q * old_r;
    std::swap(old_s, cur_s);
    cur_s -= q * old_s;
  }
  __int128 inv = old_s % static_cast<__int128>(n);
  if (inv < 0) inv += n;
  return static_cast<u64>(inv);
}

std::vector<u64> divisors(u64 x) {
  if (x == 0) throw InvalidArgument("divisors of 0 are undefined");
  std::vector<u64> out{1};
  for (const auto& pp : factorize(x)) {
    const std::size_t base = out.size();
    u64 power = 1;
    for (int e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 divisor_count(u64 x) {
  if (x == 0) throw InvalidArgument("divisors of 0 are undefined");
  u64 count = 1;
  for (const auto& pp : factorize(x)) count *= static_cast<u64>(pp.exponent + 1);
  return count;
}

std::vector<u64> inverse_table(u64 prime) {
  std::vector<u64> inv(prime, 0);
  if (prime < 2) return inv;
  inv[1] = 1;
  for (u64 i = 2; i < prime; ++i) {
    inv[i] = mul_mod(prime - prime / i, inv[prime % i], prime);
  }
  return inv;
}

u64 ceil_power(u64 m, double e) {
  const double approx = std::pow(static_cast<double>(m), e);
  auto n = static_cast<u64>(std::ceil(approx));
  // Snap to an integer when approx is within round-off of one.
  const double nearest = std::round(approx);
  if (std::abs(approx - nearest) <= 1e-9 * std::max(1.0, nearest)) {
    n = static_cast<u64>(nearest);
  }
  return std::max<u64>(n, 1);
}

}  // namespace cglab
