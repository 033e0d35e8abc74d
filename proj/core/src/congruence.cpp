#include "cglab/congruence.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <string>

#include "cglab/charsum.hpp"
#include "cglab/errors.hpp"

namespace cglab {

void CongruenceInstance::validate() const {
  if (!is_prime(p)) throw PreconditionFailed("p = " + std::to_string(p) + " is not prime");
  if (n < 1 || n >= p) throw PreconditionFailed("N must satisfy 1 <= N < p");
  if (k == 0) throw PreconditionFailed("k must be nonzero");
  if (reduce(lambda, p) == 0) throw PreconditionFailed("lambda must be coprime to p");
}

u64 count_J(const CongruenceInstance& inst, const PrimeTable& primes, const Budget& budget,
            PairOrder order) {
  inst.validate();
  if (inst.n > primes.limit()) throw InvalidArgument("prime table does not cover N");
  const auto ps = primes.primes_upto(inst.n);
  const u128 pairs = static_cast<u128>(ps.size()) * ps.size();
  if (pairs > budget.enumeration_cap) throw BudgetExceeded("pi(N)^2 exceeds the enumeration cap");
  if (inst.p > budget.max_modulus) throw BudgetExceeded("p exceeds max_modulus");

  const u64 p = inst.p;
  const u64 lambda = inst.lambda_residue();
  const u64 shift = reduce(inst.k, p);
  const auto inv = inverse_table(p);
  std::vector<u64> table(p, 0);
  for (u64 q : ps) ++table[q % p];

  u64 j = 0;
  if (order == PairOrder::kFirstThird) {
    for (u64 p1 : ps) {
      for (u64 p3 : ps) {
        const u64 f = mul_mod(p1 % p, (p3 + shift) % p, p);
        if (f == 0) continue;
        j += table[mul_mod(lambda, inv[f], p)];
      }
    }
  } else {
    for (u64 p1 : ps) {
      for (u64 p2 : ps) {
        const u64 f = mul_mod(p1 % p, p2 % p, p);
        if (f == 0) continue;
        const u64 target = (mul_mod(lambda, inv[f], p) + p - shift) % p;
        j += table[target];
      }
    }
  }
  return j;
}

std::complex<double> decompose_J(const CongruenceInstance& inst, const CharacterGroup& group,
                                 const PrimeTable& primes, unsigned workers) {
  inst.validate();
  if (group.modulus().value() != inst.p) throw ModulusMismatch("character group modulus differs from p");
  if (inst.n > primes.limit()) throw InvalidArgument("prime table does not cover N");
  std::vector<i64> plain, shifted;
  for (u64 q : primes.primes_upto(inst.n)) {
    plain.push_back(static_cast<i64>(q));
    shifted.push_back(static_cast<i64>(q) + inst.k);
  }
  const auto s = character_sums(group, plain, workers);
  const auto t = character_sums(group, shifted, workers);
  std::complex<double> total = 0.0;
  for (u64 i = 0; i < group.size(); ++i) {
    const auto chi_lambda = evaluate(group.character(i), inst.lambda).conj().render();
    total += s[i] * s[i] * t[i] * chi_lambda;
  }
  return total / static_cast<double>(group.size());
}

double principal_term(const CongruenceInstance& inst, const PrimeTable& primes) {
  const auto ps = primes.primes_upto(inst.n);
  double coprime = 0.0, shifted = 0.0;
  for (u64 q : ps) {
    if (q % inst.p != 0) coprime += 1.0;
    if (reduce(static_cast<i64>(q) + inst.k, inst.p) != 0) shifted += 1.0;
  }
  return coprime * coprime * shifted / static_cast<double>(inst.p - 1);
}

JReport j_report(const CongruenceInstance& inst, const PrimeTable& primes, double epsilon,
                 const Budget& budget) {
  const auto start = std::chrono::steady_clock::now();
  JReport r;
  r.instance = inst;
  r.j = count_J(inst, primes, budget);
  r.prime_count = primes.count_upto(inst.n);
  const double pi = static_cast<double>(r.prime_count);
  r.main_term = pi * pi * pi / static_cast<double>(inst.p);
  r.ratio = r.prime_count > 0 ? static_cast<double>(r.j) / r.main_term : 0.0;
  r.threshold_ok = std::log(static_cast<double>(inst.n)) >
                   (63.0 / 76.0 + epsilon) * std::log(static_cast<double>(inst.p));
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

NRule exponent_rule(double e) {
  return [e](u64 p) { return std::min(ceil_power(p, e), p - 1); };
}

LambdaRule random_units_rule(unsigned count, std::uint64_t seed) {
  return [count, seed](u64 p) {
    // Seed mixes in p so each modulus gets its own stream.
    std::mt19937_64 rng(seed ^ (p * 0x9E3779B97F4A7C15ull));
    std::vector<i64> out;
    std::set<u64> seen;
    const u64 want = std::min<u64>(count, p - 1);
    // Rejection sampling keeps the stream independent of the standard
    // library's distribution implementation.
    const u64 span = p - 1;
    const u64 limit = UINT64_MAX - UINT64_MAX % span;
    while (out.size() < want) {
      const u64 draw = rng();
      if (draw >= limit) continue;
      const u64 v = 1 + draw % span;
      if (seen.insert(v).second) out.push_back(static_cast<i64>(v));
    }
    return out;
  };
}

std::vector<JReport> j_sweep(std::span<const u64> p_grid, const NRule& n_rule, i64 k,
                             const LambdaRule& lambda_rule, double epsilon, const Budget& budget) {
  std::vector<u64> grid(p_grid.begin(), p_grid.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<JReport> out;
  for (u64 p : grid) {
    const u64 n = n_rule(p);
    const PrimeTable primes = PrimeTable::sieve(std::max<u64>(n, 1), budget);
    for (i64 lambda : lambda_rule(p)) {
      out.push_back(j_report({p, n, k, lambda}, primes, epsilon, budget));
    }
  }
  return out;
}

Rational theta(const Rational& alpha, const Rational& beta) {
  const Rational zero(0), one(1);
  if (alpha < zero || alpha >= one || beta < zero || beta >= one) {
    throw DomainError("theta requires 0 <= alpha < 1 and 0 <= beta < 1");
  }
  const Rational first = alpha / (one - beta);
  const Rational second = (Rational(5) + alpha) / (Rational(7) - beta);
  return std::max(first, second);
}

double theta(double alpha, double beta) {
  if (!(alpha >= 0.0 && alpha < 1.0 && beta >= 0.0 && beta < 1.0)) {
    throw DomainError("theta requires 0 <= alpha < 1 and 0 <= beta < 1");
  }
  return std::max(alpha / (1.0 - beta), (5.0 + alpha) / (7.0 - beta));
}

}  // namespace cglab
