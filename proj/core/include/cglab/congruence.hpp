#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cglab/budget.hpp"
#include "cglab/characters.hpp"
#include "cglab/primes.hpp"
#include "cglab/rational.hpp"

namespace cglab {

// p1 p2 (p3 + k) = lambda (mod p) over primes p1, p2, p3 <= N.
struct CongruenceInstance {
  u64 p = 0;
  u64 n = 0;
  i64 k = 0;
  i64 lambda = 0;

  // Throws PreconditionFailed unless p is prime, 1 <= N < p, k != 0 and
  // lambda is not divisible by p.
  void validate() const;
  u64 lambda_residue() const { return reduce(lambda, p); }
};

// Which pair of variables count_J enumerates; the third is looked up in a
// residue multiplicity table.
enum class PairOrder {
  kFirstThird,   // (p1, p3) -> p2 = lambda / (p1 (p3 + k))
  kFirstSecond,  // (p1, p2) -> p3 = lambda / (p1 p2) - k
};

// Exact J. The table must cover N. Throws BudgetExceeded when pi(N)^2 exceeds
// budget.enumeration_cap.
u64 count_J(const CongruenceInstance& inst, const PrimeTable& primes, const Budget& budget = {},
            PairOrder order = PairOrder::kFirstThird);

// (1/phi(p)) sum_chi S(chi)^2 T(chi) conj(chi(lambda)), with S the sum over
// primes <= N and T the sum over shifted primes. Equals J.
std::complex<double> decompose_J(const CongruenceInstance& inst, const CharacterGroup& group,
                                 const PrimeTable& primes, unsigned workers = 1);

// The principal-character term of decompose_J alone.
double principal_term(const CongruenceInstance& inst, const PrimeTable& primes);

struct JReport {
  CongruenceInstance instance;
  u64 prime_count = 0;  // pi(N)
  u64 j = 0;
  double main_term = 0.0;  // pi(N)^3 / p
  double ratio = 0.0;      // J p / pi(N)^3
  bool threshold_ok = false;  // N > p^{63/76 + epsilon}
  double runtime_ms = 0.0;
};

JReport j_report(const CongruenceInstance& inst, const PrimeTable& primes, double epsilon,
                 const Budget& budget = {});

using NRule = std::function<u64(u64 p)>;
using LambdaRule = std::function<std::vector<i64>(u64 p)>;

// N = ceil(p^e), capped at p - 1.
NRule exponent_rule(double e);
// count distinct nonzero residues mod p drawn from a seeded mt19937_64.
LambdaRule random_units_rule(unsigned count, std::uint64_t seed);

std::vector<JReport> j_sweep(std::span<const u64> p_grid, const NRule& n_rule, i64 k,
                             const LambdaRule& lambda_rule, double epsilon,
                             const Budget& budget = {});

// max{alpha / (1 - beta), (5 + alpha) / (7 - beta)}. Throws DomainError
// unless 0 <= alpha < 1 and 0 <= beta < 1.
Rational theta(const Rational& alpha, const Rational& beta);
double theta(double alpha, double beta);

// The exponent pair behind the shifted-prime bound, (1/4, 2/3).
inline Rational theta_default() { return theta(Rational(1, 4), Rational(2, 3)); }

}  // namespace cglab
