#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "cglab/budget.hpp"
#include "cglab/residue.hpp"

namespace cglab {

// Dense bitset over Z_m.
class ResidueSet {
 public:
  explicit ResidueSet(const Modulus& m);
  static ResidueSet from_residues(const Modulus& m, std::span<const i64> residues);
  static ResidueSet units(const Modulus& m);

  const Modulus& modulus() const { return modulus_; }
  bool contains(u64 r) const { return r < modulus_.value() && (words_[r >> 6] >> (r & 63)) & 1; }
  void insert(i64 r);
  bool full() const { return covered_total() == modulus_.value(); }

  u64 covered_total() const;
  u64 covered_units() const;
  // phi(m) - covered_units().
  u64 missing_units() const;

  std::vector<u64> members() const;
  std::vector<u64> missing() const;

  friend bool operator==(const ResidueSet& a, const ResidueSet& b) {
    return a.modulus_ == b.modulus_ && a.words_ == b.words_;
  }

 private:
  void set(u64 r) { words_[r >> 6] |= u64{1} << (r & 63); }

  Modulus modulus_;
  std::vector<u64> words_;

  friend ResidueSet product_set(const Modulus&, std::span<const u64>, const Budget&);
  friend ResidueSet set_product(const ResidueSet&, const ResidueSet&);
};

// {x1 * ... * xk mod m : 1 <= xj <= Nj}. Throws InvalidArgument for an empty
// or zero bound list and BudgetExceeded when m * sum(min(Nj, m)) exceeds
// budget.sweep_cap.
ResidueSet product_set(const Modulus& m, std::span<const u64> bounds, const Budget& budget = {});

// Missing residues keyed by gcd(r, m); every divisor of m has an entry.
std::map<u64, std::vector<u64>> missing_by_gcd(const ResidueSet& set);

// m = q*n. True iff none of q, 2q, ..., nq (mod m) lies in the product set
// with bounds [B, B, B]. Throws PreconditionFailed unless q is prime, q > B
// and B^3 < m.
bool verify_counterexample(u64 q, u64 n, u64 bound, const Budget& budget = {});

// {a*b mod m : a in A, b in B}. Throws ModulusMismatch.
ResidueSet set_product(const ResidueSet& a, const ResidueSet& b);

struct CollisionReport {
  u64 modulus = 0;
  std::vector<u64> bounds;
  u64 tuples = 0;      // N1*N2*N3
  u64 collisions = 0;  // I = sum_a c_a^2
  double ratio = 0.0;  // I*m / (N1 N2 N3)^2
};

// Number of pairs of tuples with x1 x2 x3 = y1 y2 y3 (mod m), xj, yj in
// [1, Nj]. Any number of factors is accepted. Throws BudgetExceeded when the
// tuple count exceeds budget.enumeration_cap.
CollisionReport collision_count(const Modulus& m, std::span<const u64> bounds,
                                const Budget& budget = {});

struct CoverageReport {
  u64 modulus = 0;
  unsigned factors = 0;  // k
  double epsilon = 0.0;
  std::vector<u64> bounds;
  double exponent_sum = 0.0;  // log_m(N1 ... Nk)
  u64 covered_total = 0;
  u64 deficiency = 0;  // |H| = m - covered_total
  double deficiency_fraction = 0.0;
  u64 missing_units = 0;
  bool cubefree = false;
  std::map<u64, u64> missing_by_gcd;  // d -> |H_d|
};

CoverageReport coverage_report(const Modulus& m, std::span<const u64> bounds,
                               const Budget& budget = {});

// Bounds Nj = ceil(m^{(1+epsilon)/k}) for every j. k must be 3 or 4; for
// k = 4 non-cubefree moduli are skipped. Rows are sorted by m.
std::vector<CoverageReport> coverage_sweep(std::span<const u64> m_grid, double epsilon,
                                           unsigned k, const Budget& budget = {},
                                           unsigned workers = 1);

}  // namespace cglab
