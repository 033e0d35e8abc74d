#include "cglab/coverage.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "cglab/errors.hpp"
#include "cglab/parallel.hpp"

namespace cglab {

ResidueSet::ResidueSet(const Modulus& m) : modulus_(m), words_((m.value() + 63) / 64, 0) {}

ResidueSet ResidueSet::from_residues(const Modulus& m, std::span<const i64> residues) {
  ResidueSet s(m);
  for (i64 r : residues) s.insert(r);
  return s;
}

ResidueSet ResidueSet::units(const Modulus& m) {
  ResidueSet s(m);
  for (u64 r = 0; r < m.value(); ++r) {
    if (std::gcd(r, m.value()) == 1) s.set(r);
  }
  return s;
}

void ResidueSet::insert(i64 r) { set(modulus_.reduce(r)); }

u64 ResidueSet::covered_total() const {
  u64 total = 0;
  for (u64 w : words_) total += static_cast<u64>(std::popcount(w));
  return total;
}

u64 ResidueSet::covered_units() const {
  u64 total = 0;
  const u64 m = modulus_.value();
  for (u64 r = 0; r < m; ++r) {
    if (contains(r) && std::gcd(r, m) == 1) ++total;
  }
  return total;
}

u64 ResidueSet::missing_units() const { return modulus_.phi() - covered_units(); }

std::vector<u64> ResidueSet::members() const {
  std::vector<u64> out;
  for (u64 r = 0; r < modulus_.value(); ++r) {
    if (contains(r)) out.push_back(r);
  }
  return out;
}

std::vector<u64> ResidueSet::missing() const {
  std::vector<u64> out;
  for (u64 r = 0; r < modulus_.value(); ++r) {
    if (!contains(r)) out.push_back(r);
  }
  return out;
}

ResidueSet product_set(const Modulus& m, std::span<const u64> bounds, const Budget& budget) {
  if (bounds.empty()) throw InvalidArgument("product_set needs at least one bound");
  const u64 mod = m.value();
  if (mod > budget.max_modulus) throw BudgetExceeded("modulus exceeds max_modulus");
  u128 work = 0;
  for (u64 n : bounds) {
    if (n == 0) throw InvalidArgument("bounds must be positive");
    work += static_cast<u128>(mod) * std::min(n, mod);
  }
  // One factor running through a full period already reaches every residue.
  if (std::any_of(bounds.begin(), bounds.end(), [&](u64 n) { return n >= mod; })) {
    ResidueSet all(m);
    for (u64 r = 0; r < mod; ++r) all.set(r);
    return all;
  }
  if (work > budget.sweep_cap) {
    throw BudgetExceeded("m * sum(Nj) exceeds sweep_cap for m = " + std::to_string(mod));
  }

  ResidueSet cur(m);
  for (u64 x = 1; x <= std::min(bounds[0], mod); ++x) cur.set(x % mod);
  for (std::size_t j = 1; j < bounds.size() && !cur.full(); ++j) {
    const u64 top = std::min(bounds[j], mod);
    ResidueSet next(m);
    for (u64 s : cur.members()) {
      u64 prod = 0;
      for (u64 x = 1; x <= top; ++x) {
        prod += s;
        if (prod >= mod) prod -= mod;
        next.set(prod);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::map<u64, std::vector<u64>> missing_by_gcd(const ResidueSet& set) {
  const u64 m = set.modulus().value();
  std::map<u64, std::vector<u64>> out;
  for (u64 d : divisors(m)) out[d];
  for (u64 r : set.missing()) out[std::gcd(r, m)].push_back(r);
  return out;
}

bool verify_counterexample(u64 q, u64 n, u64 bound, const Budget& budget) {
  if (n == 0 || bound == 0) throw PreconditionFailed("n and B must be positive");
  if (!is_prime(q)) throw PreconditionFailed("q = " + std::to_string(q) + " is not prime");
  if (q <= bound) throw PreconditionFailed("q must exceed B");
  const u128 m = static_cast<u128>(q) * n;
  if (static_cast<u128>(bound) * bound * bound >= m) throw PreconditionFailed("B^3 must be below m");
  const Modulus mod = Modulus::build(static_cast<u64>(m));
  const u64 bounds[3] = {bound, bound, bound};
  const ResidueSet set = product_set(mod, bounds, budget);
  for (u64 j = 1; j <= n; ++j) {
    if (set.contains(mod.reduce(static_cast<i64>(j * q)))) return false;
  }
  return true;
}

ResidueSet set_product(const ResidueSet& a, const ResidueSet& b) {
  if (!(a.modulus() == b.modulus())) throw ModulusMismatch("set_product: moduli differ");
  const u64 m = a.modulus().value();
  ResidueSet out(a.modulus());
  const auto bm = b.members();
  for (u64 x : a.members()) {
    for (u64 y : bm) out.set(mul_mod(x, y, m));
  }
  return out;
}

CollisionReport collision_count(const Modulus& m, std::span<const u64> bounds,
                                const Budget& budget) {
  if (bounds.empty()) throw InvalidArgument("collision_count needs at least one bound");
  const u64 mod = m.value();
  u128 tuples = 1;
  for (u64 n : bounds) {
    if (n == 0) throw InvalidArgument("bounds must be positive");
    tuples *= n;
    if (tuples > budget.enumeration_cap || tuples > (u128{1} << 32)) {
      throw BudgetExceeded("N1*...*Nk exceeds the enumeration cap");
    }
  }
  if (mod > budget.max_modulus) throw BudgetExceeded("modulus exceeds max_modulus");

  // c_a by iterated convolution with the interval indicator.
  std::vector<u64> hist(mod, 0);
  hist[1 % mod] = 1;
  for (u64 n : bounds) {
    std::vector<u64> next(mod, 0);
    for (u64 a = 0; a < mod; ++a) {
      if (hist[a] == 0) continue;
      u64 prod = 0;
      for (u64 x = 1; x <= n; ++x) {
        prod += a;
        if (prod >= mod) prod -= mod;
        next[prod] += hist[a];
      }
    }
    hist.swap(next);
  }
  CollisionReport out;
  out.modulus = mod;
  out.bounds.assign(bounds.begin(), bounds.end());
  out.tuples = static_cast<u64>(tuples);
  u128 total = 0;
  for (u64 c : hist) total += static_cast<u128>(c) * c;
  out.collisions = static_cast<u64>(total);
  const double t = static_cast<double>(out.tuples);
  out.ratio = static_cast<double>(out.collisions) * static_cast<double>(mod) / (t * t);
  return out;
}

CoverageReport coverage_report(const Modulus& m, std::span<const u64> bounds,
                               const Budget& budget) {
  const ResidueSet set = product_set(m, bounds, budget);
  CoverageReport r;
  r.modulus = m.value();
  r.factors = static_cast<unsigned>(bounds.size());
  r.bounds.assign(bounds.begin(), bounds.end());
  if (m.value() > 1) {
    for (u64 n : bounds) r.exponent_sum += std::log(static_cast<double>(n));
    r.exponent_sum /= std::log(static_cast<double>(m.value()));
  }
  r.covered_total = set.covered_total();
  r.deficiency = m.value() - r.covered_total;
  r.deficiency_fraction = static_cast<double>(r.deficiency) / static_cast<double>(m.value());
  r.missing_units = set.missing_units();
  r.cubefree = m.is_cubefree();
  for (const auto& [d, members] : missing_by_gcd(set)) r.missing_by_gcd[d] = members.size();
  return r;
}

std::vector<CoverageReport> coverage_sweep(std::span<const u64> m_grid, double epsilon,
                                           unsigned k, const Budget& budget, unsigned workers) {
  if (k != 3 && k != 4) throw InvalidArgument("coverage_sweep supports k = 3 or 4");
  std::vector<u64> grid(m_grid.begin(), m_grid.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<Modulus> moduli;
  for (u64 m : grid) {
    Modulus mod = Modulus::build(m);
    if (k == 4 && !mod.is_cubefree()) continue;
    moduli.push_back(std::move(mod));
  }
  std::vector<CoverageReport> out(moduli.size());
  parallel_chunks(moduli.size(), workers, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const u64 n = ceil_power(moduli[i].value(), (1.0 + epsilon) / k);
      const std::vector<u64> bounds(k, n);
      out[i] = coverage_report(moduli[i], bounds, budget);
      out[i].epsilon = epsilon;
    }
  });
  return out;
}

}  // namespace cglab
