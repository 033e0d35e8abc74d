#include "cglab/charsum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "cglab/errors.hpp"
#include "cglab/parallel.hpp"

namespace cglab {

namespace {

constexpr double kMagnitudeTol = 1e-9;
constexpr u64 kMaxRootTable = u64{1} << 24;

// Flattened discrete logs of a list of integers, for fast repeated sweeps
// over characters. Non-units are dropped.
class PhaseBasis {
 public:
  PhaseBasis(const CharacterGroup& group, std::span<const i64> values,
             std::span<const u64> positions = {})
      : group_(group), width_(group.components().size()), exponent_(group.exponent()) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      const auto d = group.dlogs(values[i]);
      if (!d) continue;
      dlogs_.insert(dlogs_.end(), d->begin(), d->end());
      if (!positions.empty()) positions_.push_back(positions[i]);
      ++count_;
    }
    if (exponent_ <= kMaxRootTable) {
      roots_.reserve(exponent_);
      for (u64 j = 0; j < exponent_; ++j) roots_.push_back(UnityValue::root(j, exponent_).render());
    }
  }

  std::size_t size() const { return count_; }
  std::span<const u64> positions() const { return positions_; }

  std::vector<u64> weights(u64 chi_index) const {
    const Character chi = group_.character(chi_index);
    std::vector<u64> w(width_);
    for (std::size_t i = 0; i < width_; ++i) {
      w[i] = chi.exponents()[i] * group_.phase_scale(i) % exponent_;
    }
    return w;
  }

  std::complex<double> term(const std::vector<u64>& w, std::size_t j) const {
    u64 phase = 0;
    const u64* d = dlogs_.data() + j * width_;
    for (std::size_t i = 0; i < width_; ++i) phase += w[i] * d[i] % exponent_;
    phase %= exponent_;
    if (!roots_.empty()) return roots_[phase];
    return UnityValue::root(phase, exponent_).render();
  }

  std::complex<double> sum(u64 chi_index) const {
    const auto w = weights(chi_index);
    std::complex<double> s = 0.0;
    for (std::size_t j = 0; j < count_; ++j) s += term(w, j);
    return s;
  }

 private:
  const CharacterGroup& group_;
  std::size_t width_;
  u64 exponent_;
  std::size_t count_ = 0;
  std::vector<u64> dlogs_;
  std::vector<u64> positions_;
  std::vector<std::complex<double>> roots_;
};

struct GridMax {
  double magnitude = 0.0;
  std::optional<u64> index;
};

// Keeps the first index reaching the maximum (ties within tolerance go to the
// smaller index).
void offer(GridMax& best, double mag, u64 index) {
  if (!best.index || mag > best.magnitude + kMagnitudeTol) {
    best.magnitude = mag;
    best.index = index;
  }
}

// For every grid point g, max over nonprincipal chi of |sum_{position<=g}|.
// Terms in the basis must be sorted by position.
std::vector<GridMax> prefix_scan_max(const CharacterGroup& group, const PhaseBasis& basis,
                                     std::span<const u64> grid, unsigned workers) {
  const u64 nchars = group.size();
  std::vector<std::vector<GridMax>> partial(std::max(1u, workers));
  const std::size_t chunk_count = partial.size();
  const u64 span_chars = nchars > 1 ? nchars - 1 : 0;
  const std::size_t per = (span_chars + chunk_count - 1) / std::max<std::size_t>(chunk_count, 1);
  parallel_chunks(chunk_count, workers, [&](std::size_t b, std::size_t e) {
    for (std::size_t c = b; c < e; ++c) {
      auto& best = partial[c];
      best.assign(grid.size(), GridMax{});
      const u64 lo = 1 + c * per;
      const u64 hi = std::min<u64>(nchars, lo + per);
      for (u64 idx = lo; idx < hi; ++idx) {
        const auto w = basis.weights(idx);
        std::complex<double> s = 0.0;
        std::size_t j = 0;
        for (std::size_t gi = 0; gi < grid.size(); ++gi) {
          while (j < basis.size() && basis.positions()[j] <= grid[gi]) s += basis.term(w, j++);
          offer(best[gi], std::abs(s), idx);
        }
      }
    }
  });
  std::vector<GridMax> out(grid.size());
  for (const auto& part : partial) {
    for (std::size_t gi = 0; gi < part.size(); ++gi) {
      if (part[gi].index) offer(out[gi], part[gi].magnitude, *part[gi].index);
    }
  }
  return out;
}

double safe_log(double x, double base) { return std::log(x) / std::log(base); }

}  // namespace

std::complex<double> interval_sum(const Character& chi, u64 n) {
  const u64 m = chi.modulus();
  const u64 periods = n / m;
  const u64 rest = n % m;
  std::complex<double> s = 0.0;
  if (periods > 0 && chi.is_principal()) {
    s += static_cast<double>(periods) * static_cast<double>(totient(factorize(m)));
  }
  for (u64 x = 1; x <= rest; ++x) s += evaluate(chi, static_cast<i64>(x)).render();
  return s;
}

std::complex<double> shifted_prime_sum(const Character& chi, const PrimeTable& primes, u64 n,
                                       i64 k) {
  if (n > primes.limit()) {
    throw InvalidArgument("prime table does not cover N = " + std::to_string(n));
  }
  std::complex<double> s = 0.0;
  for (u64 p : primes.primes_upto(n)) s += evaluate(chi, static_cast<i64>(p) + k).render();
  return s;
}

std::vector<std::complex<double>> character_sums(const CharacterGroup& group,
                                                 std::span<const i64> values, unsigned workers) {
  // Collapse multiplicities: sum_a c_a chi(a) over distinct unit residues.
  const Modulus& m = group.modulus();
  std::map<u64, u64> counts;
  for (i64 v : values) {
    if (m.is_unit(v)) ++counts[m.reduce(v)];
  }
  std::vector<i64> residues;
  std::vector<u64> weights;
  for (const auto& [r, c] : counts) {
    residues.push_back(static_cast<i64>(r));
    weights.push_back(c);
  }
  const PhaseBasis basis(group, residues);
  std::vector<std::complex<double>> out(group.size());
  parallel_chunks(out.size(), workers, [&](std::size_t b, std::size_t e) {
    for (std::size_t idx = b; idx < e; ++idx) {
      const auto w = basis.weights(idx);
      std::complex<double> s = 0.0;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        s += static_cast<double>(weights[j]) * basis.term(w, j);
      }
      out[idx] = s;
    }
  });
  return out;
}

MomentCheck moment_identity_check(const CharacterGroup& group, u64 range, unsigned half_power,
                                  const Budget& budget, unsigned workers) {
  if (range == 0 || half_power == 0) throw InvalidArgument("U and n must be positive");
  u128 tuples = 1;
  for (unsigned i = 0; i < half_power; ++i) {
    tuples *= range;
    if (tuples > budget.enumeration_cap || tuples > (u128{1} << 32)) {
      throw BudgetExceeded("U^n exceeds the enumeration cap");
    }
  }
  const Modulus& mod = group.modulus();
  const u64 m = mod.value();
  MomentCheck out;
  out.modulus = m;
  out.range = range;
  out.half_power = half_power;
  out.equation_applies = tuples <= m;

  std::vector<i64> units;
  for (u64 u = 1; u <= range; ++u) {
    if (mod.is_unit(static_cast<i64>(u))) units.push_back(static_cast<i64>(u));
  }

  const auto sums = character_sums(group, units, workers);
  double lhs = 0.0;
  for (const auto& s : sums) {
    const double r2 = std::norm(s);
    double p = 1.0;
    for (unsigned i = 0; i < half_power; ++i) p *= r2;
    lhs += p;
  }
  out.lhs = lhs / static_cast<double>(group.size());

  // Histogram of n-fold products modulo m.
  std::vector<u64> hist(m, 0);
  hist[1 % m] = 1;
  for (unsigned step = 0; step < half_power; ++step) {
    std::vector<u64> next(m, 0);
    for (u64 a = 0; a < m; ++a) {
      if (hist[a] == 0) continue;
      for (i64 u : units) next[mul_mod(a, static_cast<u64>(u) % m, m)] += hist[a];
    }
    hist.swap(next);
  }
  u128 cong = 0;
  for (u64 c : hist) cong += static_cast<u128>(c) * c;
  out.rhs_congruence = static_cast<u64>(cong);

  // Same over the integers.
  std::map<u64, u64> prod{{1, 1}};
  for (unsigned step = 0; step < half_power; ++step) {
    std::map<u64, u64> next;
    for (const auto& [v, c] : prod) {
      for (i64 u : units) next[v * static_cast<u64>(u)] += c;
    }
    prod.swap(next);
  }
  u128 eq = 0;
  for (const auto& [v, c] : prod) eq += static_cast<u128>(c) * c;
  out.rhs_equation = static_cast<u64>(eq);
  return out;
}

ParsevalCheck parseval_check(const CharacterGroup& group, std::span<const i64> values,
                             unsigned workers) {
  const Modulus& mod = group.modulus();
  ParsevalCheck out;
  for (const auto& s : character_sums(group, values, workers)) out.lhs += std::norm(s);
  std::map<u64, u64> counts;
  for (i64 v : values) {
    if (mod.is_unit(v)) ++counts[mod.reduce(v)];
  }
  u64 squares = 0;
  for (const auto& [r, c] : counts) squares += c * c;
  out.rhs = group.size() * squares;
  return out;
}

double huxley_curve(u64 modulus, u64 length, double threshold) {
  if (threshold <= 0.0) return std::numeric_limits<double>::infinity();
  const double n = static_cast<double>(length);
  const double v2 = threshold * threshold;
  return n * n / v2 + static_cast<double>(modulus) * n * n * n * n / (v2 * v2 * v2);
}

LevelCensus large_value_census(const CharacterGroup& group, std::span<const i64> support,
                               u64 length, std::span<const double> thresholds, unsigned workers) {
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (thresholds[i] < 0.0 || (i > 0 && thresholds[i] < thresholds[i - 1])) {
      throw InvalidArgument("thresholds must be nonnegative and ascending");
    }
  }
  LevelCensus out;
  out.modulus = group.modulus().value();
  out.length = length;
  out.thresholds.assign(thresholds.begin(), thresholds.end());
  const auto sums = character_sums(group, support, workers);
  std::vector<double> mags;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    out.parseval_total += std::norm(sums[i]);
    if (i > 0) mags.push_back(std::abs(sums[i]));
  }
  std::sort(mags.begin(), mags.end());
  for (double v : thresholds) {
    const double cut = v - kMagnitudeTol * std::max(1.0, v);
    const auto first = std::lower_bound(mags.begin(), mags.end(), cut);
    out.counts.push_back(static_cast<u64>(mags.end() - first));
    out.huxley_rhs.push_back(huxley_curve(out.modulus, length, v));
  }
  return out;
}

std::vector<std::pair<u64, u64>> dyadic_blocks(u64 lo, u64 hi) {
  if (lo == 0) throw InvalidArgument("dyadic blocks need lo >= 1");
  std::vector<std::pair<u64, u64>> out;
  for (u64 a = lo; a < hi; a *= 2) out.emplace_back(a, std::min(hi, 2 * a));
  return out;
}

std::vector<LevelCensus> large_value_census_dyadic(const CharacterGroup& group,
                                                   std::span<const i64> support, u64 n,
                                                   std::span<const double> thresholds,
                                                   unsigned workers) {
  std::vector<LevelCensus> out;
  for (const auto& [a, b] : dyadic_blocks(1, n)) {
    std::vector<i64> block;
    for (i64 s : support) {
      if (s > static_cast<i64>(a) && s <= static_cast<i64>(b)) block.push_back(s);
    }
    auto census = large_value_census(group, block, a, thresholds, workers);
    census.block_lo = a;
    census.block_hi = b;
    out.push_back(std::move(census));
  }
  return out;
}

std::vector<SumRecord> burgess_report(const CharacterGroup& group, std::span<const u64> n_grid,
                                      unsigned workers) {
  std::vector<u64> grid(n_grid.begin(), n_grid.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  const u64 m = group.modulus().value();
  const u64 top = grid.empty() ? 0 : grid.back();
  std::vector<i64> values;
  std::vector<u64> positions;
  for (u64 x = 1; x <= top; ++x) {
    values.push_back(static_cast<i64>(x));
    positions.push_back(x);
  }
  const PhaseBasis basis(group, values, positions);
  const auto best = prefix_scan_max(group, basis, grid, workers);
  std::vector<SumRecord> out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    SumRecord r;
    r.modulus = m;
    r.length = grid[i];
    r.chi_index = best[i].index;
    r.max_magnitude = best[i].magnitude;
    r.reference = "trivial";
    r.reference_value = static_cast<double>(grid[i]);
    r.terms = grid[i];
    r.ratio = r.reference_value > 0 ? r.max_magnitude / r.reference_value : 0.0;
    r.delta_eff = -safe_log(r.ratio, static_cast<double>(m));
    out.push_back(r);
  }
  return out;
}

std::vector<SumRecord> vinogradov_report(const CharacterGroup& group, const PrimeTable& primes,
                                         std::span<const u64> n_grid, i64 k, unsigned workers) {
  if (!group.modulus().is_prime()) throw PreconditionFailed("vinogradov_report needs a prime modulus");
  std::vector<u64> grid(n_grid.begin(), n_grid.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  const u64 p = group.modulus().value();
  const u64 top = grid.empty() ? 0 : grid.back();
  if (top > primes.limit()) throw InvalidArgument("prime table does not cover the N grid");
  std::vector<i64> values;
  std::vector<u64> positions;
  for (u64 q : primes.primes_upto(top)) {
    values.push_back(static_cast<i64>(q) + k);
    positions.push_back(q);
  }
  const PhaseBasis basis(group, values, positions);
  const auto best = prefix_scan_max(group, basis, grid, workers);
  std::vector<SumRecord> out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    SumRecord r;
    r.modulus = p;
    r.length = grid[i];
    r.shift = k;
    r.chi_index = best[i].index;
    r.max_magnitude = best[i].magnitude;
    r.reference = "vinogradov";
    r.reference_value = std::pow(static_cast<double>(p), 0.25) *
                        std::pow(static_cast<double>(grid[i]), 2.0 / 3.0);
    r.terms = primes.count_upto(grid[i]);
    r.ratio = r.max_magnitude / r.reference_value;
    r.delta_eff = r.terms > 0 ? -safe_log(r.max_magnitude / static_cast<double>(r.terms),
                                          static_cast<double>(p))
                              : 0.0;
    out.push_back(r);
  }
  return out;
}

}  // namespace cglab
