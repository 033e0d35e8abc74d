#include "runner/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "cglab/characters.hpp"
#include "cglab/charsum.hpp"
#include "cglab/congruence.hpp"
#include "cglab/coverage.hpp"
#include "cglab/errors.hpp"
#include "cglab/primes.hpp"

namespace cglab::runner {

namespace {

using Clock = std::chrono::steady_clock;

std::string str(u64 v) { return std::to_string(v); }
std::string str(i64 v) { return std::to_string(v); }
std::string str(unsigned v) { return std::to_string(v); }
std::string str(double v) { return format_double(v); }

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Runs one grid row, turning library errors into a row-level error entry.
void guarded(Table& table, std::ostream& log, const std::string& key,
             const std::function<void()>& body) {
  const auto start = Clock::now();
  try {
    body();
    log << "[" << table.name << "] " << key << " done in " << std::fixed << std::setprecision(2)
        << elapsed_ms(start) << " ms\n";
  } catch (const cglab::Error& e) {
    table.errors.push_back({key, e.what()});
    log << "[" << table.name << "] " << key << " error: " << e.what() << "\n";
  }
  log.unsetf(std::ios::floatfield);
}

std::vector<u64> sorted_unique(std::vector<u64> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

u64 floor_root(u64 m, unsigned n) {
  auto pow_le = [&](u64 base) {
    u128 acc = 1;
    for (unsigned i = 0; i < n; ++i) {
      acc *= base;
      if (acc > m) return false;
    }
    return true;
  };
  auto r = static_cast<u64>(std::floor(std::pow(static_cast<double>(m), 1.0 / n)));
  while (r > 1 && !pow_le(r)) --r;
  while (pow_le(r + 1)) ++r;
  return std::max<u64>(r, 1);
}

// Draws in [1, max_value] by rejection so the stream does not depend on the
// standard library's distribution implementation.
std::vector<i64> random_multiset(std::mt19937_64& rng, unsigned size, u64 max_value) {
  const u64 limit = UINT64_MAX - UINT64_MAX % max_value;
  std::vector<i64> out;
  while (out.size() < size) {
    const u64 draw = rng();
    if (draw >= limit) continue;
    out.push_back(static_cast<i64>(1 + draw % max_value));
  }
  return out;
}

std::string optional_index(const std::optional<u64>& v) { return v ? str(*v) : ""; }

std::vector<Table> coverage_suite(const ExperimentConfig& c, std::ostream& log) {
  const bool explicit_bounds = !c.coverage.bounds.empty();
  const unsigned k = explicit_bounds ? static_cast<unsigned>(c.coverage.bounds.size()) : c.coverage.k;
  Table t;
  t.name = "coverage";
  t.columns = {"m", "k", "epsilon"};
  for (unsigned j = 1; j <= k; ++j) t.columns.push_back("N" + std::to_string(j));
  for (const char* col : {"covered_total", "deficiency", "deficiency_fraction", "missing_units", "cubefree_flag"}) {
    t.columns.push_back(col);
  }
  Table gcd;
  gcd.name = "coverage_gcd";
  gcd.columns = {"m", "d", "missing"};

  for (u64 m : sorted_unique(c.coverage.m_grid)) {
    guarded(t, log, "m=" + str(m), [&] {
      const auto start = Clock::now();
      const Modulus mod = Modulus::build(m);
      if (!explicit_bounds && k == 4 && !mod.is_cubefree()) {
        log << "[coverage] m=" << m << " skipped (not cubefree)\n";
        return;
      }
      std::vector<u64> bounds = c.coverage.bounds;
      if (!explicit_bounds) bounds.assign(k, ceil_power(m, (1.0 + c.coverage.epsilon) / k));
      const CoverageReport r = coverage_report(mod, bounds, c.budget);
      std::vector<std::string> row = {str(m), str(k), explicit_bounds ? "" : str(c.coverage.epsilon)};
      for (u64 n : bounds) row.push_back(str(n));
      row.push_back(str(r.covered_total));
      row.push_back(str(r.deficiency));
      row.push_back(str(r.deficiency_fraction));
      row.push_back(str(r.missing_units));
      row.push_back(format_bool(r.cubefree));
      t.add_row(std::move(row), elapsed_ms(start));
      for (const auto& [d, count] : r.missing_by_gcd) {
        if (count > 0) gcd.add_row({str(m), str(d), str(count)});
      }
    });
  }
  return {t, gcd};
}

std::vector<Table> collisions_suite(const ExperimentConfig& c, std::ostream& log) {
  Table t;
  t.name = "collisions";
  t.columns = {"m", "bounds", "tuples", "I", "ratio", "quadruple_bound"};
  for (u64 m : sorted_unique(c.collisions.m_grid)) {
    for (const auto& bounds : c.collisions.bounds) {
      std::string label;
      for (std::size_t i = 0; i < bounds.size(); ++i) label += (i ? "x" : "") + str(bounds[i]);
      guarded(t, log, "m=" + str(m) + " bounds=" + label, [&] {
        const auto start = Clock::now();
        const CollisionReport r = collision_count(Modulus::build(m), bounds, c.budget);
        // Quadruple count 2 (N1 N2 N3)^2 / m from the collision argument.
        const double tuples = static_cast<double>(r.tuples);
        t.add_row({str(m), label, str(r.tuples), str(r.collisions), str(r.ratio),
                   str(2.0 * tuples * tuples / static_cast<double>(m))},
                  elapsed_ms(start));
      });
    }
  }
  return {t};
}

std::vector<Table> counterexample_suite(const ExperimentConfig& c, std::ostream& log) {
  Table t;
  t.name = "counterexample";
  t.columns = {"q", "n", "m", "B", "verified"};
  for (const auto& cs : c.counterexample.cases) {
    guarded(t, log, "q=" + str(cs.q) + " n=" + str(cs.n) + " B=" + str(cs.bound), [&] {
      const auto start = Clock::now();
      const bool ok = verify_counterexample(cs.q, cs.n, cs.bound, c.budget);
      t.add_row({str(cs.q), str(cs.n), str(cs.q * cs.n), str(cs.bound), format_bool(ok)},
                elapsed_ms(start));
    });
  }
  return {t};
}

std::vector<Table> charsum_suite(const ExperimentConfig& c, std::ostream& log) {
  Table burgess;
  burgess.name = "burgess";
  burgess.columns = {"m", "N", "chi_index_of_max", "max_magnitude", "reference_value", "ratio", "delta_eff"};
  for (u64 m : sorted_unique(c.charsum.burgess_m_grid)) {
    guarded(burgess, log, "m=" + str(m), [&] {
      const auto start = Clock::now();
      const auto group = build_group(Modulus::build(m), c.budget);
      const auto grid = c.charsum.burgess_n.resolve(m);
      const auto rows = burgess_report(group, grid, c.workers);
      const double per_row = elapsed_ms(start) / std::max<std::size_t>(1, rows.size());
      for (const auto& r : rows) {
        burgess.add_row({str(r.modulus), str(r.length), optional_index(r.chi_index), str(r.max_magnitude),
                         str(r.reference_value), str(r.ratio), str(r.delta_eff)},
                        per_row);
      }
    });
  }

  Table vin;
  vin.name = "vinogradov";
  vin.columns = {"m", "N", "k", "chi_index_of_max", "max_magnitude", "reference_value", "ratio", "delta_eff"};
  for (u64 p : sorted_unique(c.charsum.vinogradov_p_grid)) {
    guarded(vin, log, "p=" + str(p), [&] {
      const auto start = Clock::now();
      const Modulus mod = Modulus::build(p);
      if (!mod.is_prime()) throw PreconditionFailed("vinogradov p = " + str(p) + " is not prime");
      const auto group = build_group(mod, c.budget);
      std::vector<u64> grid;
      for (u64 n : c.charsum.vinogradov_n.resolve(p)) grid.push_back(std::min(n, p - 1));
      grid = sorted_unique(grid);
      const PrimeTable primes = PrimeTable::sieve(std::max<u64>(1, grid.empty() ? 1 : grid.back()), c.budget);
      const auto rows = vinogradov_report(group, primes, grid, c.charsum.k, c.workers);
      const double per_row = elapsed_ms(start) / std::max<std::size_t>(1, rows.size());
      for (const auto& r : rows) {
        vin.add_row({str(r.modulus), str(r.length), str(*r.shift), optional_index(r.chi_index),
                     str(r.max_magnitude), str(r.reference_value), str(r.ratio), str(r.delta_eff)},
                    per_row);
      }
    });
  }
  return {burgess, vin};
}

std::vector<Table> moments_suite(const ExperimentConfig& c, std::ostream& log) {
  Table t;
  t.name = "moments";
  t.columns = {"m", "U", "n", "lhs", "rhs_congruence", "rhs_equation", "identity_holds", "equation_applies"};
  for (u64 m : sorted_unique(c.moments.m_grid)) {
    guarded(t, log, "m=" + str(m), [&] {
    const auto group = build_group(Modulus::build(m), c.budget);
    for (unsigned n : c.moments.n_values) {
      std::vector<u64> us = c.moments.u_values;
      if (us.empty()) us.push_back(floor_root(m, n));
      for (u64 u : sorted_unique(us)) {
        guarded(t, log, "m=" + str(m) + " U=" + str(u) + " n=" + str(n), [&] {
          const auto start = Clock::now();
          const MomentCheck r = moment_identity_check(group, u, n, c.budget, c.workers);
          const bool holds = std::abs(r.lhs - static_cast<double>(r.rhs_congruence)) <= 1e-6;
          t.add_row({str(m), str(u), str(n), str(r.lhs), str(r.rhs_congruence), str(r.rhs_equation),
                     format_bool(holds), format_bool(r.equation_applies)},
                    elapsed_ms(start));
        });
      }
    }
    });
  }
  return {t};
}

std::vector<Table> parseval_suite(const ExperimentConfig& c, std::ostream& log) {
  Table t;
  t.name = "parseval";
  t.columns = {"m", "sample", "size", "lhs", "rhs", "holds"};
  for (u64 m : sorted_unique(c.parseval.m_grid)) {
    guarded(t, log, "m=" + str(m), [&] {
      const auto group = build_group(Modulus::build(m), c.budget);
      std::mt19937_64 rng(c.parseval.seed ^ m);
      for (unsigned s = 0; s < c.parseval.samples; ++s) {
        const auto start = Clock::now();
        const auto values = random_multiset(rng, c.parseval.size, c.parseval.max_value);
        const ParsevalCheck r = parseval_check(group, values, c.workers);
        const bool holds = std::abs(r.lhs - static_cast<double>(r.rhs)) <= 1e-6;
        t.add_row({str(m), str(s), str(c.parseval.size), str(r.lhs), str(r.rhs), format_bool(holds)},
                  elapsed_ms(start));
      }
    });
  }
  return {t};
}

std::vector<Table> largevalues_suite(const ExperimentConfig& c, std::ostream& log) {
  Table t;
  t.name = "largevalues";
  t.columns = {"p", "N", "block_lo", "block_hi", "V", "R", "huxley_rhs", "parseval_total", "chebyshev_ok"};
  for (u64 p : sorted_unique(c.largevalues.p_grid)) {
    guarded(t, log, "p=" + str(p), [&] {
      const Modulus mod = Modulus::build(p);
      const auto group = build_group(mod, c.budget);
      std::vector<u64> grid;
      for (u64 n : c.largevalues.n.resolve(p)) grid.push_back(std::min(n, std::max<u64>(p - 1, 1)));
      for (u64 n : sorted_unique(grid)) {
        const auto start = Clock::now();
        const PrimeTable primes = PrimeTable::sieve(n, c.budget);
        std::vector<i64> support;
        for (u64 q : primes.primes()) support.push_back(static_cast<i64>(q));
        std::vector<LevelCensus> censuses;
        if (c.largevalues.dyadic) {
          censuses = large_value_census_dyadic(group, support, n, c.largevalues.v_grid, c.workers);
        } else {
          auto whole = large_value_census(group, support, n, c.largevalues.v_grid, c.workers);
          whole.block_lo = 0;
          whole.block_hi = n;
          censuses.push_back(std::move(whole));
        }
        std::size_t rows = 0;
        for (const auto& cen : censuses) rows += cen.thresholds.size();
        const double per_row = elapsed_ms(start) / std::max<std::size_t>(1, rows);
        for (const auto& cen : censuses) {
          for (std::size_t i = 0; i < cen.thresholds.size(); ++i) {
            const double v = cen.thresholds[i];
            const bool ok = static_cast<double>(cen.counts[i]) * v * v <= cen.parseval_total + 1e-6;
            t.add_row({str(p), str(n), str(cen.block_lo), str(cen.block_hi), str(v), str(cen.counts[i]),
                       str(cen.huxley_rhs[i]), str(cen.parseval_total), format_bool(ok)},
                      per_row);
          }
        }
      }
    });
  }
  return {t};
}

std::vector<Table> primecong_suite(const ExperimentConfig& c, std::ostream& log) {
  Table t;
  t.name = "primecong";
  t.columns = {"p", "N", "k", "lambda", "J", "main_term", "ratio", "threshold_ok", "runtime_ms"};
  for (u64 p : sorted_unique(c.primecong.p_grid)) {
    std::vector<i64> lambdas = c.primecong.lambda_values;
    if (c.primecong.lambda_random > 0 && p > 1) {
      const auto extra = random_units_rule(c.primecong.lambda_random, c.primecong.lambda_seed)(p);
      lambdas.insert(lambdas.end(), extra.begin(), extra.end());
    }
    for (u64 n : c.primecong.n.resolve(p)) {
      std::unique_ptr<PrimeTable> primes;
      for (i64 lambda : lambdas) {
        guarded(t, log, "p=" + str(p) + " N=" + str(n) + " lambda=" + str(lambda), [&] {
          const CongruenceInstance inst{p, n, c.primecong.k, lambda};
          inst.validate();
          if (!primes) primes = std::make_unique<PrimeTable>(PrimeTable::sieve(n, c.budget));
          const JReport r = j_report(inst, *primes, c.primecong.epsilon, c.budget);
          const std::string runtime =
              c.timing_in_csv ? format_double(std::round(r.runtime_ms * 1000.0) / 1000.0) : "";
          t.add_row({str(p), str(n), str(c.primecong.k), str(lambda), str(r.j), str(r.main_term), str(r.ratio),
                     format_bool(r.threshold_ok), runtime},
                    r.runtime_ms);
        });
      }
    }
  }
  return {t};
}

std::vector<Table> theta_suite(const ExperimentConfig& c, std::ostream& out, std::ostream& log) {
  Table t;
  t.name = "theta";
  t.columns = {"alpha", "beta", "theta", "theta_decimal"};
  guarded(t, log, "alpha=" + c.theta.alpha.str() + " beta=" + c.theta.beta.str(), [&] {
    const Rational th = theta(c.theta.alpha, c.theta.beta);
    std::ostringstream line;
    line << th.str() << " = " << std::fixed << std::setprecision(9) << th.to_double();
    out << line.str() << "\n";
    t.add_row({c.theta.alpha.str(), c.theta.beta.str(), th.str(), format_double(th.to_double())});
  });
  return {t};
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

}  // namespace

std::vector<Table> build_suite(const std::string& suite, const ExperimentConfig& c,
                               std::ostream& out, std::ostream& log) {
  if (suite == "coverage") return coverage_suite(c, log);
  if (suite == "collisions") return collisions_suite(c, log);
  if (suite == "counterexample") return counterexample_suite(c, log);
  if (suite == "charsum") return charsum_suite(c, log);
  if (suite == "moments") return moments_suite(c, log);
  if (suite == "parseval") return parseval_suite(c, log);
  if (suite == "largevalues") return largevalues_suite(c, log);
  if (suite == "primecong") return primecong_suite(c, log);
  if (suite == "theta") return theta_suite(c, out, log);
  throw ConfigError("unknown suite '" + suite + "'");
}

int run(const ExperimentConfig& config, std::ostream& out, std::ostream& log) {
  std::vector<std::string> suites;
  if (config.suite == "all") {
    for (const auto& s : suite_names()) {
      if (s != "all") suites.push_back(s);
    }
  } else {
    suites.push_back(config.suite);
  }
  const std::string started = utc_timestamp();
  const WriteOptions options{config.out_dir, config.json};
  try {
    for (const auto& s : suites) {
      for (const auto& table : build_suite(s, config, out, log)) {
        write_table(table, options, config.source, started);
      }
    }
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const IoError& e) {
    log << "I/O error: " << e.what() << "\n";
    return kIoError;
  } catch (const cglab::Error& e) {
    // Failures outside any row guard (group construction on a bad grid entry).
    log << "config error: " << e.what() << "\n";
    return kConfigError;
  }
  return kOk;
}

}  // namespace cglab::runner
