#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cglab/budget.hpp"
#include "cglab/rational.hpp"
#include "cglab/residue.hpp"
#include "json.hpp"

namespace cglab::runner {

// Invalid or unreadable configuration (exit code 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& suite_names();

// N values for one modulus: explicit values, exponent rules N = ceil(m^e),
// or both. Values >= m are dropped when the consumer needs N < m.
struct NRuleConfig {
  std::vector<u64> values;
  std::vector<double> exponents;

  std::vector<u64> resolve(u64 modulus) const;
};

struct CoverageConfig {
  std::vector<u64> m_grid;
  double epsilon = 0.2;
  unsigned k = 3;
  std::vector<u64> bounds;  // explicit bounds replace the exponent rule
};

struct CollisionsConfig {
  std::vector<u64> m_grid;
  std::vector<std::vector<u64>> bounds;
};

struct CounterexampleCase {
  u64 q = 0;
  u64 n = 0;
  u64 bound = 0;
};

struct CounterexampleConfig {
  std::vector<CounterexampleCase> cases;
};

struct CharsumConfig {
  std::vector<u64> burgess_m_grid;
  NRuleConfig burgess_n;
  std::vector<u64> vinogradov_p_grid;
  NRuleConfig vinogradov_n;
  i64 k = 1;
};

struct MomentsConfig {
  std::vector<u64> m_grid;
  std::vector<unsigned> n_values;
  std::vector<u64> u_values;  // empty: U = floor(m^{1/n})
};

struct ParsevalConfig {
  std::vector<u64> m_grid;
  unsigned samples = 0;
  unsigned size = 0;
  u64 max_value = 1;
  std::uint64_t seed = 0;
};

struct LargeValuesConfig {
  std::vector<u64> p_grid;
  NRuleConfig n;
  std::vector<double> v_grid;
  bool dyadic = false;
};

struct PrimeCongConfig {
  std::vector<u64> p_grid;
  NRuleConfig n;
  i64 k = 1;
  std::vector<i64> lambda_values;
  unsigned lambda_random = 0;
  std::uint64_t lambda_seed = 0;
  double epsilon = 0.01;
};

struct ThetaConfig {
  Rational alpha{1, 4};
  Rational beta{2, 3};
};

struct ExperimentConfig {
  std::string suite = "all";
  std::filesystem::path out_dir = "out";
  bool json = false;
  bool timing_in_csv = false;
  unsigned workers = 1;
  Budget budget;

  CoverageConfig coverage;
  CollisionsConfig collisions;
  CounterexampleConfig counterexample;
  CharsumConfig charsum;
  MomentsConfig moments;
  ParsevalConfig parseval;
  LargeValuesConfig largevalues;
  PrimeCongConfig primecong;
  ThetaConfig theta;

  // Effective configuration after defaults and overrides, echoed into JSON
  // mirrors.
  nlohmann::json source;
};

// The built-in defaults; identical to configs/reference.json.
nlohmann::json default_config();

// Reads a JSON file. Throws ConfigError on parse failure and IoError when the
// file cannot be read.
nlohmann::json read_config_file(const std::filesystem::path& path);

// Applies "dotted.key=value"; value is parsed as JSON, falling back to a
// plain string.
void apply_override(nlohmann::json& doc, const std::string& assignment);

// Merges doc over the defaults and validates. Throws ConfigError.
ExperimentConfig parse_config(const nlohmann::json& doc);

}  // namespace cglab::runner
