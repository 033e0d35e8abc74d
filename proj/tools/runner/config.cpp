#include "runner/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cglab/errors.hpp"
#include "runner/report.hpp"

namespace cglab::runner {

using nlohmann::json;

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "coverage", "collisions", "counterexample", "charsum", "moments",
      "parseval", "largevalues", "primecong", "theta", "all"};
  return names;
}

json default_config() {
  return json::parse(R"({
  "suite": "all",
  "workers": 1,
  "output": {"dir": "out", "json": false, "timing_in_csv": false},
  "budgets": {
    "sieve": {"max_n": 200000000},
    "enumeration_cap": 2000000000,
    "sweep_cap": 1000000000,
    "max_modulus": 100000000
  },
  "coverage": {"m_grid": [10007, 30011, 100003], "epsilon": 0.2, "k": 3, "bounds": []},
  "collisions": {"m_grid": [7, 101, 1009], "bounds": [[2, 2, 2], [5, 5, 5], [10, 12, 14]]},
  "counterexample": {"cases": [{"q": 11, "n": 5, "B": 3}, {"q": 101, "n": 20, "B": 12}]},
  "charsum": {
    "burgess": {"m_grid": [1009, 10007], "N": {"values": [1, 100], "exponents": [0.25, 0.34, 0.5, 0.75]}},
    "vinogradov": {"p_grid": [1009, 10007], "N": {"values": [], "exponents": [0.5, 0.75, 0.9]}, "k": 1}
  },
  "moments": {"m_grid": [7, 101, 103, 210], "n": [2, 3], "U": []},
  "parseval": {"m_grid": [12, 101, 360], "samples": 100, "size": 40, "max_value": 1000, "seed": 20240101},
  "largevalues": {"p_grid": [101, 1009], "N": {"values": [], "exponents": [0.99]}, "V_grid": [0, 1, 2, 4, 8, 16, 32], "dyadic": true},
  "primecong": {
    "p_grid": [10007],
    "N": {"values": [9000], "exponents": []},
    "k": 1,
    "lambda": {"values": [], "random": 10, "seed": 76},
    "epsilon": 0.01
  },
  "theta": {"alpha": "1/4", "beta": "2/3"}
})");
}

json read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path.string() + ": " + e.what());
  }
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("override must look like key.path=value: " + assignment);
  }
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json value;
  try {
    value = json::parse(text);
  } catch (const json::parse_error&) {
    value = text;
  }
  // Budget keys are dotted themselves ("sieve.max_n"), so walk segments.
  json* node = &doc;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (part.empty()) throw ConfigError("empty segment in override key " + key);
    if (dot == std::string::npos) {
      (*node)[part] = value;
      return;
    }
    if (!node->contains(part) || !(*node)[part].is_object()) (*node)[part] = json::object();
    node = &(*node)[part];
    start = dot + 1;
  }
}

std::vector<u64> NRuleConfig::resolve(u64 modulus) const {
  std::vector<u64> out(values.begin(), values.end());
  for (double e : exponents) out.push_back(ceil_power(modulus, e));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

template <typename T>
T get(const json& node, const char* key, const std::string& where) {
  if (!node.contains(key)) throw ConfigError(where + "." + key + " is missing");
  try {
    return node.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

std::vector<u64> positive_list(const json& node, const char* key, const std::string& where) {
  auto v = get<std::vector<u64>>(node, key, where);
  for (u64 x : v) {
    if (x == 0) throw ConfigError(where + "." + key + " entries must be positive");
  }
  return v;
}

NRuleConfig n_rule(const json& node, const std::string& where) {
  NRuleConfig r;
  if (node.is_number_unsigned()) {
    r.values.push_back(node.get<u64>());
  } else if (node.is_array()) {
    r.values = node.get<std::vector<u64>>();
  } else if (node.is_object()) {
    if (node.contains("values")) r.values = node.at("values").get<std::vector<u64>>();
    if (node.contains("exponents")) r.exponents = node.at("exponents").get<std::vector<double>>();
    if (node.contains("exponent")) r.exponents.push_back(node.at("exponent").get<double>());
  } else {
    throw ConfigError(where + " must be an integer, a list, or {values, exponents}");
  }
  for (u64 v : r.values) {
    if (v == 0) throw ConfigError(where + " values must be >= 1");
  }
  for (double e : r.exponents) {
    if (!(e >= 0.0)) throw ConfigError(where + " exponents must be nonnegative");
  }
  return r;
}

}  // namespace

ExperimentConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config root must be an object");
  json merged = default_config();
  merged.merge_patch(doc);

  ExperimentConfig c;
  c.source = merged;
  try {
    c.suite = get<std::string>(merged, "suite", "");
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), c.suite) == names.end()) {
      throw ConfigError("unknown suite '" + c.suite + "'");
    }
    const long long workers = get<long long>(merged, "workers", "");
    if (workers < 1 || workers > 1024) throw ConfigError("workers must be in [1, 1024]");
    c.workers = static_cast<unsigned>(workers);

    const json& out = merged.at("output");
    c.out_dir = get<std::string>(out, "dir", "output");
    c.json = get<bool>(out, "json", "output");
    c.timing_in_csv = get<bool>(out, "timing_in_csv", "output");

    const json& b = merged.at("budgets");
    c.budget.sieve_max_n = get<u64>(b.at("sieve"), "max_n", "budgets.sieve");
    c.budget.enumeration_cap = get<u64>(b, "enumeration_cap", "budgets");
    c.budget.sweep_cap = get<u64>(b, "sweep_cap", "budgets");
    c.budget.max_modulus = get<u64>(b, "max_modulus", "budgets");
    if (c.budget.sieve_max_n == 0 || c.budget.enumeration_cap == 0 || c.budget.sweep_cap == 0 ||
        c.budget.max_modulus == 0) {
      throw ConfigError("budgets must be positive");
    }

    const json& cov = merged.at("coverage");
    c.coverage.m_grid = positive_list(cov, "m_grid", "coverage");
    c.coverage.epsilon = get<double>(cov, "epsilon", "coverage");
    c.coverage.bounds = positive_list(cov, "bounds", "coverage");
    const int k = get<int>(cov, "k", "coverage");
    if (c.coverage.bounds.empty() && k != 3 && k != 4) throw ConfigError("coverage.k must be 3 or 4");
    if (c.coverage.epsilon < 0.0) throw ConfigError("coverage.epsilon must be nonnegative");
    c.coverage.k = static_cast<unsigned>(k);

    const json& col = merged.at("collisions");
    c.collisions.m_grid = positive_list(col, "m_grid", "collisions");
    c.collisions.bounds = get<std::vector<std::vector<u64>>>(col, "bounds", "collisions");
    for (const auto& bs : c.collisions.bounds) {
      if (bs.empty() || std::find(bs.begin(), bs.end(), 0u) != bs.end()) {
        throw ConfigError("collisions.bounds entries must be nonempty lists of positive integers");
      }
    }

    for (const auto& item : merged.at("counterexample").at("cases")) {
      c.counterexample.cases.push_back({get<u64>(item, "q", "counterexample.cases[]"),
                                        get<u64>(item, "n", "counterexample.cases[]"),
                                        get<u64>(item, "B", "counterexample.cases[]")});
    }

    const json& cs = merged.at("charsum");
    c.charsum.burgess_m_grid = positive_list(cs.at("burgess"), "m_grid", "charsum.burgess");
    c.charsum.burgess_n = n_rule(cs.at("burgess").at("N"), "charsum.burgess.N");
    c.charsum.vinogradov_p_grid = positive_list(cs.at("vinogradov"), "p_grid", "charsum.vinogradov");
    c.charsum.vinogradov_n = n_rule(cs.at("vinogradov").at("N"), "charsum.vinogradov.N");
    c.charsum.k = get<i64>(cs.at("vinogradov"), "k", "charsum.vinogradov");

    const json& mo = merged.at("moments");
    c.moments.m_grid = positive_list(mo, "m_grid", "moments");
    c.moments.n_values = get<std::vector<unsigned>>(mo, "n", "moments");
    c.moments.u_values = positive_list(mo, "U", "moments");
    for (unsigned n : c.moments.n_values) {
      if (n == 0) throw ConfigError("moments.n entries must be positive");
    }

    const json& pv = merged.at("parseval");
    c.parseval.m_grid = positive_list(pv, "m_grid", "parseval");
    c.parseval.samples = get<unsigned>(pv, "samples", "parseval");
    c.parseval.size = get<unsigned>(pv, "size", "parseval");
    c.parseval.max_value = get<u64>(pv, "max_value", "parseval");
    c.parseval.seed = get<std::uint64_t>(pv, "seed", "parseval");
    if (c.parseval.max_value == 0) throw ConfigError("parseval.max_value must be positive");

    const json& lv = merged.at("largevalues");
    c.largevalues.p_grid = positive_list(lv, "p_grid", "largevalues");
    c.largevalues.n = n_rule(lv.at("N"), "largevalues.N");
    c.largevalues.v_grid = get<std::vector<double>>(lv, "V_grid", "largevalues");
    c.largevalues.dyadic = get<bool>(lv, "dyadic", "largevalues");
    for (std::size_t i = 0; i < c.largevalues.v_grid.size(); ++i) {
      if (c.largevalues.v_grid[i] < 0 || (i && c.largevalues.v_grid[i] < c.largevalues.v_grid[i - 1])) {
        throw ConfigError("largevalues.V_grid must be nonnegative and ascending");
      }
    }

    const json& pc = merged.at("primecong");
    c.primecong.p_grid = positive_list(pc, "p_grid", "primecong");
    c.primecong.n = n_rule(pc.at("N"), "primecong.N");
    c.primecong.k = get<i64>(pc, "k", "primecong");
    c.primecong.epsilon = get<double>(pc, "epsilon", "primecong");
    const json& lam = pc.at("lambda");
    if (lam.is_number_integer()) {
      c.primecong.lambda_values.push_back(lam.get<i64>());
    } else {
      if (lam.contains("values")) c.primecong.lambda_values = lam.at("values").get<std::vector<i64>>();
      if (lam.contains("random")) c.primecong.lambda_random = lam.at("random").get<unsigned>();
      if (lam.contains("seed")) c.primecong.lambda_seed = lam.at("seed").get<std::uint64_t>();
    }

    const json& th = merged.at("theta");
    auto rational = [&](const char* key) {
      const json& v = th.at(key);
      if (v.is_string()) return Rational::parse(v.get<std::string>());
      if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
      if (v.is_number()) return Rational::parse(format_double(v.get<double>()));
      throw ConfigError(std::string("theta.") + key + " must be a rational string or number");
    };
    c.theta.alpha = rational("alpha");
    c.theta.beta = rational("beta");
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const cglab::Error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return c;
}

}  // namespace cglab::runner
