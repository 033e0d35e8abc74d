// congruence-lab: experiment runner for product-set coverage, character sums
// and prime-variable congruence counts.
//
//   congruence-lab <subcommand> [--config path] [--out dir] [--workers n]
//                  [--json] [--set key.path=value ...]

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "runner/config.hpp"
#include "runner/runner.hpp"

int main(int argc, char** argv) {
  using namespace cglab::runner;

  CLI::App app{"Exact counting and character-sum experiments over residue rings"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir;
  unsigned workers = 0;
  bool json_mirror = false;
  std::vector<std::string> overrides;
  app.add_option("--config,-c", config_path, "JSON experiment config (defaults apply to missing keys)");
  app.add_option("--out,-o", out_dir, "Output directory for CSV/JSON reports");
  app.add_option("--workers,-w", workers, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_flag("--json", json_mirror, "Also write a JSON mirror of every CSV");
  app.add_option("--set,-s", overrides, "Override a config key, e.g. --set coverage.m_grid=[55]")
      ->take_all();

  for (const auto& name : suite_names()) app.add_subcommand(name, "Run the " + name + " suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    nlohmann::json doc = nlohmann::json::object();
    if (!config_path.empty()) doc = read_config_file(config_path);
    doc["suite"] = app.get_subcommands().front()->get_name();
    for (const auto& o : overrides) apply_override(doc, o);
    if (!out_dir.empty()) doc["output"]["dir"] = out_dir;
    if (workers > 0) doc["workers"] = workers;
    if (json_mirror) doc["output"]["json"] = true;
    const ExperimentConfig config = parse_config(doc);
    return run(config, std::cout, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIoError;
  }
}
