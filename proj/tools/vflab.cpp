// Command-line driver: runs named experiments from flat key=value config
// files, writes CSV/JSON outputs plus a summary.json per run, and reports the
// outcome through the exit code:
//   0  all checks passed
//   2  at least one tolerance check failed
//   3  config file invalid (parse error, unknown key, bad value)
//   4  unknown experiment name
//   1  any other error
#include <algorithm>
#include <atomic>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "vflab/errors.hpp"
#include "vflab/experiments.hpp"

namespace {

std::string fmt6(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

int severity_rank(int code) {
  switch (code) {
    case 0: return 0;
    case 2: return 1;  // tolerance violation
    case 1: return 2;  // runtime error
    case 3: return 3;  // config error
    case 4: return 4;  // unknown experiment
    default: return 2;
  }
}

int run_one(const std::string& path, const std::string& output_dir,
            bool shared_output_dir, std::string& block) {
  std::ostringstream os;
  int code = 0;
  try {
    const vflab::Config config = vflab::Config::parse_file(path);
    std::string override_dir = output_dir;
    if (!override_dir.empty() && shared_output_dir) {
      override_dir += "/" + config.get_string("experiment", "unnamed");
    }
    const vflab::ExperimentResult result =
        vflab::run_experiment(config, override_dir);
    os << result.experiment << "  (" << path << ")\n";
    for (const vflab::CheckResult& c : result.checks) {
      os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name
         << "  value=" << fmt6(c.value) << "  expected=" << fmt6(c.expected);
      if (c.tol.has_value()) {
        os << "  tol=" << fmt6(*c.tol);
      } else {
        os << "  (informational)";
      }
      os << '\n';
    }
    os << "  " << (result.all_pass() ? "all checks passed" : "CHECKS FAILED")
       << " in " << fmt6(result.wall_time) << " s -> "
       << (result.output_dir / "summary.json").string() << '\n';
    if (!result.all_pass()) code = 2;
  } catch (const vflab::UnknownExperiment& e) {
    os << path << ": error: " << e.what() << '\n';
    code = 4;
  } catch (const vflab::ConfigError& e) {
    os << path << ": error: " << e.what() << '\n';
    code = 3;
  } catch (const std::exception& e) {
    os << path << ": error: " << e.what() << '\n';
    code = 1;
  }
  block = os.str();
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vortex-filament laboratory"};
  app.require_subcommand(0, 1);

  bool list = false;
  bool schema = false;
  app.add_flag("--list-experiments", list,
               "List experiment names with one-line summaries and exit");
  app.add_flag("--print-schema", schema,
               "Print the config key schema (keys, defaults, checks) and exit");

  std::vector<std::string> config_paths;
  std::string output_dir;
  unsigned jobs = 1;
  CLI::App* run = app.add_subcommand("run", "Run experiments from config files");
  run->add_option("configs", config_paths, "Config files (key = value lines)")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--output-dir", output_dir,
                  "Override the output directory (with several configs, each "
                  "experiment gets a subdirectory)");
  run->add_option("--jobs", jobs, "Run up to N configs in parallel")
      ->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (list) {
    for (const auto& [name, summary] : vflab::list_experiments()) {
      std::printf("%-22s %s\n", name.c_str(), summary.c_str());
    }
    return 0;
  }
  if (schema) {
    std::cout << vflab::schema_text();
    return 0;
  }
  if (!run->parsed()) {
    std::cout << app.help();
    return 0;
  }

  const std::size_t n_configs = config_paths.size();
  const bool shared = n_configs > 1;
  std::vector<std::string> blocks(n_configs);
  std::vector<int> codes(n_configs, 0);

  const std::size_t n_threads =
      std::min<std::size_t>(std::max(1u, jobs), n_configs);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n_configs) return;
      codes[i] = run_one(config_paths[i], output_dir, shared, blocks[i]);
    }
  };
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  int final_code = 0;
  for (std::size_t i = 0; i < n_configs; ++i) {
    std::cout << blocks[i];
    if (severity_rank(codes[i]) > severity_rank(final_code)) {
      final_code = codes[i];
    }
  }
  return final_code;
}
