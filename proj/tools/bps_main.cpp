#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "bps/common.hpp"
#include "bps/report.hpp"
#include "bps/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Deterministic building-performance scenario runner"};
  std::string config_path = "config/default.json";
  std::string filter;
  std::string out_dir;
  std::uint64_t seed = 0;
  int jobs = 0;
  bool validate_only = false;

  app.add_option("--config", config_path, "Run configuration file")
      ->capture_default_str();
  auto* filter_opt =
      app.add_option("--filter", filter, "Scenario code glob, e.g. 'B1*' or 'B?O1W1'");
  auto* seed_opt = app.add_option("--seed", seed, "Master seed override");
  auto* out_opt = app.add_option("--out", out_dir, "Output directory override");
  auto* jobs_opt = app.add_option("--jobs", jobs, "Worker thread count")->check(CLI::PositiveNumber);
  app.add_flag("--validate", validate_only, "Check the configuration and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    bps::RunConfig config = bps::load_run_config(config_path);
    if (const char* env_out = std::getenv("BPS_OUT_DIR")) config.out_dir = env_out;
    if (*seed_opt) config.seed = seed;
    if (*filter_opt) config.filter = filter;
    if (*out_opt) config.out_dir = out_dir;
    if (*jobs_opt) config.jobs = jobs;

    if (validate_only) {
      const bps::ValidationReport report = bps::validate_run(config);
      std::fputs(report.rendered().c_str(), stdout);
      return report.ok ? 0 : 1;
    }

    const bps::RunOutput output = bps::run(config);
    std::fputs(bps::summary_table(output.results).c_str(), stdout);
    std::printf("\n%zu scenario(s) in %.2f s, artifacts in %s\n", output.results.size(),
                output.elapsed_s, config.out_dir.c_str());
    return 0;
  } catch (const bps::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
