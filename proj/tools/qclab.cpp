// qclab: runs the registered numerical checks and writes JSON/CSV reports.
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gft/checks.hpp"

namespace {

using nlohmann::json;

const char* status_str(gft::CheckStatus s) {
  switch (s) {
    case gft::CheckStatus::Pass:
      return "pass";
    case gft::CheckStatus::Fail:
      return "fail";
    default:
      return "inconclusive";
  }
}

json report_to_json(const gft::CheckReport& rep) {
  json j;
  j["check_id"] = rep.check_id;
  j["status"] = status_str(rep.status);
  j["measured"] = json::array();
  for (const auto& m : rep.measured)
    j["measured"].push_back({{"name", m.name}, {"value", m.value}});
  j["expected"] = json::array();
  for (const auto& e : rep.expected)
    j["expected"].push_back(
        {{"name", e.name}, {"value", e.value}, {"provenance", e.provenance}});
  j["runtime_ms"] = rep.runtime_ms;
  j["seed"] = rep.seed;
  j["tool_version"] = rep.tool_version;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

void write_reports(const std::vector<gft::CheckReport>& reps,
                   const std::string& out_dir, bool csv) {
  if (out_dir.empty()) return;
  std::filesystem::create_directories(out_dir);
  for (const auto& rep : reps) {
    std::ofstream f(out_dir + "/" + rep.check_id + ".json");
    f << report_to_json(rep).dump(2) << "\n";
    if (csv) {
      for (const auto& [name, text] : rep.csv_tables) {
        std::ofstream c(out_dir + "/" + rep.check_id + "_" + name + ".csv");
        c << text;
      }
    }
  }
}

void apply_config(const std::string& path, gft::CheckConfig& cfg) {
  std::ifstream f(path);
  if (!f) throw CLI::ValidationError("--config", "cannot open " + path);
  json j = json::parse(f);
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("quadrature")) {
    const json& q = j["quadrature"];
    if (q.contains("abs_tol")) cfg.quad.abs_tol = q["abs_tol"].get<double>();
    if (q.contains("rel_tol")) cfg.quad.rel_tol = q["rel_tol"].get<double>();
    if (q.contains("max_subdivisions"))
      cfg.quad.max_subdivisions = q["max_subdivisions"].get<int>();
    if (q.contains("tail_cutoff"))
      cfg.quad.tail_cutoff = q["tail_cutoff"].get<double>();
  }
}

int summarize(const std::vector<gft::CheckReport>& reps) {
  bool any_fail = false;
  for (const auto& rep : reps) {
    std::cout << status_str(rep.status) << "  " << rep.check_id << "  ("
              << rep.runtime_ms << " ms)\n";
    if (rep.status == gft::CheckStatus::Fail) any_fail = true;
  }
  return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical checks for distortion, means and kernels"};
  app.require_subcommand(1);

  std::string config_path, out_dir, check_id;
  std::uint64_t seed = 0;
  bool have_seed = false, csv = false;
  app.add_option("--config", config_path, "JSON config file");
  auto* seed_opt = app.add_option("--seed", seed, "PRNG seed");
  app.add_option("--out", out_dir, "report output directory");
  app.add_flag("--csv", csv, "also write CSV sweep tables");

  auto* run = app.add_subcommand("run", "run a single check");
  run->add_option("check_id", check_id, "registered check id")->required();
  auto* run_all_cmd = app.add_subcommand("run-all", "run every check");
  auto* list = app.add_subcommand("list", "list registered checks");
  // global options may appear after the subcommand
  run->fallthrough();
  run_all_cmd->fallthrough();
  list->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  have_seed = seed_opt->count() > 0;

  try {
    gft::CheckConfig cfg;
    if (!config_path.empty()) apply_config(config_path, cfg);
    if (have_seed) cfg.seed = seed;

    if (list->parsed()) {
      for (const auto& id : gft::check_ids()) std::cout << id << "\n";
      return 0;
    }
    std::vector<gft::CheckReport> reps;
    if (run->parsed()) {
      if (!gft::is_check_id(check_id)) {
        std::cerr << "unknown check id: " << check_id << "\n";
        return 2;
      }
      reps.push_back(gft::run_check(check_id, cfg));
    } else if (run_all_cmd->parsed()) {
      reps = gft::run_all(cfg);
    }
    write_reports(reps, out_dir, csv);
    return summarize(reps);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
