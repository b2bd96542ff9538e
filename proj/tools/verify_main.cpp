#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "verify/harness.hpp"

namespace {

std::vector<int> parse_levi(const std::string& text) {
  if (text.empty() || text == "none") return {};
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

verify::IVec parse_weight(const std::string& text) {
  verify::IVec out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of graded multiplicity identities"};
  app.require_subcommand(1);

  std::string type = "A1";
  long long lmax = -1, cutoff = 12, trials = 20, interval_budget = 200000;
  std::uint64_t seed = 42;
  std::vector<std::string> levi_args;
  std::string lambda_arg, config_path, report_path, format, cache_dir;
  bool timings = false, enable_g2 = false, no_cache = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--type", type, "Cartan type: A1, A2, B2, C2 or G2");
    cmd->add_option("--lmax", lmax, "max height of the highest weight (default per type)");
    cmd->add_option("--cutoff", cutoff, "freeness window bound in the halved grading");
    cmd->add_option("--levi", levi_args,
                    "Levi subset as comma-separated simple indices; 'none' for the empty set; "
                    "repeatable; default: all subsets");
    cmd->add_option("--lambda", lambda_arg, "single highest weight as comma-separated coordinates");
    cmd->add_option("--trials", trials, "sample count for the slice suites");
    cmd->add_option("--seed", seed, "random seed for the slice suites");
    cmd->add_option("--interval-budget", interval_budget, "Bruhat interval size gate");
    cmd->add_option("--report", report_path, "write the report to this file");
    cmd->add_option("--format", format, "report format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--cache-dir", cache_dir,
                    "cache directory (default: $VERIFY_CACHE_DIR, then ./cache)");
    cmd->add_flag("--timings", timings, "record per-check runtimes");
    cmd->add_flag("--no-cache", no_cache, "run without the persistent cache");
    cmd->add_flag("--enable-g2", enable_g2, "allow the large type G2");
  };

  CLI::App* c_lusztig = app.add_subcommand(
      "lusztig", "stratum costalk series against the q-analog multiplicities");
  CLI::App* c_gr = app.add_subcommand("gr", "one-character base modules against the q-analogs");
  CLI::App* c_main = app.add_subcommand(
      "main", "spectral module freeness, ranks and boundary identities");
  CLI::App* c_slices =
      app.add_subcommand("slices", "section, torsor and centralizer geometry on sample points");
  CLI::App* c_all = app.add_subcommand("all", "every suite, optionally from a job file");
  for (CLI::App* cmd : {c_lusztig, c_gr, c_main, c_slices, c_all}) add_common(cmd);
  c_all->add_option("--config", config_path, "JSON job description to replay");

  CLI11_PARSE(app, argc, argv);
  CLI::App* cmd = app.get_subcommands().front();

  try {
    verify::VerificationJob job;
    if (!config_path.empty()) job = verify::VerificationJob::from_json(slurp(config_path));

    auto passed = [&](const std::string& name) { return cmd->count(name) > 0; };
    if (config_path.empty() || passed("--type")) job.cartan_type = type;
    if (config_path.empty() || passed("--lmax")) job.lmax = lmax;
    if (config_path.empty() || passed("--cutoff")) job.cutoff = cutoff;
    if (config_path.empty() || passed("--trials")) job.trials = trials;
    if (config_path.empty() || passed("--seed")) job.seed = seed;
    if (config_path.empty() || passed("--interval-budget")) job.interval_budget = interval_budget;
    if (config_path.empty() || passed("--timings")) job.timings = timings;
    if (passed("--levi")) {
      job.levis.clear();
      for (const std::string& one : levi_args) job.levis.push_back(parse_levi(one));
    }
    if (passed("--lambda")) job.lambda = parse_weight(lambda_arg);

    if (cmd == c_lusztig) job.run_lusztig = true;
    if (cmd == c_gr) job.run_gr = true;
    if (cmd == c_main) job.run_main = job.run_localization = true;
    if (cmd == c_slices) job.run_slices = true;
    if (cmd == c_all && config_path.empty())
      job.run_lusztig = job.run_gr = job.run_main = job.run_slices = job.run_localization = true;

    if (job.cartan_type == "G2" && !enable_g2) {
      std::cerr << "type G2 is gated behind --enable-g2 (large affine intervals)\n";
      return 2;
    }

    verify::Report report;
    if (no_cache) {
      report = verify::run_suite(job, nullptr);
    } else {
      verify::DiskCache cache(verify::resolve_cache_dir(cache_dir));
      report = verify::run_suite(job, &cache);
    }

    std::string fmt = format.empty() ? (report_path.empty() ? "text" : "json") : format;
    if (!report_path.empty()) {
      std::ofstream out(report_path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write " + report_path);
      out << verify::render_report(report, fmt);
      std::cout << verify::render_report(report, "text");
    } else {
      std::cout << verify::render_report(report, fmt);
    }

    auto counts = report.summary();
    if (counts.at("INCONCLUSIVE") > 0)
      std::cerr << "warning: " << counts.at("INCONCLUSIVE") << " inconclusive check(s)\n";
    return report.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
