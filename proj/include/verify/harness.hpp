#ifndef VERIFY_HARNESS_HPP
#define VERIFY_HARNESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "verify/cache.hpp"
#include "verify/engine.hpp"
#include "verify/slices.hpp"

namespace verify {

// Fully serializable description of one verification run; a job file replays
// to an identical report (modulo runtime fields).
struct VerificationJob {
  std::string cartan_type = "A1";
  long long lmax = -1;                  // max height of lambda; per-type default when < 0
  long long cutoff = 12;                // freeness window bound, halved variable
  std::vector<std::vector<int>> levis;  // Levi subsets to test; empty = all of them
  std::optional<IVec> lambda;           // restrict to one highest weight
  long long trials = 20;
  std::uint64_t seed = 42;
  long long interval_budget = 200000;   // Bruhat interval size gate
  bool run_lusztig = false;
  bool run_gr = false;
  bool run_main = false;
  bool run_slices = false;
  bool run_localization = false;
  bool timings = false;

  long long grid_height() const;
  std::string to_json() const;
  static VerificationJob from_json(const std::string& text);
};

struct CheckRecord {
  std::string check_id;
  std::map<std::string, std::string> inputs;
  std::string status;  // PASS, FAIL, INCONCLUSIVE or ERROR
  std::string left;
  std::string right;
  long long shift = 0;
  double runtime = 0.0;  // seconds; zero unless timings were requested
};

struct Report {
  std::string version;
  VerificationJob job;
  std::vector<CheckRecord> checks;
  DiskCache::Stats cache;

  std::map<std::string, long long> summary() const;
  bool ok() const;  // no FAIL and no ERROR
};

// Costalk series against the q-analog of the weight multiplicity, over the
// dominant grid, plus the specialization consistency of the multiplicity
// engines.
void verify_lusztig(const VerificationJob& job, const DiskCache* cache, Report& out);
// Certified numerators of the one-character base modules against the
// q-analogs.
void verify_gr_base(const VerificationJob& job, const DiskCache* cache, Report& out);
// Freeness, total and per-class ranks, and the boundary identities of the
// spectral modules for each requested Levi subset; when localization
// bookkeeping is enabled the per-class rank tables are cross-checked
// between Levi subsets.
void verify_main(const VerificationJob& job, const DiskCache* cache, Report& out);
// Section round trips, torsor transversality, wall preconditions, and
// regular centralizer dimensions on seeded rational points.
void verify_slices_suite(const VerificationJob& job, Report& out);

Report run_suite(const VerificationJob& job, const DiskCache* cache);

// format is "json" or "text"; both renderings are byte-stable for equal
// reports.
std::string render_report(const Report& r, const std::string& format);

}  // namespace verify

#endif
