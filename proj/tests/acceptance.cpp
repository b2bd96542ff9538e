// Acceptance gate: one line per criterion, exit 0 only if all pass.
//
// 1. Costalk series of the translation strata equal the q-analog weight
//    multiplicities on the full desk grid (A1 height <= 8; A2, C2 height <= 6).
// 2. The three multiplicity engines agree pairwise and sum to the Weyl
//    dimension on the same grid.
// 3. The certified numerators of the one-character base modules equal the
//    q-analogs at cutoff 12.
// 4. For every Levi subset the spectral modules are certified free, with total
//    rank the module dimension, per-class ranks the coset multiplicity sums,
//    and the boundary identities (per-weight numerators, principal-graded
//    character) exact.
// 5. Slice sections round trip, torsor checks pass at anti-generic points and
//    refuse wall points, and regular centralizer fibers have rank dimension,
//    all on at least 20 seeded rational points per Levi subset.
// 6. Localization bookkeeping: rank totals equal the module dimension for all
//    Levi subsets and the per-class rank refinements are consistent.
// 7. The rank-one verification suite passes standalone with no cache present.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "verify/harness.hpp"

using namespace verify;

namespace {

struct Line {
  bool pass = true;
  long long checks = 0;
  std::string first_failure;

  void absorb(const Report& r, const std::string& prefix) {
    for (const CheckRecord& c : r.checks) {
      if (c.check_id.rfind(prefix, 0) != 0) continue;
      ++checks;
      if (c.status != "PASS" && pass) {
        pass = false;
        first_failure = "[" + c.status + "] " + c.check_id + ": " + c.left +
                        (c.right.empty() ? "" : " vs " + c.right);
      }
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void emit(int n, const char* what, const Line& line, double secs) {
  std::printf("criterion %d: %s  %s (%lld checks, %.1fs)\n", n,
              line.pass ? "PASS" : "FAIL", what, line.checks, secs);
  if (!line.pass) std::printf("  first failure: %s\n", line.first_failure.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  const std::vector<std::string> kGridTypes = {"A1", "A2", "C2"};
  const std::vector<std::string> kSliceTypes = {"A1", "A2", "B2", "C2"};
  DiskCache cache(resolve_cache_dir(""));
  int failures = 0;

  Line identity, multiplicity;
  auto t0 = std::chrono::steady_clock::now();
  for (const std::string& type : kGridTypes) {
    VerificationJob job;
    job.cartan_type = type;
    job.run_lusztig = true;
    Report r = run_suite(job, &cache);
    identity.absorb(r, "lusztig ");
    identity.absorb(r, "interval ");
    multiplicity.absorb(r, "multiplicity ");
  }
  double t_identity = seconds_since(t0);
  emit(1, "costalk series equal the q-analog multiplicities", identity, t_identity);
  emit(2, "multiplicity engines agree and sum to the Weyl dimension", multiplicity,
       t_identity);
  failures += !identity.pass + !multiplicity.pass;

  Line base;
  t0 = std::chrono::steady_clock::now();
  for (const std::string& type : kGridTypes) {
    VerificationJob job;
    job.cartan_type = type;
    job.run_gr = true;
    Report r = run_suite(job, &cache);
    base.absorb(r, "gr ");
  }
  emit(3, "base-case module numerators equal the q-analogs", base, seconds_since(t0));
  failures += !base.pass;

  Line main_thm, localization;
  t0 = std::chrono::steady_clock::now();
  for (const std::string& type : kGridTypes) {
    VerificationJob job;
    job.cartan_type = type;
    job.run_main = true;
    job.run_localization = true;
    Report r = run_suite(job, &cache);
    main_thm.absorb(r, "main");
    localization.absorb(r, "localization-");
  }
  double t_main = seconds_since(t0);
  emit(4, "spectral modules free with matching ranks and boundary characters", main_thm,
       t_main);
  failures += !main_thm.pass;

  Line slices;
  t0 = std::chrono::steady_clock::now();
  for (const std::string& type : kSliceTypes) {
    VerificationJob job;
    job.cartan_type = type;
    job.trials = 20;
    job.run_slices = true;
    Report r = run_suite(job, &cache);
    slices.absorb(r, "slices-");
  }
  emit(5, "slice sections, torsors and centralizer fibers verified on seeded points",
       slices, seconds_since(t0));
  failures += !slices.pass;

  emit(6, "localization rank bookkeeping consistent across Levi subsets", localization,
       t_main);
  failures += !localization.pass;

  Line standalone;
  t0 = std::chrono::steady_clock::now();
  {
    VerificationJob job;
    job.cartan_type = "A1";
    job.run_lusztig = job.run_gr = job.run_main = job.run_slices = true;
    job.run_localization = true;
    Report r = run_suite(job, nullptr);
    standalone.absorb(r, "");
  }
  emit(7, "rank-one suite passes standalone with no cache", standalone, seconds_since(t0));
  failures += !standalone.pass;

  std::printf("acceptance: %d/7 criteria passed\n", 7 - failures);
  return failures == 0 ? 0 : 1;
}
