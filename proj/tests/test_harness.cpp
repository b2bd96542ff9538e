#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "verify/harness.hpp"

using namespace verify;
namespace fs = std::filesystem;

namespace {

// Fresh cache directory per test, removed on destruction.
struct TempCache {
  fs::path dir;
  TempCache() {
    dir = fs::temp_directory_path() / ("verify-test-" + std::to_string(::getpid()) + "-" +
                                       std::to_string(counter++));
    fs::create_directories(dir);
  }
  ~TempCache() { fs::remove_all(dir); }
  static int counter;
};
int TempCache::counter = 0;

const CheckRecord* find_check(const Report& r, const std::string& id) {
  for (const CheckRecord& c : r.checks)
    if (c.check_id == id) return &c;
  return nullptr;
}

VerificationJob small_a1_job() {
  VerificationJob job;
  job.cartan_type = "A1";
  job.lmax = 4;
  job.cutoff = 8;
  job.trials = 5;
  job.run_lusztig = job.run_gr = job.run_main = job.run_slices = job.run_localization = true;
  return job;
}

std::string checks_as_json(const Report& r) {
  nlohmann::json j = nlohmann::json::parse(render_report(r, "json"));
  return j["checks"].dump();
}

}  // namespace

TEST_CASE("job serialization round trips every field") {
  VerificationJob job;
  job.cartan_type = "C2";
  job.lmax = 5;
  job.cutoff = 9;
  job.levis = {{}, {1}, {0, 1}};
  job.lambda = IVec{2, 1};
  job.trials = 7;
  job.seed = 1234;
  job.interval_budget = 55;
  job.run_lusztig = true;
  job.run_main = true;
  job.timings = true;

  VerificationJob back = VerificationJob::from_json(job.to_json());
  CHECK(back.cartan_type == job.cartan_type);
  CHECK(back.lmax == job.lmax);
  CHECK(back.cutoff == job.cutoff);
  CHECK(back.levis == job.levis);
  REQUIRE(back.lambda.has_value());
  CHECK(*back.lambda == *job.lambda);
  CHECK(back.trials == job.trials);
  CHECK(back.seed == job.seed);
  CHECK(back.interval_budget == job.interval_budget);
  CHECK(back.run_lusztig == job.run_lusztig);
  CHECK(back.run_gr == job.run_gr);
  CHECK(back.run_main == job.run_main);
  CHECK(back.run_slices == job.run_slices);
  CHECK(back.run_localization == job.run_localization);
  CHECK(back.timings == job.timings);
  CHECK(back.to_json() == job.to_json());
}

TEST_CASE("grid height defaults depend on the type") {
  VerificationJob job;
  job.cartan_type = "A1";
  CHECK(job.grid_height() == 8);
  job.cartan_type = "A2";
  CHECK(job.grid_height() == 6);
  job.lmax = 3;
  CHECK(job.grid_height() == 3);
}

TEST_CASE("report status summary and exit predicate") {
  Report r;
  CHECK(r.ok());
  CHECK(r.summary().at("PASS") == 0);

  CheckRecord pass;
  pass.check_id = "x";
  pass.status = "PASS";
  r.checks.push_back(pass);
  CheckRecord inc = pass;
  inc.status = "INCONCLUSIVE";
  r.checks.push_back(inc);
  CHECK(r.ok());

  CheckRecord fail = pass;
  fail.status = "FAIL";
  r.checks.push_back(fail);
  CHECK_FALSE(r.ok());
  CHECK(r.summary().at("FAIL") == 1);

  Report err;
  CheckRecord e = pass;
  e.status = "ERROR";
  err.checks.push_back(e);
  CHECK_FALSE(err.ok());
}

TEST_CASE("small rank one suite passes everywhere with frozen sample values") {
  TempCache tmp;
  DiskCache cache(tmp.dir.string());
  Report r = run_suite(small_a1_job(), &cache);
  CHECK(r.ok());
  CHECK(r.summary().at("FAIL") == 0);
  CHECK(r.summary().at("ERROR") == 0);
  CHECK(r.summary().at("INCONCLUSIVE") == 0);
  CHECK(r.version == kToolVersion);

  const CheckRecord* lus = find_check(r, "lusztig A1 lambda=(2) mu=(0)");
  REQUIRE(lus != nullptr);
  CHECK(lus->status == "PASS");
  CHECK(lus->left == "q");
  CHECK(lus->right == "q");
  CHECK(lus->shift == 1);

  const CheckRecord* gr = find_check(r, "gr A1 lambda=(2) mu=(0)");
  REQUIRE(gr != nullptr);
  CHECK(gr->status == "PASS");
  CHECK(gr->left == "q");

  const CheckRecord* chr = find_check(r, "main-character A1 I={0} lambda=(2)");
  REQUIRE(chr != nullptr);
  CHECK(chr->status == "PASS");
  CHECK(chr->left == "q^-2 + 1 + q^2");

  const CheckRecord* tot = find_check(r, "main-rank-total A1 I={0} lambda=(4)");
  REQUIRE(tot != nullptr);
  CHECK(tot->left == "total certified rank 5");

  const CheckRecord* loc = find_check(r, "localization-coset A1 I={0} lambda=(3)");
  REQUIRE(loc != nullptr);
  CHECK(loc->status == "PASS");

  CHECK(find_check(r, "slices-wall A1 {}") != nullptr);
  CHECK(find_check(r, "slices-fiber A1") != nullptr);
}

TEST_CASE("cold and warm cache runs agree on every status and value") {
  TempCache tmp;
  VerificationJob job = small_a1_job();
  job.run_slices = false;

  DiskCache cold(tmp.dir.string());
  Report r1 = run_suite(job, &cold);
  CHECK(cold.stats.writes > 0);

  DiskCache warm(tmp.dir.string());
  Report r2 = run_suite(job, &warm);
  CHECK(warm.stats.misses == 0);
  CHECK(warm.stats.hits > 0);

  CHECK(checks_as_json(r1) == checks_as_json(r2));
}

TEST_CASE("suite without a cache equals the cached suite") {
  TempCache tmp;
  VerificationJob job = small_a1_job();
  DiskCache cache(tmp.dir.string());
  Report with = run_suite(job, &cache);
  Report without = run_suite(job, nullptr);
  CHECK(checks_as_json(with) == checks_as_json(without));
  CHECK(without.cache.hits == 0);
  CHECK(without.cache.writes == 0);
}

TEST_CASE("renderings are byte stable and the text format marks failures") {
  TempCache tmp;
  DiskCache cache(tmp.dir.string());
  VerificationJob job = small_a1_job();
  job.run_gr = job.run_main = job.run_slices = false;
  Report r = run_suite(job, &cache);
  CHECK(render_report(r, "json") == render_report(r, "json"));
  CHECK(render_report(r, "text") == render_report(r, "text"));
  CHECK_THROWS_AS(render_report(r, "yaml"), VerifyError);

  nlohmann::json j = nlohmann::json::parse(render_report(r, "json"));
  CHECK(j.contains("version"));
  CHECK(j.contains("job"));
  CHECK(j.contains("checks"));
  CHECK(j.contains("summary"));
  CHECK(j.contains("cache"));
  CHECK(j["summary"]["PASS"].get<long long>() == static_cast<long long>(r.checks.size()));

  Report bad;
  CheckRecord c;
  c.check_id = "demo";
  c.status = "FAIL";
  c.left = "1";
  c.right = "2";
  bad.checks.push_back(c);
  std::string text = render_report(bad, "text");
  CHECK(text.find("[FAIL] demo: 1 != 2") != std::string::npos);
}

TEST_CASE("interval budget starves the pair checks into inconclusive before the cache") {
  TempCache tmp;
  VerificationJob job;
  job.cartan_type = "A1";
  job.lmax = 2;
  job.run_lusztig = true;
  job.interval_budget = 1;

  DiskCache cold(tmp.dir.string());
  Report r1 = run_suite(job, &cold);
  long long inconclusive = 0;
  for (const CheckRecord& c : r1.checks)
    if (c.check_id.rfind("lusztig ", 0) == 0) {
      CHECK(c.status == "INCONCLUSIVE");
      CHECK(c.left.find("interval size") == 0);
      CHECK(c.right == "budget 1");
      ++inconclusive;
    }
  CHECK(inconclusive == 9);
  CHECK(r1.ok());
  CHECK_FALSE(fs::exists(tmp.dir / "kl"));  // the gate fires before any KL lookup

  // Warm the cache through an unstarved run, then starve again: statuses of
  // the starved run must not change.
  VerificationJob full = job;
  full.interval_budget = 200000;
  run_suite(full, &cold);
  Report r2 = run_suite(job, &cold);
  CHECK(checks_as_json(r1) == checks_as_json(r2));
}

TEST_CASE("multiplicity consistency records live in the lusztig suite") {
  TempCache tmp;
  DiskCache cache(tmp.dir.string());
  VerificationJob job;
  job.cartan_type = "A2";
  job.lmax = 4;
  job.run_lusztig = true;
  Report r = run_suite(job, &cache);
  CHECK(r.ok());
  const CheckRecord* m = find_check(r, "multiplicity A2 lambda=(1,1)");
  REQUIRE(m != nullptr);
  CHECK(m->status == "PASS");
  CHECK(m->left == "total 8");
  CHECK(m->right == "Weyl dim 8");
}

TEST_CASE("adjoint weight of rank two: certified ranks match the coset oracle") {
  TempCache tmp;
  DiskCache cache(tmp.dir.string());
  VerificationJob job;
  job.cartan_type = "A2";
  job.lambda = IVec{1, 1};
  job.levis = {{1}};
  job.cutoff = 8;
  job.run_main = true;
  Report r = run_suite(job, &cache);
  CHECK(r.ok());
  const CheckRecord* tot = find_check(r, "main-rank-total A2 I={1} lambda=(1,1)");
  REQUIRE(tot != nullptr);
  CHECK(tot->status == "PASS");
  CHECK(tot->left == "total certified rank 8");
  CHECK(tot->right == "module dimension 8");

  const RootDatum& d = RootDatum::get("A2");
  const ChevalleyAlgebra& g = ChevalleyAlgebra::get("A2");
  HWModule M(g, {1, 1});
  long long n_rank_checks = 0;
  for (const CosetPart& part : coset_decompose(d, {1}, M)) {
    const CheckRecord* c =
        find_check(r, "main-rank A2 I={1} lambda=(1,1) coset=" + part.label);
    REQUIRE(c != nullptr);
    CHECK(c->status == "PASS");
    CHECK(c->right == "weight multiplicity " + std::to_string(part.dim));
    ++n_rank_checks;
  }
  CHECK(n_rank_checks >= 2);
}

TEST_CASE("stored irreducible modules replay from disk verbatim") {
  TempCache tmp;
  DiskCache cache(tmp.dir.string());
  const ChevalleyAlgebra& g = ChevalleyAlgebra::get("B2");
  IVec lam{1, 1};

  HWModule fresh = module_cached(&cache, g, lam);
  CHECK(cache.stats.misses == 1);
  CHECK(cache.stats.writes == 1);

  auto loaded = cache.load_module(g, lam);
  REQUIRE(loaded.has_value());
  CHECK(loaded->dim() == fresh.dim());
  for (const auto& [mu, sp] : fresh.spaces()) {
    CHECK(loaded->space(mu).dim == sp.dim);
    CHECK(loaded->space(mu).basis == sp.basis);
    for (int i = 0; i < 2; ++i) {
      CHECK(loaded->e_matrix(i, mu) == fresh.e_matrix(i, mu));
      CHECK(loaded->f_matrix(i, mu) == fresh.f_matrix(i, mu));
    }
  }
}

TEST_CASE("corrupted or mismatched cache files fall back to recomputation") {
  TempCache tmp;
  DiskCache cache(tmp.dir.string());
  const AffWeyl& W = AffWeyl::get("A1");
  IVec lam{4}, mu{0};

  PolyZ first = coset_kl_cached(&cache, W, lam, mu);
  CHECK(cache.stats.writes == 1);

  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(tmp.dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  REQUIRE(files.size() == 1);

  std::ofstream(files[0], std::ios::trunc) << "{ not json";
  PolyZ again = coset_kl_cached(&cache, W, lam, mu);
  CHECK(again == first);
  CHECK(cache.stats.writes == 2);

  // A parseable entry recorded under the wrong inputs is a miss, not a value.
  nlohmann::json fake;
  fake["version"] = kToolVersion;
  fake["type"] = "A1";
  fake["y"] = "swapped";
  fake["w"] = "swapped";
  fake["coeffs"] = nlohmann::json::array();
  std::ofstream(files[0], std::ios::trunc) << fake.dump();
  PolyZ third = coset_kl_cached(&cache, W, lam, mu);
  CHECK(third == first);
  CHECK(cache.stats.writes == 3);
}

TEST_CASE("cache directory resolution prefers the explicit argument") {
  CHECK(resolve_cache_dir("/tmp/explicit") == "/tmp/explicit");
  std::string fallback = resolve_cache_dir("");
  const char* env = std::getenv("VERIFY_CACHE_DIR");
  if (env != nullptr)
    CHECK(fallback == env);
  else
    CHECK(fallback == "cache");
}

TEST_CASE("slice suite records sections, torsors, walls and fibers per subset") {
  VerificationJob job;
  job.cartan_type = "A2";
  job.trials = 4;
  job.seed = 11;
  job.run_slices = true;
  Report r;
  r.job = job;
  verify_slices_suite(job, r);
  CHECK(r.ok());

  long long sections = 0, torsors = 0, walls = 0, fibers = 0;
  for (const CheckRecord& c : r.checks) {
    CHECK(c.status == "PASS");
    if (c.check_id.rfind("slices-section", 0) == 0) ++sections;
    if (c.check_id.rfind("slices-torsor", 0) == 0) ++torsors;
    if (c.check_id.rfind("slices-wall", 0) == 0) ++walls;
    if (c.check_id.rfind("slices-fiber", 0) == 0) ++fibers;
  }
  CHECK(sections == 4);  // one per Levi subset
  CHECK(torsors == 4);
  CHECK(walls == 3);  // the full Levi has no outer wall
  CHECK(fibers == 1);
}

TEST_CASE("empty suite selection yields an empty passing report") {
  VerificationJob job;
  Report r = run_suite(job, nullptr);
  CHECK(r.checks.empty());
  CHECK(r.ok());
  CHECK(r.summary().at("PASS") == 0);
}
