#include "verify/harness.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include <json.hpp>

#include "verify/qmult.hpp"

namespace verify {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string wt_str(const IVec& v) { return "(" + ivec_to_string(v) + ")"; }

std::string levi_str(const std::vector<int>& I) {
  std::string s = "{";
  for (size_t k = 0; k < I.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(I[k]);
  }
  return s + "}";
}

double elapsed(const VerificationJob& job, Clock::time_point from) {
  if (!job.timings) return 0.0;
  return std::chrono::duration<double>(Clock::now() - from).count();
}

std::vector<std::vector<int>> levi_sets(const VerificationJob& job, const RootDatum& d) {
  if (job.levis.empty()) return all_levi_subsets(d);
  std::vector<std::vector<int>> out;
  for (std::vector<int> I : job.levis) {
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    for (int i : I) require(i >= 0 && i < d.rank, "Levi index out of range");
    out.push_back(I);
  }
  return out;
}

std::vector<IVec> lambda_grid(const VerificationJob& job, const RootDatum& d) {
  if (job.lambda.has_value()) {
    require(static_cast<int>(job.lambda->size()) == d.rank, "highest weight has wrong rank");
    require(d.is_dominant(*job.lambda), "highest weight must be dominant");
    return {*job.lambda};
  }
  return d.dominant_grid(job.grid_height());
}

// One record per caught failure keeps a single broken unit from hiding the
// rest of the suite.
template <typename F>
void guarded(Report& out, const std::string& check_id,
             const std::map<std::string, std::string>& inputs, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    CheckRecord rec;
    rec.check_id = check_id;
    rec.inputs = inputs;
    rec.status = "ERROR";
    rec.left = e.what();
    out.checks.push_back(std::move(rec));
  }
}

}  // namespace

long long VerificationJob::grid_height() const {
  if (lmax >= 0) return lmax;
  return cartan_type == "A1" ? 8 : 6;
}

std::string VerificationJob::to_json() const {
  json j;
  j["type"] = cartan_type;
  j["lmax"] = lmax;
  j["cutoff"] = cutoff;
  json ls = json::array();
  for (const auto& I : levis) {
    json one = json::array();
    for (int i : I) one.push_back(i);
    ls.push_back(one);
  }
  j["levis"] = ls;
  if (lambda.has_value()) {
    json lv = json::array();
    for (long long x : *lambda) lv.push_back(x);
    j["lambda"] = lv;
  } else {
    j["lambda"] = nullptr;
  }
  j["trials"] = trials;
  j["seed"] = seed;
  j["interval_budget"] = interval_budget;
  j["suites"] = json{{"lusztig", run_lusztig},
                     {"gr", run_gr},
                     {"main", run_main},
                     {"slices", run_slices},
                     {"localization", run_localization}};
  j["timings"] = timings;
  return j.dump();
}

VerificationJob VerificationJob::from_json(const std::string& text) {
  json j = json::parse(text);
  VerificationJob job;
  job.cartan_type = j.value("type", job.cartan_type);
  job.lmax = j.value("lmax", job.lmax);
  job.cutoff = j.value("cutoff", job.cutoff);
  if (j.contains("levis"))
    for (const auto& one : j["levis"]) {
      std::vector<int> I;
      for (const auto& x : one) I.push_back(x.get<int>());
      job.levis.push_back(I);
    }
  if (j.contains("lambda") && !j["lambda"].is_null()) {
    IVec lv;
    for (const auto& x : j["lambda"]) lv.push_back(x.get<long long>());
    job.lambda = lv;
  }
  job.trials = j.value("trials", job.trials);
  job.seed = j.value("seed", job.seed);
  job.interval_budget = j.value("interval_budget", job.interval_budget);
  if (j.contains("suites")) {
    const json& s = j["suites"];
    job.run_lusztig = s.value("lusztig", false);
    job.run_gr = s.value("gr", false);
    job.run_main = s.value("main", false);
    job.run_slices = s.value("slices", false);
    job.run_localization = s.value("localization", false);
  }
  job.timings = j.value("timings", job.timings);
  return job;
}

std::map<std::string, long long> Report::summary() const {
  std::map<std::string, long long> counts{
      {"PASS", 0}, {"FAIL", 0}, {"INCONCLUSIVE", 0}, {"ERROR", 0}};
  for (const CheckRecord& c : checks) counts[c.status] += 1;
  return counts;
}

bool Report::ok() const {
  auto s = summary();
  return s.at("FAIL") == 0 && s.at("ERROR") == 0;
}

void verify_lusztig(const VerificationJob& job, const DiskCache* cache, Report& out) {
  const RootDatum& d = RootDatum::get(job.cartan_type);
  const AffWeyl& W = AffWeyl::get(job.cartan_type);
  const ChevalleyAlgebra& g = ChevalleyAlgebra::get(job.cartan_type);
  std::vector<IVec> grid = lambda_grid(job, d);

  for (const IVec& lam : grid) {
    std::map<std::string, std::string> lam_in{{"type", job.cartan_type},
                                              {"lambda", wt_str(lam)}};

    // Specialization consistency of the three multiplicity engines.
    guarded(out, "multiplicity " + job.cartan_type + " lambda=" + wt_str(lam), lam_in, [&] {
      Clock::time_point t0 = Clock::now();
      HWModule M = module_cached(cache, g, lam);
      CheckRecord rec;
      rec.check_id = "multiplicity " + job.cartan_type + " lambda=" + wt_str(lam);
      rec.inputs = lam_in;
      rec.status = "PASS";
      long long total = 0;
      for (const auto& [mu, mult] : weight_system(d, lam)) {
        total += mult;
        long long hw = M.space(mu).dim;
        if (hw != mult) {
          rec.status = "FAIL";
          rec.left = "module dim " + std::to_string(hw) + " at " + wt_str(mu);
          rec.right = "orbit multiplicity " + std::to_string(mult);
          break;
        }
        if (!d.is_dominant(mu)) continue;
        long long fr = freudenthal_mult(d, lam, mu);
        long long lq = lusztig_q_mult(d, lam, mu).at_one();
        if (fr != mult || lq != mult) {
          rec.status = "FAIL";
          rec.left = "freudenthal " + std::to_string(fr) + ", q-analog " + std::to_string(lq) +
                     " at " + wt_str(mu);
          rec.right = "multiplicity " + std::to_string(mult);
          break;
        }
      }
      if (rec.status == "PASS") {
        rec.left = "total " + std::to_string(total);
        rec.right = "Weyl dim " + std::to_string(d.weyl_dim(lam));
        if (total != d.weyl_dim(lam)) rec.status = "FAIL";
      }
      rec.runtime = elapsed(job, t0);
      out.checks.push_back(std::move(rec));
    });

    // Interval gate: decided before any cache lookup so that cold and warm
    // runs agree on every status.  The length-zero factor is split off first,
    // exactly as the table builder does.
    long long iv_size = 0;
    guarded(out, "interval " + job.cartan_type + " lambda=" + wt_str(lam), lam_in, [&] {
      AffWeylElt neutral_top = W.split_omega(W.double_coset_max(lam)).second;
      iv_size = static_cast<long long>(bruhat_interval(W, neutral_top).elts.size());
    });
    bool oversized = iv_size > job.interval_budget;

    for (const IVec& mu : grid) {
      std::string id =
          "lusztig " + job.cartan_type + " lambda=" + wt_str(lam) + " mu=" + wt_str(mu);
      std::map<std::string, std::string> in{{"type", job.cartan_type},
                                            {"lambda", wt_str(lam)},
                                            {"mu", wt_str(mu)}};
      if (oversized) {
        CheckRecord rec;
        rec.check_id = id;
        rec.inputs = in;
        rec.status = "INCONCLUSIVE";
        rec.left = "interval size " + std::to_string(iv_size);
        rec.right = "budget " + std::to_string(job.interval_budget);
        out.checks.push_back(std::move(rec));
        continue;
      }
      guarded(out, id, in, [&] {
        Clock::time_point t0 = Clock::now();
        CheckRecord rec;
        rec.check_id = id;
        rec.inputs = in;
        PolyZ geo = costalk_cached(cache, W, lam, mu);
        PolyZ alg = lusztig_q_mult(d, lam, mu);
        rec.left = geo.to_string();
        rec.right = alg.to_string();
        if (d.in_root_lattice(ivec_sub(lam, mu))) {
          long long delta = W.length(W.double_coset_max(lam)) - W.length(W.double_coset_max(mu));
          rec.shift = delta / 2;
        }
        rec.status = geo == alg ? "PASS" : "FAIL";
        rec.runtime = elapsed(job, t0);
        out.checks.push_back(std::move(rec));
      });
    }
  }
}

void verify_gr_base(const VerificationJob& job, const DiskCache* cache, Report& out) {
  const RootDatum& d = RootDatum::get(job.cartan_type);
  const ChevalleyAlgebra& g = ChevalleyAlgebra::get(job.cartan_type);
  LeviDatum trivial = levi_datum(d, {});
  std::vector<IVec> grid = lambda_grid(job, d);

  for (const IVec& lam : grid) {
    for (const IVec& mu : d.dominant_below(lam)) {
      std::string id = "gr " + job.cartan_type + " lambda=" + wt_str(lam) + " mu=" + wt_str(mu);
      std::map<std::string, std::string> in{{"type", job.cartan_type},
                                            {"lambda", wt_str(lam)},
                                            {"mu", wt_str(mu)},
                                            {"cutoff", std::to_string(job.cutoff)}};
      guarded(out, id, in, [&] {
        Clock::time_point t0 = Clock::now();
        HWModule M = module_cached(cache, g, lam);
        GradedSummary s = gr_base_module(M, mu, 2 * job.cutoff);
        FreenessResult fr = freeness_test(s, trivial.invariant_degrees);
        PolyZ alg = lusztig_q_mult(d, lam, mu);
        CheckRecord rec;
        rec.check_id = id;
        rec.inputs = in;
        rec.shift = s.shift;
        if (fr.status == "PASS") {
          PolyZ geo = fr.numerator.halved();
          rec.left = geo.to_string();
          rec.right = alg.to_string();
          rec.status = geo == alg ? "PASS" : "FAIL";
        } else {
          rec.left = fr.numerator.is_zero() ? "0" : fr.numerator.to_string();
          rec.right = fr.note;
          rec.status = fr.status;
        }
        rec.runtime = elapsed(job, t0);
        out.checks.push_back(std::move(rec));
      });
    }
  }
}

namespace {

// Per-class certified ranks of one spectral module, kept for the
// localization bookkeeping.
struct RankTable {
  std::map<std::string, long long> by_label;
  long long total = 0;
  bool conclusive = true;
};

void main_one(const VerificationJob& job, const DiskCache* cache, Report& out, const IVec& lam,
              const std::vector<int>& I, std::map<std::string, RankTable>& tables) {
  const RootDatum& d = RootDatum::get(job.cartan_type);
  const ChevalleyAlgebra& g = ChevalleyAlgebra::get(job.cartan_type);
  LeviDatum L = levi_datum(d, I);
  std::string where = job.cartan_type + " " + L.label() + " lambda=" + wt_str(lam);
  std::map<std::string, std::string> base_in{{"type", job.cartan_type},
                                             {"levi", levi_str(I)},
                                             {"lambda", wt_str(lam)},
                                             {"cutoff", std::to_string(job.cutoff)}};

  Clock::time_point t0 = Clock::now();
  HWModule M = module_cached(cache, g, lam);
  SpectralModule S = spectral_module(M, I, 2 * job.cutoff);
  std::vector<CosetPart> parts = coset_decompose(d, I, M);
  double build_time = elapsed(job, t0);

  RankTable table;
  bool any_fail = false;
  for (const GradedSummary& cs : S.cosets) {
    FreenessResult fr = freeness_test(cs, L.invariant_degrees);
    std::map<std::string, std::string> in = base_in;
    in["coset"] = cs.label;

    CheckRecord free_rec;
    free_rec.check_id = "main-freeness " + where + " coset=" + cs.label;
    free_rec.inputs = in;
    free_rec.status = fr.status;
    free_rec.left = fr.numerator.is_zero() ? "0" : fr.numerator.to_string();
    free_rec.right = fr.note.empty() ? "free over the invariant base" : fr.note;
    free_rec.shift = cs.shift;
    out.checks.push_back(free_rec);
    if (fr.status == "FAIL") any_fail = true;
    if (fr.status != "PASS") table.conclusive = false;

    const CosetPart* part = nullptr;
    for (const CosetPart& p : parts)
      if (p.label == cs.label) part = &p;
    CheckRecord rank_rec;
    rank_rec.check_id = "main-rank " + where + " coset=" + cs.label;
    rank_rec.inputs = in;
    rank_rec.left = "certified rank " + std::to_string(fr.rank);
    rank_rec.right =
        "weight multiplicity " + std::to_string(part == nullptr ? 0 : part->dim);
    if (fr.status != "PASS")
      rank_rec.status = fr.status == "FAIL" ? "FAIL" : "INCONCLUSIVE";
    else
      rank_rec.status = (part != nullptr && fr.rank == part->dim) ? "PASS" : "FAIL";
    out.checks.push_back(rank_rec);
    if (rank_rec.status == "FAIL") any_fail = true;

    table.by_label[cs.label] = fr.rank;
    table.total += fr.rank;
  }

  CheckRecord tot;
  tot.check_id = "main-rank-total " + where;
  tot.inputs = base_in;
  tot.left = "total certified rank " + std::to_string(table.total);
  tot.right = "module dimension " + std::to_string(M.dim());
  if (!table.conclusive)
    tot.status = any_fail ? "FAIL" : "INCONCLUSIVE";
  else
    tot.status = table.total == M.dim() ? "PASS" : "FAIL";
  tot.runtime = build_time;
  out.checks.push_back(tot);

  if (I.empty()) {
    // Boundary identity: per-weight numerators against the q-analogs.
    for (const GradedSummary& cs : S.cosets) {
      if (!d.is_dominant(cs.rep)) continue;
      FreenessResult fr = freeness_test(cs, L.invariant_degrees);
      CheckRecord rec;
      rec.check_id = "main-numerator " + where + " mu=" + wt_str(cs.rep);
      rec.inputs = base_in;
      rec.inputs["mu"] = wt_str(cs.rep);
      rec.shift = cs.shift;
      PolyZ alg = lusztig_q_mult(d, lam, cs.rep);
      if (fr.status == "PASS") {
        PolyZ geo = fr.numerator.halved();
        rec.left = geo.to_string();
        rec.right = alg.to_string();
        rec.status = geo == alg ? "PASS" : "FAIL";
      } else {
        rec.left = fr.numerator.is_zero() ? "0" : fr.numerator.to_string();
        rec.right = fr.note;
        rec.status = fr.status;
      }
      out.checks.push_back(rec);
    }
  }

  if (static_cast<int>(I.size()) == d.rank) {
    // Boundary identity: one class whose numerator is the graded character.
    CheckRecord rec;
    rec.check_id = "main-character " + where;
    rec.inputs = base_in;
    PolyZ alg = graded_character(L, lam);
    require(S.cosets.size() == 1, "full Levi spectral module splits into several classes");
    FreenessResult fr = freeness_test(S.cosets[0], L.invariant_degrees);
    rec.shift = S.cosets[0].shift;
    if (fr.status == "PASS") {
      rec.left = fr.numerator.to_string();
      rec.right = alg.to_string();
      rec.status = fr.numerator == alg ? "PASS" : "FAIL";
    } else {
      rec.left = fr.numerator.is_zero() ? "0" : fr.numerator.to_string();
      rec.right = fr.note;
      rec.status = fr.status;
    }
    out.checks.push_back(rec);
  }

  tables[levi_str(I)] = table;
}

void localization_records(const VerificationJob& job, Report& out, const IVec& lam,
                          const std::vector<std::vector<int>>& levis,
                          const std::map<std::string, RankTable>& tables, long long module_dim) {
  const RootDatum& d = RootDatum::get(job.cartan_type);
  const ChevalleyAlgebra& g = ChevalleyAlgebra::get(job.cartan_type);
  auto empty_it = tables.find("{}");
  if (empty_it == tables.end()) return;
  const RankTable& base = empty_it->second;

  for (const auto& I : levis) {
    auto it = tables.find(levi_str(I));
    if (it == tables.end()) continue;
    const RankTable& tab = it->second;
    std::string where = job.cartan_type + " " + levi_datum(d, I).label() + " lambda=" + wt_str(lam);
    std::map<std::string, std::string> in{{"type", job.cartan_type},
                                          {"levi", levi_str(I)},
                                          {"lambda", wt_str(lam)}};

    CheckRecord tot;
    tot.check_id = "localization-total " + where;
    tot.inputs = in;
    tot.left = "rank " + std::to_string(tab.total);
    tot.right = "dim " + std::to_string(module_dim);
    tot.status = !tab.conclusive ? "INCONCLUSIVE"
                                 : (tab.total == module_dim ? "PASS" : "FAIL");
    out.checks.push_back(tot);

    if (I.empty()) continue;
    guarded(out, "localization-coset " + where, in, [&] {
      HWModule M(g, lam);
      CheckRecord rec;
      rec.check_id = "localization-coset " + where;
      rec.inputs = in;
      rec.status = (tab.conclusive && base.conclusive) ? "PASS" : "INCONCLUSIVE";
      for (const CosetPart& part : coset_decompose(d, I, M)) {
        long long fine_sum = 0;
        for (const IVec& mu : part.weights) {
          auto fine = base.by_label.find(coset_label(d, {}, mu));
          if (fine != base.by_label.end()) fine_sum += fine->second;
        }
        auto coarse = tab.by_label.find(part.label);
        long long coarse_rank = coarse == tab.by_label.end() ? 0 : coarse->second;
        if (rec.status == "PASS" && fine_sum != coarse_rank) {
          rec.status = "FAIL";
          rec.left = "aggregated rank " + std::to_string(fine_sum) + " at " + part.label;
          rec.right = "class rank " + std::to_string(coarse_rank);
        }
      }
      if (rec.status == "PASS") {
        rec.left = "all class aggregates";
        rec.right = "consistent";
      }
      out.checks.push_back(std::move(rec));
    });
  }
}

}  // namespace

void verify_main(const VerificationJob& job, const DiskCache* cache, Report& out) {
  const RootDatum& d = RootDatum::get(job.cartan_type);
  std::vector<std::vector<int>> levis = levi_sets(job, d);
  std::vector<IVec> grid = lambda_grid(job, d);

  for (const IVec& lam : grid) {
    std::map<std::string, RankTable> tables;
    for (const auto& I : levis) {
      std::map<std::string, std::string> in{{"type", job.cartan_type},
                                            {"levi", levi_str(I)},
                                            {"lambda", wt_str(lam)}};
      guarded(out, "main " + job.cartan_type + " " + levi_str(I) + " lambda=" + wt_str(lam), in,
              [&] { main_one(job, cache, out, lam, I, tables); });
    }
    if (job.run_localization)
      localization_records(job, out, lam, levis, tables, d.weyl_dim(lam));
  }
}

void verify_slices_suite(const VerificationJob& job, Report& out) {
  const RootDatum& d = RootDatum::get(job.cartan_type);
  std::vector<std::vector<int>> levis = levi_sets(job, d);

  for (const auto& I : levis) {
    std::string where = job.cartan_type + " " + levi_str(I);
    std::map<std::string, std::string> in{{"type", job.cartan_type},
                                          {"levi", levi_str(I)},
                                          {"seed", std::to_string(job.seed)},
                                          {"trials", std::to_string(job.trials)}};

    guarded(out, "slices-section " + where, in, [&] {
      Clock::time_point t0 = Clock::now();
      const SliceGeometry& s = SliceGeometry::get(job.cartan_type, I);
      RationalSampler sample(job.seed, d.rank);
      CheckRecord rec;
      rec.check_id = "slices-section " + where;
      rec.inputs = in;
      rec.status = "PASS";
      long long good = 0;
      for (long long k = 0; k < job.trials; ++k) {
        RatVec c = sample.next();
        RatVec back = s.chi(s.section(c));
        if (back == c) {
          ++good;
        } else if (rec.status == "PASS") {
          rec.status = "FAIL";
          std::string cs;
          for (const Rat& x : c) cs += (cs.empty() ? "" : ",") + rat_to_string(x);
          rec.left = "chi(section(c)) at c=(" + cs + ")";
          rec.right = "c";
        }
      }
      if (rec.status == "PASS") {
        rec.left = "round trips " + std::to_string(good);
        rec.right = "trials " + std::to_string(job.trials);
      }
      rec.runtime = elapsed(job, t0);
      out.checks.push_back(std::move(rec));
    });

    guarded(out, "slices-torsor " + where, in, [&] {
      Clock::time_point t0 = Clock::now();
      const SliceGeometry& s = SliceGeometry::get(job.cartan_type, I);
      RationalSampler sample(job.seed + 1, d.rank);
      CheckRecord rec;
      rec.check_id = "slices-torsor " + where;
      rec.inputs = in;
      rec.status = "PASS";
      long long used = 0, attempts = 0;
      while (used < job.trials && attempts < 50 * job.trials) {
        ++attempts;
        SpacePoint p = s.from_cartan(sample.next());
        if (!p.outer_generic) continue;
        ++used;
        TorsorReport tr = s.torsor_check(p);
        if (tr.status != "PASS" && rec.status == "PASS") {
          rec.status = "FAIL";
          rec.left = "determinant " + rat_to_string(tr.det) + ", orbit span " +
                     std::to_string(tr.orbit_span);
          rec.right = "nonzero determinant and span " + std::to_string(d.n_pos);
        }
      }
      if (rec.status == "PASS") {
        rec.left = "transversal points " + std::to_string(used);
        rec.right = "trials " + std::to_string(job.trials);
        if (used < job.trials) rec.status = "INCONCLUSIVE";
      }
      rec.runtime = elapsed(job, t0);
      out.checks.push_back(std::move(rec));
    });

    const SliceGeometry& s = SliceGeometry::get(job.cartan_type, I);
    if (static_cast<int>(I.size()) < d.rank) {
      guarded(out, "slices-wall " + where, in, [&] {
        CheckRecord rec;
        rec.check_id = "slices-wall " + where;
        rec.inputs = in;
        SpacePoint origin = s.from_cartan(RatVec(d.rank, Rat(0)));
        try {
          (void)s.torsor_check(origin);
          rec.status = "FAIL";
          rec.left = "torsor check ran on a wall point";
          rec.right = "precondition error";
        } catch (const PreconditionError& e) {
          rec.status = "PASS";
          rec.left = e.what();
          rec.right = "precondition error naming the root";
        }
        out.checks.push_back(std::move(rec));
      });
    }
  }

  // Regular centralizer dimension along the full Kostant section.
  std::vector<int> full;
  for (int i = 0; i < d.rank; ++i) full.push_back(i);
  std::map<std::string, std::string> in{{"type", job.cartan_type},
                                        {"seed", std::to_string(job.seed)},
                                        {"trials", std::to_string(job.trials)}};
  guarded(out, "slices-fiber " + job.cartan_type, in, [&] {
    Clock::time_point t0 = Clock::now();
    const SliceGeometry& s = SliceGeometry::get(job.cartan_type, full);
    RationalSampler sample(job.seed + 2, d.rank);
    CheckRecord rec;
    rec.check_id = "slices-fiber " + job.cartan_type;
    rec.inputs = in;
    rec.status = "PASS";
    for (long long k = 0; k < job.trials; ++k) {
      RatVec c = sample.next();
      long long dim = centralizer_dim(s.g, s.section(c));
      if (dim != d.rank && rec.status == "PASS") {
        rec.status = "FAIL";
        std::string cs;
        for (const Rat& x : c) cs += (cs.empty() ? "" : ",") + rat_to_string(x);
        rec.left = "centralizer dim " + std::to_string(dim) + " at c=(" + cs + ")";
        rec.right = "rank " + std::to_string(d.rank);
      }
    }
    if (rec.status == "PASS") {
      rec.left = "centralizer dim " + std::to_string(d.rank) + " at all points";
      rec.right = "rank " + std::to_string(d.rank);
    }
    rec.runtime = elapsed(job, t0);
    out.checks.push_back(std::move(rec));
  });
}

Report run_suite(const VerificationJob& job, const DiskCache* cache) {
  Report out;
  out.version = kToolVersion;
  out.job = job;
  if (job.run_lusztig) verify_lusztig(job, cache, out);
  if (job.run_gr) verify_gr_base(job, cache, out);
  if (job.run_main) verify_main(job, cache, out);
  if (job.run_slices) verify_slices_suite(job, out);
  if (cache != nullptr) out.cache = cache->stats;
  return out;
}

std::string render_report(const Report& r, const std::string& format) {
  if (format == "json") {
    json j;
    j["version"] = r.version;
    j["job"] = json::parse(r.job.to_json());
    json checks = json::array();
    for (const CheckRecord& c : r.checks) {
      json cj;
      cj["check_id"] = c.check_id;
      json in;
      for (const auto& [k, v] : c.inputs) in[k] = v;
      cj["inputs"] = in;
      cj["status"] = c.status;
      cj["left"] = c.left;
      cj["right"] = c.right;
      cj["shift"] = c.shift;
      cj["runtime"] = c.runtime;
      checks.push_back(cj);
    }
    j["checks"] = checks;
    json sm;
    for (const auto& [k, v] : r.summary()) sm[k] = v;
    j["summary"] = sm;
    j["cache"] = json{{"hits", r.cache.hits}, {"misses", r.cache.misses},
                      {"writes", r.cache.writes}};
    return j.dump(2) + "\n";
  }
  require(format == "text", "unknown report format: " + format);

  std::ostringstream os;
  os << "verify " << r.version << "\n";
  for (const CheckRecord& c : r.checks) {
    os << "[" << c.status << "] " << c.check_id << ": " << c.left;
    if (!c.right.empty()) os << (c.status == "FAIL" ? " != " : " | ") << c.right;
    if (c.shift != 0) os << " (shift " << c.shift << ")";
    if (c.runtime > 0) os << " [" << c.runtime << "s]";
    os << "\n";
  }
  os << "summary:";
  for (const auto& [k, v] : r.summary()) os << " " << k << "=" << v;
  os << "\ncache: hits=" << r.cache.hits << " misses=" << r.cache.misses
     << " writes=" << r.cache.writes << "\n";
  return os.str();
}

}  // namespace verify
