#include "verify/engine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "verify/linalg.hpp"

namespace verify {

PolyZ GradedSummary::hilbert() const {
  PolyZ h;
  for (size_t k = 0; k < dims.size(); ++k)
    if (dims[k] != 0) h += PolyZ::monomial(dims[k], lo + static_cast<long long>(k));
  return h;
}

long long GradedSummary::total() const {
  long long t = 0;
  for (long long v : dims) t = checked_add(t, v);
  return t;
}

const GradedSummary* SpectralModule::find(const std::string& label) const {
  for (const auto& c : cosets)
    if (c.label == label) return &c;
  return nullptr;
}

namespace {

// One basis monomial of the section space: a product of slice coordinates
// (root-space exponents epow, Cartan exponents hpow) times the vidx-th basis
// vector of the mu weight space of the module.
struct SliceMon {
  IVec mu;
  Mon epow;
  Mon hpow;
  int vidx = 0;
};

using MonKey = std::tuple<IVec, Mon, Mon, int>;

MonKey key_of(const SliceMon& m) { return {m.mu, m.epow, m.hpow, m.vidx}; }

using Terms = std::map<MonKey, Rat>;

void add_term(Terms& t, const MonKey& k, const Rat& c) {
  if (c == 0) return;
  auto it = t.find(k);
  if (it == t.end()) {
    t.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

// Matrix product that keeps explicit shapes even when a dimension is zero.
RatMat compose(const RatMat& a, size_t acols, const RatMat& b, size_t bcols) {
  RatMat r = rat_mat(a.size(), bcols);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t t = 0; t < acols; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < bcols; ++j)
        if (b[t][j] != 0) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

struct Solver {
  const HWModule& M;
  const ChevalleyAlgebra& g;
  const RootDatum& d;
  LeviDatum L;
  std::vector<bool> in_levi;
  std::vector<long long> ydeg;        // degree of each root coordinate
  std::vector<int> simple_root_idx;   // root index of each simple root
  // per simple i: (source root, target root = source + alpha_i, bracket constant)
  std::vector<std::vector<std::tuple<int, int, long long>>> raise_pairs;
  std::vector<int> outer_pos, levi_pos;  // positive roots outside / inside the Levi

  Solver(const HWModule& mod, const std::vector<int>& I)
      : M(mod), g(mod.g), d(mod.g.d), L(levi_datum(mod.g.d, I)) {
    in_levi.assign(d.rank, false);
    for (int i : L.I) in_levi[i] = true;
    ydeg.resize(d.n_pos);
    for (int r = 0; r < d.n_pos; ++r)
      ydeg[r] = 2 + d.pairing(d.roots[r].wt, L.two_rho_check_I);
    simple_root_idx.resize(d.rank);
    raise_pairs.resize(d.rank);
    for (int i = 0; i < d.rank; ++i) {
      int rp = d.root_index(d.cartan[i]);
      require(rp >= 0 && rp < d.n_pos, "simple root lookup failed");
      simple_root_idx[i] = rp;
      for (int b = 0; b < d.n_pos; ++b) {
        int gi = d.root_index(ivec_add(d.cartan[i], d.roots[b].wt));
        if (gi < 0) continue;
        long long n = g.n_constant(rp, b);
        if (n != 0) raise_pairs[i].emplace_back(b, gi, n);
      }
    }
    for (int r = 0; r < d.n_pos; ++r) {
      bool levi_root = true;
      for (int j = 0; j < d.rank; ++j)
        if (!in_levi[j] && d.roots[r].rc[j] != 0) levi_root = false;
      (levi_root ? levi_pos : outer_pos).push_back(r);
    }
  }

  long long wdeg(const IVec& mu) const { return -d.pairing(mu, L.two_rho_check_I); }

  // Degree-shifting part of the i-th generator: the module action plus the
  // linear coefficients of the coadjoint vector field. Shifts the character
  // by the i-th simple root.
  void apply_d1(int i, const SliceMon& m, const Rat& scale, Terms& out) const {
    const RatMat& em = M.e_matrix(i, m.mu);
    if (!em.empty()) {
      IVec up = ivec_add(m.mu, d.cartan[i]);
      for (size_t s = 0; s < em.size(); ++s) {
        const Rat& c = em[s][m.vidx];
        if (c != 0) add_term(out, {up, m.epow, m.hpow, static_cast<int>(s)}, c * scale);
      }
    }
    int rp = simple_root_idx[i];
    if (m.epow[rp] > 0) {
      for (int j = 0; j < d.rank; ++j) {
        long long coef = -d.cartan[i][j];
        if (coef == 0) continue;
        SliceMon t = m;
        t.epow[rp] -= 1;
        t.hpow[j] += 1;
        add_term(out, key_of(t), Rat(coef * m.epow[rp]) * scale);
      }
    }
    for (const auto& [b, gi, n] : raise_pairs[i]) {
      if (m.epow[gi] > 0) {
        SliceMon t = m;
        t.epow[gi] -= 1;
        t.epow[b] += 1;
        add_term(out, key_of(t), Rat(n * m.epow[gi]) * scale);
      }
    }
  }

  // Constant part of the i-th generator (only for Levi generators): the
  // derivative along the Cartan direction produced by bracketing with the
  // base point of the slice. Preserves the character.
  void apply_d0(int i, const SliceMon& m, const Rat& scale, Terms& out) const {
    if (m.hpow[i] > 0) {
      SliceMon t = m;
      t.hpow[i] -= 1;
      add_term(out, key_of(t), Rat(m.hpow[i]) * scale);
    }
  }

  using Buckets = std::map<IVec, std::map<long long, std::vector<SliceMon>>>;

  // All basis monomials of degree <= cutoff whose character lies in the class
  // of rep: exponents over the positive roots outside the Levi are pinned by
  // the class budget, Levi exponents and Cartan exponents by the degree.
  Buckets enumerate_coset(const IVec& rep, long long cutoff) const {
    Buckets out;
    RatVec rc_rep = d.root_coords(rep);
    for (const auto& [mu, sp] : M.spaces()) {
      RatVec rc_mu = d.root_coords(mu);
      IVec budget(d.rank, 0);
      bool ok = true;
      for (int j = 0; j < d.rank && ok; ++j) {
        Rat diff = rc_mu[j] - rc_rep[j];
        if (denominator(diff) != 1) ok = false;
        else budget[j] = static_cast<long long>(numerator(diff));
      }
      if (!ok) continue;
      for (int j = 0; j < d.rank; ++j)
        if (!in_levi[j] && budget[j] < 0) ok = false;
      if (!ok) continue;

      Mon epow(d.n_pos, 0);
      enum_outer(mu, sp.dim, budget, 0, epow, cutoff, out);
    }
    for (auto& [chi, per_deg] : out)
      for (auto& [n, list] : per_deg) {
        (void)n;
        std::sort(list.begin(), list.end(),
                  [](const SliceMon& a, const SliceMon& b) { return key_of(a) < key_of(b); });
      }
    return out;
  }

  void enum_outer(const IVec& mu, int mudim, const IVec& left, size_t oi, Mon& epow,
                  long long cutoff, Buckets& out) const {
    if (oi == outer_pos.size()) {
      for (int j = 0; j < d.rank; ++j)
        if (!in_levi[j] && left[j] != 0) return;
      long long base = wdeg(mu);
      for (int r : outer_pos) base += epow[r] * ydeg[r];
      enum_levi(mu, mudim, 0, epow, base, cutoff, out);
      return;
    }
    int r = outer_pos[oi];
    const IVec& rc = d.roots[r].rc;
    long long maxa = -1;
    for (int j = 0; j < d.rank; ++j) {
      if (!in_levi[j] && rc[j] > 0) {
        long long b = left[j] / rc[j];
        if (maxa < 0 || b < maxa) maxa = b;
        if (left[j] < 0) return;
      }
    }
    IVec nleft = left;
    for (long long a = 0; a <= maxa; ++a) {
      epow[r] = static_cast<int>(a);
      enum_outer(mu, mudim, nleft, oi + 1, epow, cutoff, out);
      for (int j = 0; j < d.rank; ++j) nleft[j] -= rc[j];
    }
    epow[r] = 0;
  }

  void enum_levi(const IVec& mu, int mudim, size_t li, Mon& epow, long long base,
                 long long cutoff, Buckets& out) const {
    if (li == levi_pos.size()) {
      if (base > cutoff) return;
      IVec chi = mu;
      for (int r = 0; r < d.n_pos; ++r)
        if (epow[r] > 0) chi = ivec_sub(chi, ivec_scale(epow[r], d.roots[r].wt));
      Mon hpow(d.rank, 0);
      emit_with_cartan(mu, mudim, epow, hpow, 0, base, cutoff, chi, out);
      return;
    }
    int r = levi_pos[li];
    // Levi-side coordinates always have degree at least 4
    for (long long a = 0; base + a * ydeg[r] <= cutoff; ++a) {
      epow[r] = static_cast<int>(a);
      enum_levi(mu, mudim, li + 1, epow, base + a * ydeg[r], cutoff, out);
    }
    epow[r] = 0;
  }

  void emit_with_cartan(const IVec& mu, int mudim, const Mon& epow, Mon& hpow, int hj,
                        long long deg, long long cutoff, const IVec& chi, Buckets& out) const {
    if (hj == d.rank) {
      auto& list = out[chi][deg];
      for (int v = 0; v < mudim; ++v) list.push_back(SliceMon{mu, epow, hpow, v});
      return;
    }
    for (long long k = 0; deg + 2 * k <= cutoff; ++k) {
      hpow[hj] = static_cast<int>(k);
      emit_with_cartan(mu, mudim, epow, hpow, hj + 1, deg + 2 * k, cutoff, chi, out);
    }
    hpow[hj] = 0;
  }

  // Invariants in one character class at one degree: stream over the full
  // characters of the class in decreasing Levi height, keeping the solution
  // space as a parameter space with one coordinate map per character.
  long long solve_degree(const Buckets& buckets, long long n) const {
    std::map<IVec, const std::vector<SliceMon>*> present;
    for (const auto& [chi, per_deg] : buckets) {
      auto it = per_deg.find(n);
      if (it != per_deg.end() && !it->second.empty()) present.emplace(chi, &it->second);
    }
    if (present.empty()) return 0;

    std::set<IVec> cset;
    for (const auto& [chi, list] : present) {
      (void)list;
      cset.insert(chi);
      for (int i : L.I) cset.insert(ivec_sub(chi, d.cartan[i]));
    }
    std::vector<IVec> order(cset.begin(), cset.end());
    std::sort(order.begin(), order.end(), [&](const IVec& a, const IVec& b) {
      long long ha = d.pairing(a, L.two_rho_check_I);
      long long hb = d.pairing(b, L.two_rho_check_I);
      if (ha != hb) return ha > hb;
      return a > b;
    });

    size_t nparams = 0;
    std::map<IVec, RatMat> X;                                 // chi -> dimU x nparams
    std::map<IVec, const std::vector<SliceMon>*> bases;       // chi -> basis or null

    for (const IVec& chi : order) {
      auto pit = present.find(chi);
      const std::vector<SliceMon>* basis = pit == present.end() ? nullptr : pit->second;
      size_t du = basis ? basis->size() : 0;

      std::map<std::pair<int, MonKey>, size_t> row_index;
      std::vector<RatVec> rows;
      auto row = [&](int i, const MonKey& k) -> RatVec& {
        auto rk = std::make_pair(i, k);
        auto it = row_index.find(rk);
        if (it == row_index.end()) {
          it = row_index.emplace(rk, rows.size()).first;
          rows.emplace_back(du + nparams, Rat(0));
        }
        return rows[it->second];
      };

      for (int i = 0; i < d.rank; ++i) {
        if (basis) {
          for (size_t c = 0; c < du; ++c) {
            Terms t;
            apply_d1(i, (*basis)[c], Rat(1), t);
            for (const auto& [k, v] : t) row(i, k)[c] += v;
          }
        }
        if (in_levi[i]) {
          IVec nb = ivec_add(chi, d.cartan[i]);
          auto xit = X.find(nb);
          if (xit != X.end() && bases.at(nb) != nullptr && nparams > 0) {
            const std::vector<SliceMon>& nbasis = *bases.at(nb);
            for (size_t c2 = 0; c2 < nbasis.size(); ++c2) {
              Terms t;
              apply_d0(i, nbasis[c2], Rat(1), t);
              for (const auto& [k, v] : t) {
                RatVec& rr = row(i, k);
                for (size_t p = 0; p < nparams; ++p)
                  if (xit->second[c2][p] != 0) rr[du + p] += v * xit->second[c2][p];
              }
            }
          }
        }
      }

      std::vector<RatVec> ker;
      if (rows.empty()) {
        for (size_t t = 0; t < du + nparams; ++t) {
          RatVec v(du + nparams, Rat(0));
          v[t] = 1;
          ker.push_back(std::move(v));
        }
      } else {
        ker = nullspace(rows);
      }
      size_t m2 = ker.size();

      RatMat xc = rat_mat(du, m2);
      RatMat p = rat_mat(nparams, m2);
      for (size_t t = 0; t < m2; ++t) {
        for (size_t r = 0; r < du; ++r) xc[r][t] = ker[t][r];
        for (size_t j = 0; j < nparams; ++j) p[j][t] = ker[t][du + j];
      }
      for (auto& [chi2, x2] : X) {
        (void)chi2;
        x2 = compose(x2, nparams, p, m2);
      }
      X.emplace(chi, std::move(xc));
      bases.emplace(chi, basis);
      nparams = m2;
    }

    // Re-apply every generator to each solved section and insist on exact
    // vanishing; this re-checks all equations after the parameter updates.
    for (size_t t = 0; t < nparams; ++t) {
      std::map<std::pair<int, MonKey>, Rat> image;
      for (const auto& [chi, x2] : X) {
        (void)chi;
        const std::vector<SliceMon>* basis = bases.at(chi);
        if (!basis) continue;
        for (size_t r = 0; r < basis->size(); ++r) {
          const Rat& c = x2[r][t];
          if (c == 0) continue;
          for (int i = 0; i < d.rank; ++i) {
            Terms terms;
            apply_d1(i, (*basis)[r], c, terms);
            if (in_levi[i]) apply_d0(i, (*basis)[r], c, terms);
            for (const auto& [k, v] : terms) {
              auto key = std::make_pair(i, k);
              auto it = image.find(key);
              if (it == image.end()) {
                image.emplace(key, v);
              } else {
                it->second += v;
                if (it->second == 0) image.erase(it);
              }
            }
          }
        }
      }
      require(image.empty(), "solved section is not annihilated by the generators");
    }
    return static_cast<long long>(nparams);
  }

  GradedSummary solve_coset(const std::string& label, const IVec& rep, long long cutoff) const {
    Buckets buckets = enumerate_coset(rep, cutoff);
    GradedSummary s;
    s.label = label;
    s.rep = rep;
    s.shift = -(d.pairing(rep, d.two_rho_check) - d.pairing(rep, L.two_rho_check_I));
    long long lo = cutoff;
    for (const auto& [chi, per_deg] : buckets) {
      (void)chi;
      if (!per_deg.empty()) lo = std::min(lo, per_deg.begin()->first);
    }
    s.lo = lo;
    s.hi = cutoff;
    s.dims.assign(static_cast<size_t>(s.hi - s.lo + 1), 0);
    for (long long n = s.lo; n <= s.hi; ++n)
      s.dims[static_cast<size_t>(n - s.lo)] = solve_degree(buckets, n);
    return s;
  }
};

}  // namespace

SpectralModule spectral_module(const HWModule& M, const std::vector<int>& I, long long cutoff) {
  const RootDatum& d = M.g.d;
  Solver solver(M, I);
  SpectralModule out;
  out.cartan_type = d.cartan_type;
  out.I = solver.L.I;
  out.lambda = M.lambda;
  out.cutoff = cutoff;
  for (const auto& part : coset_decompose(d, solver.L.I, M))
    out.cosets.push_back(solver.solve_coset(part.label, part.rep, cutoff));

  // The highest-weight section is invariant and sits at the floor degree of
  // its class; its class must therefore be populated there.
  long long floor_deg = -d.pairing(M.lambda, solver.L.two_rho_check_I);
  require(floor_deg <= cutoff, "cutoff excludes the highest-weight section");
  const GradedSummary* own = out.find(coset_label(d, solver.L.I, M.lambda));
  require(own != nullptr, "class of the highest weight is missing");
  require(own->lo <= floor_deg && own->dims[static_cast<size_t>(floor_deg - own->lo)] >= 1,
          "highest-weight section not found at its floor degree");
  return out;
}

GradedSummary gr_base_module(const HWModule& M, const IVec& mu, long long cutoff) {
  Solver solver(M, {});
  return solver.solve_coset(coset_label(M.g.d, {}, mu), mu, cutoff);
}

FreenessResult freeness_test(const GradedSummary& s, const std::vector<long long>& degrees) {
  FreenessResult r;
  PolyZ h = s.hilbert();
  if (h.is_zero()) {
    r.numerator = PolyZ::zero();
    r.rank = 0;
    r.status = "PASS";
    r.note = "no sections in the window";
    return r;
  }
  PolyZ num = h;
  for (long long dd : degrees) num *= PolyZ::one() - PolyZ::monomial(1, 2 * dd);
  num = num.window(s.lo, s.hi);
  r.numerator = num;
  r.rank = num.at_one();
  if (!num.all_coeffs_nonneg()) {
    r.status = "FAIL";
    r.note = "negative numerator coefficient";
    return r;
  }
  long long span = s.hi - s.lo + 1;
  if (!num.is_zero() && num.hi() > s.hi - span / 3) {
    r.status = "INCONCLUSIVE";
    r.note = "numerator reaches the top third of the window";
    return r;
  }
  r.status = "PASS";
  return r;
}

}  // namespace verify
