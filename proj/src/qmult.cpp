#include "verify/qmult.hpp"

#include <mutex>

namespace verify {

namespace {

struct KostantMemo {
  std::map<std::pair<IVec, int>, PolyZ> memo;
};

KostantMemo& kostant_memo(const std::string& type) {
  static std::mutex mu;
  static std::map<std::string, KostantMemo> memos;
  std::lock_guard<std::mutex> lock(mu);
  return memos[type];
}

// Partitions using only the first k+1 positive roots, by root coordinates.
PolyZ kostant_rec(const RootDatum& d, KostantMemo& m, const IVec& coords, int k) {
  bool zero = true;
  for (long long c : coords) {
    if (c < 0) return PolyZ::zero();
    if (c != 0) zero = false;
  }
  if (zero) return PolyZ::one();
  if (k < 0) return PolyZ::zero();
  auto key = std::make_pair(coords, k);
  auto it = m.memo.find(key);
  if (it != m.memo.end()) return it->second;
  PolyZ val = kostant_rec(d, m, coords, k - 1) +
              PolyZ::q() * kostant_rec(d, m, ivec_sub(coords, d.roots[k].rc), k);
  m.memo.emplace(key, val);
  return val;
}

}  // namespace

PolyZ kostant_partition_q(const RootDatum& d, const IVec& nu) {
  RatVec rc = d.root_coords(nu);
  IVec coords(d.rank, 0);
  for (int j = 0; j < d.rank; ++j) {
    if (boost::multiprecision::denominator(rc[j]) != 1) return PolyZ::zero();
    Int n = boost::multiprecision::numerator(rc[j]);
    if (n < 0) return PolyZ::zero();
    coords[j] = static_cast<long long>(n);
  }
  return kostant_rec(d, kostant_memo(d.cartan_type), coords, d.n_pos - 1);
}

PolyZ lusztig_q_mult(const RootDatum& d, const IVec& lambda, const IVec& mu) {
  IVec target = ivec_add(mu, d.rho);
  PolyZ acc;
  for (int w = 0; w < static_cast<int>(d.welts.size()); ++w) {
    IVec arg = ivec_sub(d.w_act_weight(w, ivec_add(lambda, d.rho)), target);
    PolyZ part = kostant_partition_q(d, arg);
    if (part.is_zero()) continue;
    acc += PolyZ::monomial(d.w_sign(w), 0) * part;
  }
  return acc;
}

long long invariant_form(const RootDatum& d, const IVec& x, const IVec& y) {
  long long acc = 0;
  for (int r = 0; r < d.n_pos; ++r)
    acc = checked_add(acc, checked_mul(d.pairing(x, d.roots[r].coroot),
                                       d.pairing(y, d.roots[r].coroot)));
  return acc;
}

namespace {

long long freudenthal_dom(const RootDatum& d, const IVec& lambda,
                          std::map<IVec, long long>& memo, const IVec& mu) {
  auto it = memo.find(mu);
  if (it != memo.end()) return it->second;
  if (mu == lambda) return memo[mu] = 1;
  if (!d.dominance_leq(mu, lambda)) return memo[mu] = 0;

  long long lam_norm = invariant_form(d, ivec_add(lambda, d.rho), ivec_add(lambda, d.rho));
  long long mu_norm = invariant_form(d, ivec_add(mu, d.rho), ivec_add(mu, d.rho));
  long long denom = lam_norm - mu_norm;
  require(denom > 0, "Freudenthal denominator must be positive below the top");

  long long hmax = d.height_of(lambda);
  long long acc = 0;
  for (int r = 0; r < d.n_pos; ++r) {
    const IVec& alpha = d.roots[r].wt;
    for (long long k = 1;; ++k) {
      IVec nu = ivec_add(mu, ivec_scale(k, alpha));
      // Any weight of the module has height at most that of the highest one.
      if (d.height_of(nu) > hmax) break;
      IVec rep = d.dominant_rep(nu);
      long long mult = d.dominance_leq(rep, lambda) ? freudenthal_dom(d, lambda, memo, rep) : 0;
      if (mult != 0)
        acc = checked_add(acc, checked_mul(mult, invariant_form(d, nu, alpha)));
    }
  }
  long long num = 2 * acc;
  require(num % denom == 0, "Freudenthal recursion is not integral");
  return memo[mu] = num / denom;
}

std::map<IVec, long long>& freudenthal_table(const RootDatum& d, const IVec& lambda) {
  static std::mutex mu;
  static std::map<std::pair<std::string, IVec>, std::map<IVec, long long>> tables;
  std::lock_guard<std::mutex> lock(mu);
  return tables[{d.cartan_type, lambda}];
}

}  // namespace

long long freudenthal_mult(const RootDatum& d, const IVec& lambda, const IVec& mu) {
  require(d.is_dominant(lambda), "highest weight must be dominant");
  return freudenthal_dom(d, lambda, freudenthal_table(d, lambda), d.dominant_rep(mu));
}

std::map<IVec, long long> weight_system(const RootDatum& d, const IVec& lambda) {
  std::map<IVec, long long> out;
  for (const IVec& mu : d.dominant_below(lambda)) {
    long long m = freudenthal_mult(d, lambda, mu);
    if (m == 0) continue;
    for (const IVec& nu : d.weyl_orbit(mu)) out[nu] = m;
  }
  return out;
}

PolyZ graded_character(const LeviDatum& L, const IVec& lambda) {
  PolyZ acc;
  for (const auto& [nu, m] : weight_system(*L.parent, lambda))
    acc += PolyZ::monomial(m, L.parent->pairing(nu, L.two_rho_check_I));
  return acc;
}

PolyZ graded_character_coset(const LeviDatum& L, const IVec& lambda, const IVec& rep) {
  const RootDatum& d = *L.parent;
  PolyZ acc;
  for (const auto& [nu, m] : weight_system(d, lambda)) {
    RatVec rc = d.root_coords(ivec_sub(nu, rep));
    bool in_coset = true;
    for (int j = 0; j < d.rank; ++j) {
      bool levi = L.contains_simple(j);
      if (levi && boost::multiprecision::denominator(rc[j]) != 1) in_coset = false;
      if (!levi && rc[j] != 0) in_coset = false;
    }
    if (in_coset) acc += PolyZ::monomial(m, d.pairing(nu, L.two_rho_check_I));
  }
  return acc;
}

}  // namespace verify
