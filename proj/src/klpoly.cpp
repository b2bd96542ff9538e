#include "verify/klpoly.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>

namespace verify {

BruhatInterval bruhat_interval(const AffWeyl& W, const AffWeylElt& w) {
  require(W.neutral(w), "Bruhat interval needs a neutral top element");
  std::vector<int> word = W.reduced_word(w);

  // Subword property: the interval is the set of elements reachable as
  // products of subwords of any fixed reduced word, collected prefix by
  // prefix.
  std::set<AffWeylElt> cur = {W.identity()};
  for (int letter : word) {
    std::set<AffWeylElt> nxt = cur;
    for (const AffWeylElt& x : cur) nxt.insert(W.mult(x, W.gen(letter)));
    cur.swap(nxt);
  }

  BruhatInterval iv;
  iv.elts.assign(cur.begin(), cur.end());
  std::sort(iv.elts.begin(), iv.elts.end(), [&](const AffWeylElt& a, const AffWeylElt& b) {
    long long la = W.length(a), lb = W.length(b);
    if (la != lb) return la < lb;
    return W.to_string(a) < W.to_string(b);
  });
  int n = static_cast<int>(iv.elts.size());
  iv.lengths.resize(n);
  for (int i = 0; i < n; ++i) {
    iv.lengths[i] = W.length(iv.elts[i]);
    iv.index[iv.elts[i]] = i;
  }

  // Order rows by the lifting property: for s lowering z, x <= z iff
  // (s x < x ? s x <= s z : x <= s z).
  iv.leq.assign(n, std::vector<char>(n, 0));
  iv.leq[0][0] = 1;
  for (int z = 1; z < n; ++z) {
    int s = -1;
    AffWeylElt sz;
    for (int i = 0; i < W.n_gen; ++i) {
      AffWeylElt cand = W.mult(W.gen(i), iv.elts[z]);
      if (W.length(cand) < iv.lengths[z]) {
        s = i;
        sz = cand;
        break;
      }
    }
    require(s >= 0, "no descent in Bruhat interval construction");
    int szi = iv.find(sz);
    require(szi >= 0, "descent left the interval");
    for (int x = 0; x < n; ++x) {
      AffWeylElt sx = W.mult(W.gen(s), iv.elts[x]);
      if (W.length(sx) < iv.lengths[x]) {
        int sxi = iv.find(sx);
        require(sxi >= 0, "descent left the interval");
        iv.leq[z][x] = iv.leq[szi][sxi];
      } else {
        iv.leq[z][x] = iv.leq[szi][x];
      }
    }
    iv.leq[z][z] = 1;
  }
  return iv;
}

KLTable::KLTable(const AffWeyl& W, const AffWeylElt& w) : W_(W), w_(w) {
  iv_ = bruhat_interval(W, w);
  int n = static_cast<int>(iv_.elts.size());
  left_descent_.assign(n, -1);
  for (int z = 1; z < n; ++z)
    for (int i = 0; i < W.n_gen; ++i)
      if (W.length(W.mult(W.gen(i), iv_.elts[z])) < iv_.lengths[z]) {
        left_descent_[z] = i;
        break;
      }
  compute_kl();
}

const PolyZ& KLTable::r_poly(int x, int y) {
  static const PolyZ kZero = PolyZ::zero();
  static const PolyZ kOne = PolyZ::one();
  if (x == y) return kOne;
  if (!iv_.leq_idx(x, y)) return kZero;
  auto key = std::make_pair(x, y);
  auto it = rmemo_.find(key);
  if (it != rmemo_.end()) return it->second;

  int s = left_descent_[y];
  AffWeylElt sy = W_.mult(W_.gen(s), iv_.elts[y]);
  int syi = iv_.find(sy);
  AffWeylElt sx = W_.mult(W_.gen(s), iv_.elts[x]);
  PolyZ val;
  if (W_.length(sx) < iv_.lengths[x]) {
    int sxi = iv_.find(sx);
    val = r_poly(sxi, syi);
  } else {
    int sxi = iv_.find(sx);  // may be -1 when sx leaves the interval
    PolyZ tail = (sxi >= 0) ? r_poly(sxi, syi) : PolyZ::zero();
    val = (PolyZ::q() - PolyZ::one()) * r_poly(x, syi) + PolyZ::q() * tail;
  }
  return rmemo_.emplace(key, std::move(val)).first->second;
}

void KLTable::compute_kl() {
  int n = static_cast<int>(iv_.elts.size());
  int w = n - 1;
  require(iv_.elts[w] == w_, "top element missing from its interval");
  p_.assign(n, PolyZ::zero());
  p_[w] = PolyZ::one();
  for (int y = n - 2; y >= 0; --y) {
    if (!iv_.leq_idx(y, w)) continue;  // cannot happen in a lower interval
    long long N = iv_.lengths[w] - iv_.lengths[y];
    PolyZ s;
    for (int z = y + 1; z < n; ++z)
      if (iv_.leq_idx(y, z) && iv_.leq_idx(z, w)) s += r_poly(y, z) * p_[z];
    p_[y] = (-s).low_part((N + 1) / 2);

    // The defining identity determines the high part as the degree
    // reversal of the low part; verify it exactly.
    PolyZ lhs = p_[y] + s;
    PolyZ rhs = p_[y].reversed().shifted(N);
    require(lhs == rhs, "Kazhdan-Lusztig inversion identity failed");
    require(p_[y].coeff(0) == 1, "Kazhdan-Lusztig polynomial has constant term != 1");
    require(p_[y].all_coeffs_nonneg(), "Kazhdan-Lusztig polynomial has a negative coefficient");
  }
}

PolyZ KLTable::kl_row(const AffWeylElt& y) {
  int i = iv_.find(y);
  return i < 0 ? PolyZ::zero() : p_[i];
}

KLTable& kl_table_cached(const AffWeyl& W, const AffWeylElt& w) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<KLTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  std::string key = W.d.cartan_type + "|" + W.to_string(w);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<KLTable>(W, w)).first;
  return *it->second;
}

PolyZ kl_polynomial(const AffWeyl& W, const AffWeylElt& y, const AffWeylElt& w) {
  auto [omw, wn] = W.split_omega(w);
  AffWeylElt yn = W.mult(W.inverse(omw), y);
  if (!W.neutral(yn)) return PolyZ::zero();
  return kl_table_cached(W, wn).kl_row(yn);
}

PolyZ r_polynomial(const AffWeyl& W, const AffWeylElt& x, const AffWeylElt& y) {
  auto [omy, yn] = W.split_omega(y);
  AffWeylElt xn = W.mult(W.inverse(omy), x);
  if (!W.neutral(xn)) return PolyZ::zero();
  KLTable& table = kl_table_cached(W, yn);
  int xi = table.interval().find(xn);
  int yi = table.interval().find(yn);
  if (xi < 0) return PolyZ::zero();
  return table.r_poly(xi, yi);
}

PolyZ costalk_from_kl(const AffWeyl& W, const IVec& lambda, const IVec& mu, const PolyZ& kl) {
  require(W.d.is_dominant(lambda) && W.d.is_dominant(mu),
          "costalk series needs dominant labels");
  if (!W.d.in_root_lattice(ivec_sub(lambda, mu))) return PolyZ::zero();
  AffWeylElt nl = W.double_coset_max(lambda);
  AffWeylElt nm = W.double_coset_max(mu);
  long long delta = W.length(nl) - W.length(nm);
  require(delta % 2 == 0, "length gap between double coset tops is odd");
  return kl.reversed().shifted(delta / 2);
}

PolyZ costalk_poincare(const AffWeyl& W, const IVec& lambda, const IVec& mu) {
  require(W.d.is_dominant(lambda) && W.d.is_dominant(mu),
          "costalk series needs dominant labels");
  if (!W.d.in_root_lattice(ivec_sub(lambda, mu))) return PolyZ::zero();
  PolyZ p = kl_polynomial(W, W.double_coset_max(mu), W.double_coset_max(lambda));
  return costalk_from_kl(W, lambda, mu, p);
}

}  // namespace verify
