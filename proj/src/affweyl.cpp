#include "verify/affweyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace verify {

AffWeyl::AffWeyl(const RootDatum& datum) : d(datum), n_gen(datum.rank + 1) {
  // The affine generator is t_c * s_c where the coroot of c is the highest
  // coroot; then the translation lattice pairs with it inside {0, 1}.
  const Root& c = d.roots[d.highest_coroot_root];
  s0_ = {c.wt, d.reflection_in_root(d.highest_coroot_root)};
  require(length(s0_) == 1, "affine generator does not have length one");

  // Length-zero elements: one per weight-lattice class modulo the root
  // lattice. A small box of translation parts suffices at this rank.
  RatMat cm = rat_mat(d.rank, d.rank);
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) cm[i][j] = Rat(d.cartan[i][j]);
  Rat dc = det(cm);
  require(boost::multiprecision::denominator(dc) == 1, "Cartan determinant not integral");
  long long target = static_cast<long long>(boost::multiprecision::numerator(dc));
  require(target >= 1, "Cartan determinant must be positive");

  std::set<std::string> classes_seen;
  IVec box(d.rank, -2);
  while (true) {
    for (int w = 0; w < static_cast<int>(d.welts.size()); ++w) {
      AffWeylElt x{box, w};
      if (length(x) != 0) continue;
      std::string frac;
      for (const Rat& r : d.root_coords(x.lam)) {
        Rat f = r - Rat(boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r));
        if (f < 0) f += 1;
        frac += rat_to_string(f) + ";";
      }
      if (classes_seen.insert(frac).second) omega_.push_back(x);
    }
    // advance the box counter over [-2,2]^rank
    int i = 0;
    while (i < d.rank && box[i] == 2) box[i++] = -2;
    if (i == d.rank) break;
    ++box[i];
  }
  require(static_cast<long long>(omega_.size()) == target,
          "length-zero subgroup has unexpected size");
  std::sort(omega_.begin(), omega_.end());
  for (const AffWeylElt& a : omega_)
    for (const AffWeylElt& b : omega_) {
      require(length(mult(a, b)) == 0, "length-zero elements do not close under the product");
      require(length(inverse(a)) == 0, "length-zero elements not closed under inverse");
    }
}

const AffWeyl& AffWeyl::get(const std::string& type) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<AffWeyl>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(type);
  if (it == cache.end())
    it = cache.emplace(type, std::make_unique<AffWeyl>(RootDatum::get(type))).first;
  return *it->second;
}

AffWeylElt AffWeyl::gen(int i) const {
  require(i >= 0 && i <= d.rank, "generator index out of range");
  if (i == 0) return s0_;
  return finite(d.simple_w(i - 1));
}

AffWeylElt AffWeyl::mult(const AffWeylElt& a, const AffWeylElt& b) const {
  return {ivec_add(a.lam, d.w_act_weight(a.w, b.lam)), d.wmul[a.w][b.w]};
}

AffWeylElt AffWeyl::inverse(const AffWeylElt& a) const {
  int wi = d.winv[a.w];
  return {ivec_neg(d.w_act_weight(wi, a.lam)), wi};
}

long long AffWeyl::length(const AffWeylElt& x) const {
  long long len = 0;
  int wi = d.winv[x.w];
  for (int r = 0; r < d.n_pos; ++r) {
    long long p = d.pairing(x.lam, d.roots[r].coroot);
    bool winv_pos = d.w_act_root(wi, r) < d.n_pos;
    len += winv_pos ? std::llabs(p) : std::llabs(p - 1);
  }
  return len;
}

std::pair<AffWeylElt, AffWeylElt> AffWeyl::split_omega(const AffWeylElt& x) const {
  for (const AffWeylElt& om : omega_) {
    AffWeylElt rest = mult(inverse(om), x);
    if (neutral(rest)) return {om, rest};
  }
  throw VerifyError("element has no length-zero factor");
}

std::vector<int> AffWeyl::reduced_word(const AffWeylElt& x) const {
  require(neutral(x), "reduced words exist only in the neutral component");
  std::vector<int> word;
  AffWeylElt cur = x;
  long long len = length(cur);
  while (len > 0) {
    bool found = false;
    for (int i = 0; i < n_gen; ++i) {
      AffWeylElt nxt = mult(gen(i), cur);
      long long nl = length(nxt);
      if (nl < len) {
        word.push_back(i);
        cur = nxt;
        len = nl;
        found = true;
        break;
      }
    }
    require(found, "no descent found for a positive-length element");
  }
  require(cur == identity(), "descent walk did not reach the identity");
  return word;
}

AffWeylElt AffWeyl::from_word(const std::vector<int>& word) const {
  AffWeylElt x = identity();
  for (int i : word) x = mult(x, gen(i));
  return x;
}

AffWeylElt AffWeyl::double_coset_max(const IVec& mu) const {
  AffWeylElt best = translation(mu);
  long long best_len = length(best);
  int ties = 1;
  int nw = static_cast<int>(d.welts.size());
  std::set<AffWeylElt> seen;
  for (int u = 0; u < nw; ++u)
    for (int v = 0; v < nw; ++v) {
      AffWeylElt x = mult(finite(u), mult(translation(mu), finite(v)));
      if (!seen.insert(x).second) continue;
      long long len = length(x);
      if (len > best_len) {
        best = x;
        best_len = len;
        ties = 1;
      } else if (len == best_len && !(x == best)) {
        ++ties;
      }
    }
  require(ties == 1, "double coset has no unique longest element");
  return best;
}

std::string AffWeyl::to_string(const AffWeylElt& x) const {
  std::string s = "t[";
  for (int i = 0; i < d.rank; ++i) {
    if (i) s += ",";
    s += std::to_string(x.lam[i]);
  }
  s += "]*w[";
  const auto& word = d.welts[x.w].word;
  for (size_t k = 0; k < word.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(word[k] + 1);
  }
  return s + "]";
}

}  // namespace verify
