#include "verify/chevalley.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "verify/qmult.hpp"

namespace verify {

namespace {

// Length of the alpha-string through beta below beta: max k with
// beta - k*alpha still a root.
long long string_down(const RootDatum& d, int ra, int rb) {
  long long k = 0;
  IVec cur = d.roots[rb].wt;
  while (true) {
    cur = ivec_sub(cur, d.roots[ra].wt);
    if (d.root_index(cur) < 0) break;
    ++k;
  }
  return k;
}

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(const RootDatum& datum)
    : d(datum), dim(datum.rank + 2 * datum.n_pos) {
  build(1);
  if (!jacobi_holds()) {
    build(-1);
    require(jacobi_holds(), "no sign assignment satisfies the Jacobi identity");
  }
}

const ChevalleyAlgebra& ChevalleyAlgebra::get(const std::string& type) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<ChevalleyAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(type);
  if (it == cache.end())
    it = cache.emplace(type, std::make_unique<ChevalleyAlgebra>(RootDatum::get(type))).first;
  return *it->second;
}

void ChevalleyAlgebra::build(long long free_sign) {
  int nr = 2 * d.n_pos;
  nmat_.assign(nr, std::vector<long long>(nr, 0));

  // Positive-positive constants: the pair with the smallest first index among
  // those summing to a given root gets a positive sign; at this rank at most
  // one further unordered pair exists and carries the remaining free sign.
  int free_pairs = 0;
  for (int rg = 0; rg < d.n_pos; ++rg) {
    std::vector<std::pair<int, int>> pairs;
    for (int ra = 0; ra < d.n_pos; ++ra) {
      int rb = d.root_index(ivec_sub(d.roots[rg].wt, d.roots[ra].wt));
      if (rb >= 0 && rb < d.n_pos && ra < rb) pairs.emplace_back(ra, rb);
    }
    std::sort(pairs.begin(), pairs.end());
    for (size_t k = 0; k < pairs.size(); ++k) {
      auto [ra, rb] = pairs[k];
      long long mag = string_down(d, ra, rb) + 1;
      long long sign = 1;
      if (k > 0) {
        sign = free_sign;
        ++free_pairs;
      }
      nmat_[ra][rb] = sign * mag;
      nmat_[rb][ra] = -sign * mag;
    }
  }
  require(free_pairs <= 1, "more than one undetermined sign at this rank");

  // Negative-negative from positive-positive.
  for (int ra = 0; ra < d.n_pos; ++ra)
    for (int rb = 0; rb < d.n_pos; ++rb) {
      nmat_[ra + d.n_pos][rb + d.n_pos] = -nmat_[ra][rb];
    }

  // Mixed signs via the cyclic relation N_{x,y}/|z|^2 = N_{y,z}/|x|^2 for
  // x + y + z = 0, reduced to the positive-positive table.
  auto len2 = [&](int r) { return invariant_form(d, d.roots[r].wt, d.roots[r].wt); };
  for (int ra = 0; ra < d.n_pos; ++ra)
    for (int rb = 0; rb < d.n_pos; ++rb) {
      if (ra == rb) continue;
      IVec delta = ivec_sub(d.roots[ra].wt, d.roots[rb].wt);
      int rd = d.root_index(delta);
      if (rd < 0) continue;
      Rat val;
      if (rd < d.n_pos) {
        // alpha - beta positive: [e_alpha, e_{-beta}] lands on e_{alpha-beta}.
        val = Rat(-len2(rd) * nmat_[rb][rd], len2(ra));
      } else {
        int re = rd - d.n_pos;  // beta - alpha positive
        val = Rat(len2(re) * nmat_[re][ra], len2(rb));
      }
      require(boost::multiprecision::denominator(val) == 1, "mixed constant is not integral");
      long long n = static_cast<long long>(boost::multiprecision::numerator(val));
      nmat_[ra][rb + d.n_pos] = n;
    }

  // (negative, positive) entries by antisymmetry.
  for (int ra = 0; ra < d.n_pos; ++ra)
    for (int rb = 0; rb < d.n_pos; ++rb)
      nmat_[rb + d.n_pos][ra] = -nmat_[ra][rb + d.n_pos];

  // Assemble the full bracket table.
  table_.assign(dim, std::vector<RatVec>(dim, zero()));
  for (int i = 0; i < d.rank; ++i)
    for (int r = 0; r < nr; ++r) {
      RatVec v = zero();
      v[e_index(r)] = Rat(d.roots[r].wt[i]);
      table_[h_index(i)][e_index(r)] = v;
      RatVec w = zero();
      w[e_index(r)] = Rat(-d.roots[r].wt[i]);
      table_[e_index(r)][h_index(i)] = w;
    }
  for (int r = 0; r < nr; ++r)
    for (int s = 0; s < nr; ++s) {
      IVec sum = ivec_add(d.roots[r].wt, d.roots[s].wt);
      RatVec v = zero();
      if (ivec_is_zero(sum)) {
        for (int i = 0; i < d.rank; ++i) v[h_index(i)] = Rat(d.roots[r].coroot[i]);
      } else {
        int rz = d.root_index(sum);
        if (rz >= 0) v[e_index(rz)] = Rat(nmat_[r][s]);
      }
      table_[e_index(r)][e_index(s)] = v;
    }
}

bool ChevalleyAlgebra::jacobi_holds() const {
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) {
      // Antisymmetry of the assembled table.
      RatVec ab = table_[a][b];
      for (int k = 0; k < dim; ++k)
        if (ab[k] + table_[b][a][k] != 0) return false;
      for (int c = b + 1; c < dim; ++c) {
        RatVec acc = bracket(table_[a][b], basis(c));
        RatVec t2 = bracket(table_[b][c], basis(a));
        RatVec t3 = bracket(table_[c][a], basis(b));
        for (int k = 0; k < dim; ++k)
          if (acc[k] + t2[k] + t3[k] != 0) return false;
      }
    }
  return true;
}

RatVec ChevalleyAlgebra::basis(int idx) const {
  RatVec v = zero();
  v[idx] = Rat(1);
  return v;
}

RatVec ChevalleyAlgebra::bracket(const RatVec& x, const RatVec& y) const {
  RatVec out = zero();
  for (int a = 0; a < dim; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < dim; ++b) {
      if (y[b] == 0) continue;
      const RatVec& t = table_[a][b];
      Rat c = x[a] * y[b];
      for (int k = 0; k < dim; ++k)
        if (t[k] != 0) out[k] += c * t[k];
    }
  }
  return out;
}

RatMat ChevalleyAlgebra::ad(const RatVec& x) const {
  RatMat m = rat_mat(dim, dim);
  for (int b = 0; b < dim; ++b) {
    RatVec col = bracket(x, basis(b));
    for (int a = 0; a < dim; ++a) m[a][b] = col[a];
  }
  return m;
}

IVec ChevalleyAlgebra::basis_weight(int idx) const {
  if (idx < d.rank) return IVec(d.rank, 0);
  return d.roots[root_of(idx)].wt;
}

}  // namespace verify
