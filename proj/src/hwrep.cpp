#include "verify/hwrep.hpp"

#include <algorithm>
#include <utility>

#include "verify/qmult.hpp"

namespace verify {

namespace {

int first_nonzero(const Mon& m) {
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) return static_cast<int>(i);
  return -1;
}

void add_term(ModElt& x, const Mon& m, const Rat& c) {
  if (c == 0) return;
  auto it = x.find(m);
  if (it == x.end()) {
    x.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) x.erase(it);
  }
}

// All exponent vectors over the positive roots whose weighted sum of
// root coordinates equals coords, in ascending lexicographic order.
void enum_monomials_rec(const RootDatum& d, size_t r, Mon& cur, IVec& left,
                        std::vector<Mon>& out) {
  if (r == static_cast<size_t>(d.n_pos)) {
    if (ivec_is_zero(left)) out.push_back(cur);
    return;
  }
  const IVec& rc = d.roots[r].rc;
  long long maxa = -1;
  for (int i = 0; i < d.rank; ++i) {
    if (rc[i] > 0) {
      long long b = left[i] / rc[i];
      if (maxa < 0 || b < maxa) maxa = b;
    }
  }
  for (long long a = 0; a <= maxa; ++a) {
    cur[r] = static_cast<int>(a);
    enum_monomials_rec(d, r + 1, cur, left, out);
    for (int i = 0; i < d.rank; ++i) left[i] -= rc[i];
  }
  for (int i = 0; i < d.rank; ++i) left[i] += (maxa + 1) * rc[i];
  cur[r] = 0;
}

std::vector<Mon> enum_monomials(const RootDatum& d, const IVec& coords) {
  std::vector<Mon> out;
  Mon cur(d.n_pos, 0);
  IVec left = coords;
  enum_monomials_rec(d, 0, cur, left, out);
  return out;
}

}  // namespace

IVec HWModule::mon_weight(const Mon& m) const {
  IVec w = lambda;
  for (size_t r = 0; r < m.size(); ++r)
    if (m[r] > 0) w = ivec_sub(w, ivec_scale(m[r], g.d.roots[r].wt));
  return w;
}

// Left multiplication by the lowering operator of positive root r, with the
// result rewritten in the fixed monomial order. Commutators of two lowering
// operators only produce roots of larger height, hence larger index, so the
// rewriting terminates.
ModElt HWModule::mult_f(int r, const Mon& m) {
  const RootDatum& d = g.d;
  int j = first_nonzero(m);
  if (j < 0 || j >= r) {
    Mon mm = m;
    mm[r] += 1;
    return {{mm, Rat(1)}};
  }
  Mon mp = m;
  mp[j] -= 1;
  ModElt out = mult_f_elt(j, mult_f(r, mp));
  IVec sum = ivec_add(d.roots[r].wt, d.roots[j].wt);
  int ri = d.root_index(sum);
  if (ri >= 0) {
    long long n = g.n_constant(d.n_pos + r, d.n_pos + j);
    for (const auto& [mm, c] : mult_f(ri, mp)) add_term(out, mm, c * n);
  }
  return out;
}

ModElt HWModule::mult_f_elt(int r, const ModElt& x) {
  ModElt out;
  for (const auto& [m, c] : x)
    for (const auto& [mm, cc] : mult_f(r, m)) add_term(out, mm, c * cc);
  return out;
}

// Action of the raising operator of positive root r on a lowering monomial
// applied to the highest vector; recursion strips the leading factor.
const ModElt& HWModule::act_e(int r, const Mon& m) {
  auto key = std::make_pair(r, m);
  auto found = act_memo_.find(key);
  if (found != act_memo_.end()) return found->second;
  const RootDatum& d = g.d;
  ModElt out;
  int j = first_nonzero(m);
  if (j >= 0) {
    Mon mp = m;
    mp[j] -= 1;
    out = mult_f_elt(j, act_e(r, mp));
    if (r == j) {
      long long sc = d.pairing(mon_weight(mp), d.roots[r].coroot);
      add_term(out, mp, Rat(sc));
    } else {
      IVec diff = ivec_sub(d.roots[r].wt, d.roots[j].wt);
      int ri = d.root_index(diff);
      if (ri >= 0) {
        long long n = g.n_constant(r, d.n_pos + j);
        if (ri < d.n_pos) {
          for (const auto& [mm, c] : act_e(ri, mp)) add_term(out, mm, c * n);
        } else {
          for (const auto& [mm, c] : mult_f(ri - d.n_pos, mp)) add_term(out, mm, c * n);
        }
      }
    }
  }
  auto ins = act_memo_.emplace(std::move(key), std::move(out));
  return ins.first->second;
}

Rat HWModule::shapovalov(const Mon& a, const Mon& b) {
  if (mon_weight(a) != mon_weight(b)) return Rat(0);
  const Mon& x = std::min(a, b);
  const Mon& y = std::max(a, b);
  int j = first_nonzero(x);
  if (j < 0) return Rat(1);
  auto key = std::make_pair(x, y);
  auto found = pair_memo_.find(key);
  if (found != pair_memo_.end()) return found->second;
  Mon u = x;
  u[j] -= 1;
  Rat val(0);
  for (const auto& [m, c] : act_e(j, y)) val += c * shapovalov(u, m);
  pair_memo_.emplace(std::move(key), val);
  return val;
}

RatVec HWModule::coords_in_space(const WtSpace& sp, const ModElt& x) {
  RatVec p(sp.dim, Rat(0));
  for (int j = 0; j < sp.dim; ++j)
    for (const auto& [m, c] : x) p[j] += c * shapovalov(sp.basis[j], m);
  auto sol = solve(sp.gram, p);
  require(sol.has_value(), "projection onto a weight space is inconsistent");
  return *sol;
}

HWModule::HWModule(const ChevalleyAlgebra& algebra, const IVec& lambda_in)
    : g(algebra), lambda(lambda_in) {
  const RootDatum& d = g.d;
  require(static_cast<int>(lambda.size()) == d.rank, "highest weight has wrong rank");
  require(d.is_dominant(lambda), "highest weight must be dominant");

  auto wsys = weight_system(d, lambda);
  for (const auto& [mu, mult] : wsys) {
    IVec nu = ivec_sub(lambda, mu);
    auto nc = d.nonneg_int_root_coords(nu);
    require(nc.has_value(), "weight is not below the highest weight");
    std::vector<Mon> mons = enum_monomials(d, *nc);
    require(!mons.empty(), "no lowering monomials for a listed weight");
    RatMat big = rat_mat(mons.size(), mons.size());
    for (size_t i = 0; i < mons.size(); ++i)
      for (size_t j = i; j < mons.size(); ++j) {
        Rat v = shapovalov(mons[i], mons[j]);
        big[i][j] = v;
        big[j][i] = v;
      }
    auto cols = greedy_column_basis(big);
    require(static_cast<long long>(cols.size()) == mult,
            "form rank disagrees with the recursion multiplicity");
    WtSpace sp;
    sp.mu = mu;
    sp.dim = static_cast<int>(cols.size());
    for (size_t c : cols) sp.basis.push_back(mons[c]);
    sp.gram = rat_mat(sp.dim, sp.dim);
    for (int i = 0; i < sp.dim; ++i)
      for (int j = 0; j < sp.dim; ++j) sp.gram[i][j] = big[cols[i]][cols[j]];
    dim_ += sp.dim;
    spaces_.emplace(mu, std::move(sp));
  }
  require(dim_ == d.weyl_dim(lambda), "total dimension disagrees with the Weyl formula");

  emat_.resize(d.rank);
  fmat_.resize(d.rank);
  for (int i = 0; i < d.rank; ++i) {
    int rp = d.root_index(d.cartan[i]);
    require(rp >= 0 && rp < d.n_pos, "simple root index lookup failed");
    for (const auto& [mu, sp] : spaces_) {
      IVec up = ivec_add(mu, d.cartan[i]);
      auto tup = spaces_.find(up);
      RatMat em = rat_mat(tup == spaces_.end() ? 0 : tup->second.dim, sp.dim);
      if (tup != spaces_.end()) {
        for (int k = 0; k < sp.dim; ++k) {
          RatVec co = coords_in_space(tup->second, act_e(rp, sp.basis[k]));
          for (int ro = 0; ro < tup->second.dim; ++ro) em[ro][k] = co[ro];
        }
      }
      emat_[i].emplace(mu, std::move(em));

      IVec dn = ivec_sub(mu, d.cartan[i]);
      auto tdn = spaces_.find(dn);
      RatMat fm = rat_mat(tdn == spaces_.end() ? 0 : tdn->second.dim, sp.dim);
      if (tdn != spaces_.end()) {
        for (int k = 0; k < sp.dim; ++k) {
          RatVec co = coords_in_space(tdn->second, mult_f(rp, sp.basis[k]));
          for (int ro = 0; ro < tdn->second.dim; ++ro) fm[ro][k] = co[ro];
        }
      }
      fmat_[i].emplace(mu, std::move(fm));
    }
  }
}

HWModule::HWModule(const ChevalleyAlgebra& algebra, const IVec& lambda_in,
                   std::map<IVec, WtSpace> spaces, std::vector<std::map<IVec, RatMat>> emat,
                   std::vector<std::map<IVec, RatMat>> fmat)
    : g(algebra),
      lambda(lambda_in),
      spaces_(std::move(spaces)),
      emat_(std::move(emat)),
      fmat_(std::move(fmat)) {
  const RootDatum& d = g.d;
  require(static_cast<int>(lambda.size()) == d.rank && d.is_dominant(lambda),
          "highest weight must be dominant");
  require(static_cast<int>(emat_.size()) == d.rank && static_cast<int>(fmat_.size()) == d.rank,
          "one action table per simple index");
  for (const auto& [mu, sp] : spaces_) {
    require(sp.mu == mu && sp.dim == static_cast<int>(sp.basis.size()) &&
                sp.dim == static_cast<int>(sp.gram.size()),
            "weight space tables are inconsistent");
    dim_ += sp.dim;
    for (int i = 0; i < d.rank; ++i) {
      IVec up = ivec_add(mu, d.cartan[i]);
      auto tup = spaces_.find(up);
      const RatMat& em = emat_.at(i).at(mu);
      require(static_cast<int>(em.size()) == (tup == spaces_.end() ? 0 : tup->second.dim),
              "raising table has the wrong target dimension");
      IVec dn = ivec_sub(mu, d.cartan[i]);
      auto tdn = spaces_.find(dn);
      const RatMat& fm = fmat_.at(i).at(mu);
      require(static_cast<int>(fm.size()) == (tdn == spaces_.end() ? 0 : tdn->second.dim),
              "lowering table has the wrong target dimension");
    }
  }
  require(dim_ == d.weyl_dim(lambda), "total dimension disagrees with the Weyl formula");
  require(spaces_.count(lambda) == 1 && spaces_.at(lambda).dim == 1,
          "highest weight space must be a line");
}

const HWModule::WtSpace& HWModule::space(const IVec& mu) const {
  auto it = spaces_.find(mu);
  require(it != spaces_.end(), "weight space not present: " + ivec_to_string(mu));
  return it->second;
}

const RatMat& HWModule::e_matrix(int i, const IVec& mu) const {
  return emat_.at(i).at(mu);
}

const RatMat& HWModule::f_matrix(int i, const IVec& mu) const {
  return fmat_.at(i).at(mu);
}

std::vector<CosetPart> coset_decompose(const RootDatum& d, const std::vector<int>& I,
                                       const HWModule& M) {
  std::map<std::string, CosetPart> parts;
  for (const auto& [mu, sp] : M.spaces()) {
    std::string lab = coset_label(d, I, mu);
    CosetPart& p = parts[lab];
    if (p.weights.empty()) {
      p.label = lab;
      p.rep = mu;
    }
    p.weights.push_back(mu);
    p.dim += sp.dim;
  }
  std::vector<CosetPart> out;
  out.reserve(parts.size());
  for (auto& [lab, p] : parts) out.push_back(std::move(p));
  return out;
}

}  // namespace verify
