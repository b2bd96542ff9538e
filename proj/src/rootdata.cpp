#include "verify/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <set>

namespace verify {

namespace {

std::vector<IVec> cartan_table(const std::string& type) {
  if (type == "A1") return {{2}};
  if (type == "A2") return {{2, -1}, {-1, 2}};
  // B2: first simple root long, second short.
  if (type == "B2") return {{2, -2}, {-1, 2}};
  // C2: first simple root short, second long.
  if (type == "C2") return {{2, -1}, {-2, 2}};
  // G2: first simple root short.
  if (type == "G2") return {{2, -1}, {-3, 2}};
  throw PreconditionError("unsupported Cartan type: " + type);
}

Int rational_floor(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  Int q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

}  // namespace

RootDatum::RootDatum(const std::string& type) : cartan_type(type) {
  cartan = cartan_table(type);
  rank = static_cast<int>(cartan.size());
  rho.assign(rank, 1);
  build_roots();
  build_weyl();

  two_rho_check.assign(rank, 0);
  for (int r = 0; r < n_pos; ++r) two_rho_check = ivec_add(two_rho_check, roots[r].coroot);

  // The highest coroot is the unique positive coroot of maximal coordinate sum.
  long long best = -1;
  int count = 0;
  for (int r = 0; r < n_pos; ++r) {
    long long h = 0;
    for (long long c : roots[r].coroot) h += c;
    if (h > best) {
      best = h;
      highest_coroot_root = r;
      count = 1;
    } else if (h == best) {
      ++count;
    }
  }
  require(count == 1, "highest coroot is not unique");

  // Solver for simple-root coordinates: columns are the simple roots.
  RatMat m = rat_mat(rank, rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < rank; ++i) m[j][i] = Rat(cartan[i][j]);
  root_coord_solver_ = rat_mat(rank, rank);
  for (int i = 0; i < rank; ++i) {
    RatVec e(rank, Rat(0));
    e[i] = Rat(1);
    auto col = solve(m, e);
    require(col.has_value(), "Cartan matrix is singular");
    for (int j = 0; j < rank; ++j) root_coord_solver_[j][i] = (*col)[j];
  }
}

const RootDatum& RootDatum::get(const std::string& type) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<RootDatum>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(type);
  if (it == cache.end())
    it = cache.emplace(type, std::make_unique<RootDatum>(type)).first;
  return *it->second;
}

void RootDatum::build_roots() {
  std::map<IVec, Root> seen;
  std::deque<Root> queue;
  for (int i = 0; i < rank; ++i) {
    Root r;
    r.wt = cartan[i];
    r.rc.assign(rank, 0);
    r.rc[i] = 1;
    r.coroot.assign(rank, 0);
    r.coroot[i] = 1;
    r.height = 1;
    seen[r.wt] = r;
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      long long p = r.wt[i];
      Root s;
      s.wt = ivec_sub(r.wt, ivec_scale(p, cartan[i]));
      s.rc = r.rc;
      s.rc[i] -= p;
      long long pc = pair_simple_root(i, r.coroot);
      s.coroot = r.coroot;
      s.coroot[i] -= pc;
      s.height = r.height - p;
      if (seen.emplace(s.wt, s).second) queue.push_back(s);
    }
  }
  std::vector<Root> pos;
  for (auto& [wt, r] : seen) {
    bool isneg = false, ispos = false;
    for (long long c : r.rc) {
      if (c > 0) ispos = true;
      if (c < 0) isneg = true;
    }
    require(ispos != isneg, "root with mixed-sign coordinates");
    if (ispos) pos.push_back(r);
  }
  std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.rc < b.rc;
  });
  n_pos = static_cast<int>(pos.size());
  roots = pos;
  for (const Root& r : pos) {
    Root m;
    m.wt = ivec_neg(r.wt);
    m.rc = ivec_neg(r.rc);
    m.coroot = ivec_neg(r.coroot);
    m.height = -r.height;
    roots.push_back(m);
  }
  for (int k = 0; k < 2 * n_pos; ++k) root_lookup_[roots[k].wt] = k;
}

void RootDatum::build_weyl() {
  int n = 2 * n_pos;
  simple_w_.assign(rank, -1);
  std::vector<std::vector<int>> simple_perm(rank);
  for (int i = 0; i < rank; ++i) {
    simple_perm[i].resize(n);
    for (int k = 0; k < n; ++k) {
      IVec img = simple_reflect_weight(i, roots[k].wt);
      simple_perm[i][k] = root_lookup_.at(img);
    }
  }
  std::map<std::vector<int>, int> index;
  std::vector<int> id(n);
  for (int k = 0; k < n; ++k) id[k] = k;
  welts.push_back({id, {}, 0});
  index[id] = 0;
  w_id = 0;
  std::deque<int> queue = {0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      std::vector<int> perm(n);
      for (int k = 0; k < n; ++k) perm[k] = welts[cur].perm[simple_perm[i][k]];
      if (index.count(perm)) continue;
      WElt e;
      e.perm = perm;
      e.word = welts[cur].word;
      e.word.push_back(i);
      e.length = 0;
      for (int k = 0; k < n_pos; ++k)
        if (perm[k] >= n_pos) ++e.length;
      require(e.length == static_cast<int>(e.word.size()), "non-reduced word in Weyl group closure");
      index[perm] = static_cast<int>(welts.size());
      queue.push_back(static_cast<int>(welts.size()));
      welts.push_back(std::move(e));
    }
  }
  int nw = static_cast<int>(welts.size());
  for (int i = 0; i < rank; ++i) simple_w_[i] = index.at(simple_perm[i]);
  wmul.assign(nw, std::vector<int>(nw, -1));
  for (int a = 0; a < nw; ++a)
    for (int b = 0; b < nw; ++b) {
      std::vector<int> perm(n);
      for (int k = 0; k < n; ++k) perm[k] = welts[a].perm[welts[b].perm[k]];
      wmul[a][b] = index.at(perm);
    }
  winv.assign(nw, -1);
  for (int a = 0; a < nw; ++a)
    for (int b = 0; b < nw; ++b)
      if (wmul[a][b] == w_id) winv[a] = b;
  w0 = 0;
  for (int a = 0; a < nw; ++a)
    if (welts[a].length > welts[w0].length) w0 = a;
  require(welts[w0].length == n_pos, "longest element has wrong length");
}

int RootDatum::reflection_in_root(int root_idx) const {
  const Root& beta = roots[root_idx];
  int n = 2 * n_pos;
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) {
    long long p = pairing(roots[k].wt, beta.coroot);
    IVec img = ivec_sub(roots[k].wt, ivec_scale(p, beta.wt));
    perm[k] = root_lookup_.at(img);
  }
  for (int a = 0; a < static_cast<int>(welts.size()); ++a)
    if (welts[a].perm == perm) return a;
  throw VerifyError("reflection not found in Weyl group");
}

IVec RootDatum::simple_reflect_weight(int i, const IVec& wt) const {
  return ivec_sub(wt, ivec_scale(wt[i], cartan[i]));
}

IVec RootDatum::simple_reflect_coroot(int i, const IVec& c) const {
  IVec out = c;
  out[i] -= pair_simple_root(i, c);
  return out;
}

IVec RootDatum::w_act_weight(int w, IVec wt) const {
  const auto& word = welts[w].word;
  for (auto it = word.rbegin(); it != word.rend(); ++it) wt = simple_reflect_weight(*it, wt);
  return wt;
}

IVec RootDatum::w_act_coroot(int w, IVec c) const {
  const auto& word = welts[w].word;
  for (auto it = word.rbegin(); it != word.rend(); ++it) c = simple_reflect_coroot(*it, c);
  return c;
}

bool RootDatum::is_dominant(const IVec& wt) const {
  for (long long c : wt)
    if (c < 0) return false;
  return true;
}

IVec RootDatum::dominant_rep(const IVec& wt) const {
  IVec cur = wt;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < rank; ++i)
      if (cur[i] < 0) {
        cur = simple_reflect_weight(i, cur);
        moved = true;
        break;
      }
  }
  return cur;
}

std::vector<IVec> RootDatum::weyl_orbit(const IVec& wt) const {
  std::set<IVec> seen = {wt};
  std::deque<IVec> queue = {wt};
  while (!queue.empty()) {
    IVec cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      IVec img = simple_reflect_weight(i, cur);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return std::vector<IVec>(seen.begin(), seen.end());
}

RatVec RootDatum::root_coords(const IVec& wt) const {
  RatVec out(rank, Rat(0));
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < rank; ++i) out[j] += root_coord_solver_[j][i] * Rat(wt[i]);
  return out;
}

std::optional<IVec> RootDatum::nonneg_int_root_coords(const IVec& wt) const {
  RatVec rc = root_coords(wt);
  IVec out(rank, 0);
  for (int j = 0; j < rank; ++j) {
    if (boost::multiprecision::denominator(rc[j]) != 1 || rc[j] < 0) return std::nullopt;
    out[j] = static_cast<long long>(boost::multiprecision::numerator(rc[j]));
  }
  return out;
}

bool RootDatum::in_root_lattice(const IVec& wt) const {
  for (const Rat& c : root_coords(wt))
    if (boost::multiprecision::denominator(c) != 1) return false;
  return true;
}

bool RootDatum::dominance_leq(const IVec& mu, const IVec& lam) const {
  return nonneg_int_root_coords(ivec_sub(lam, mu)).has_value();
}

int RootDatum::root_index(const IVec& wt) const {
  auto it = root_lookup_.find(wt);
  return it == root_lookup_.end() ? -1 : it->second;
}

long long RootDatum::weyl_dim(const IVec& lam) const {
  require(is_dominant(lam), "weyl_dim needs a dominant weight");
  IVec shifted = ivec_add(lam, rho);
  long long num = 1, den = 1;
  for (int r = 0; r < n_pos; ++r) {
    num = checked_mul(num, pairing(shifted, roots[r].coroot));
    den = checked_mul(den, pairing(rho, roots[r].coroot));
  }
  require(num % den == 0, "Weyl dimension is not integral");
  return num / den;
}

std::vector<IVec> RootDatum::dominant_grid(long long hmax) const {
  std::vector<IVec> out;
  IVec cur(rank, 0);
  // two_rho_check[i] is the height of the i-th fundamental weight.
  std::function<void(int, long long)> rec = [&](int i, long long left) {
    if (i == rank) {
      out.push_back(cur);
      return;
    }
    for (long long c = 0; c * two_rho_check[i] <= left; ++c) {
      cur[i] = c;
      rec(i + 1, left - c * two_rho_check[i]);
    }
    cur[i] = 0;
  };
  rec(0, hmax);
  std::sort(out.begin(), out.end(), [&](const IVec& a, const IVec& b) {
    long long ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

std::vector<IVec> RootDatum::dominant_below(const IVec& lam) const {
  std::vector<IVec> out;
  for (const IVec& mu : dominant_grid(height_of(lam)))
    if (dominance_leq(mu, lam)) out.push_back(mu);
  return out;
}

bool LeviDatum::contains_simple(int i) const {
  return std::find(I.begin(), I.end(), i) != I.end();
}

std::string LeviDatum::label() const {
  std::string s = "I={";
  for (size_t k = 0; k < I.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(I[k]);
  }
  return s + "}";
}

LeviDatum levi_datum(const RootDatum& d, std::vector<int> I) {
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  for (int i : I) require(i >= 0 && i < d.rank, "Levi index out of range");
  LeviDatum L;
  L.parent = &d;
  L.I = I;

  auto supported = [&](const Root& r) {
    for (int j = 0; j < d.rank; ++j)
      if (r.rc[j] != 0 && !std::count(I.begin(), I.end(), j)) return false;
    return true;
  };
  for (int k = 0; k < 2 * d.n_pos; ++k)
    if (supported(d.roots[k])) L.roots_I.push_back(k);

  L.two_rho_I.assign(d.rank, 0);
  L.two_rho_check_I.assign(d.rank, 0);
  for (int k : L.roots_I)
    if (d.roots[k].height > 0) {
      L.two_rho_I = ivec_add(L.two_rho_I, d.roots[k].wt);
      L.two_rho_check_I = ivec_add(L.two_rho_check_I, d.roots[k].coroot);
    }

  std::set<int> wset = {d.w_id};
  std::deque<int> queue = {d.w_id};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int i : I) {
      int nxt = d.wmul[cur][d.simple_w(i)];
      if (wset.insert(nxt).second) queue.push_back(nxt);
    }
  }
  L.weyl_I.assign(wset.begin(), wset.end());

  // Degrees of the invariants of W_I on the Cartan: one degree-1 form per
  // direction fixed by W_I, plus the rank-1 or rank-2 reflection degrees of
  // each connected component of I.
  std::vector<long long> degs(d.rank - static_cast<int>(I.size()), 1);
  std::vector<bool> used(I.size(), false);
  for (size_t a = 0; a < I.size(); ++a) {
    if (used[a]) continue;
    std::vector<int> comp = {I[a]};
    used[a] = true;
    for (size_t b = a + 1; b < I.size(); ++b)
      if (!used[b] && d.cartan[I[a]][I[b]] != 0) {
        comp.push_back(I[b]);
        used[b] = true;
      }
    if (comp.size() == 1) {
      degs.push_back(2);
    } else {
      long long npos_comp = 0;
      for (int k : L.roots_I)
        if (d.roots[k].height > 0) {
          bool in_comp = true;
          for (int j = 0; j < d.rank; ++j)
            if (d.roots[k].rc[j] != 0 && !std::count(comp.begin(), comp.end(), j)) in_comp = false;
          if (in_comp) ++npos_comp;
        }
      degs.push_back(2);
      degs.push_back(npos_comp);
    }
  }
  std::sort(degs.begin(), degs.end());
  L.invariant_degrees = degs;
  long long prod = 1;
  for (long long dg : degs) prod *= dg;
  require(prod == static_cast<long long>(L.weyl_I.size()), "invariant degrees do not multiply to |W_I|");
  return L;
}

std::vector<std::vector<int>> all_levi_subsets(const RootDatum& d) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << d.rank); ++mask) {
    std::vector<int> I;
    for (int i = 0; i < d.rank; ++i)
      if (mask & (1 << i)) I.push_back(i);
    out.push_back(I);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::pair<std::vector<IVec>, std::vector<IVec>> levi_polynomials(const LeviDatum& L) {
  const RootDatum& d = *L.parent;
  std::vector<IVec> f, g;
  std::set<int> inside(L.roots_I.begin(), L.roots_I.end());
  for (int k = 0; k < 2 * d.n_pos; ++k)
    (inside.count(k) ? f : g).push_back(d.roots[k].wt);
  return {f, g};
}

std::string coset_label(const RootDatum& d, const std::vector<int>& I, const IVec& wt) {
  RatVec rc = d.root_coords(wt);
  std::string s = "(";
  for (int j = 0; j < d.rank; ++j) {
    if (j) s += ",";
    Rat v = rc[j];
    if (std::count(I.begin(), I.end(), j)) v -= Rat(rational_floor(v));
    s += rat_to_string(v);
  }
  return s + ")";
}

Rat root_value_at(const RootDatum& d, const IVec& root_wt, const RatVec& t) {
  require(static_cast<int>(t.size()) == d.rank, "point has wrong dimension");
  Rat out(0);
  for (int i = 0; i < d.rank; ++i) out += t[i] * Rat(root_wt[i]);
  return out;
}

}  // namespace verify
