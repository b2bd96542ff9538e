#include "verify/slices.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <utility>

#include "verify/hwrep.hpp"

namespace verify {

namespace {

using MP = SliceGeometry::MPoly;

MP mp_zero(int nvars) {
  MP p;
  p.nvars = nvars;
  return p;
}

void mp_add_term(MP& p, const std::vector<int>& e, const Rat& c) {
  if (c == 0) return;
  auto it = p.t.find(e);
  if (it == p.t.end()) {
    p.t.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) p.t.erase(it);
  }
}

MP mp_add(const MP& a, const MP& b) {
  MP r = a;
  for (const auto& [e, c] : b.t) mp_add_term(r, e, c);
  return r;
}

MP mp_mul(const MP& a, const MP& b) {
  MP r = mp_zero(a.nvars);
  for (const auto& [ea, ca] : a.t)
    for (const auto& [eb, cb] : b.t) {
      std::vector<int> e(ea);
      for (int j = 0; j < a.nvars; ++j) e[j] += eb[j];
      mp_add_term(r, e, ca * cb);
    }
  return r;
}

Rat rat_pow(const Rat& x, int e) {
  Rat r(1);
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}

Rat mp_eval(const MP& p, const RatVec& vals) {
  Rat out(0);
  for (const auto& [e, c] : p.t) {
    Rat term = c;
    for (int j = 0; j < p.nvars; ++j)
      if (e[j] != 0) term *= rat_pow(vals[j], e[j]);
    out += term;
  }
  return out;
}

// Matrix with polynomial entries, used for the symbolic trace powers.
using SymMat = std::vector<std::vector<MP>>;

SymMat sym_mul(const SymMat& a, const SymMat& b) {
  size_t n = a.size();
  int nv = a[0][0].nvars;
  SymMat r(n, std::vector<MP>(n, mp_zero(nv)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].t.empty()) continue;
      for (size_t j = 0; j < n; ++j) {
        if (b[k][j].t.empty()) continue;
        r[i][j] = mp_add(r[i][j], mp_mul(a[i][k], b[k][j]));
      }
    }
  return r;
}

// Exponents of a root system from the multiset of positive-root heights, by
// partition conjugation: the k-th exponent is the number of heights h that
// occur at least k times.
std::vector<long long> exponents_from_heights(const std::vector<long long>& heights) {
  std::map<long long, long long> count;
  for (long long h : heights) count[h] += 1;
  long long width = heights.empty() ? 0 : count[1];
  std::vector<long long> exps;
  for (long long k = 1; k <= width; ++k) {
    long long cnt = 0;
    for (const auto& [h, c] : count) {
      (void)h;
      if (c >= k) cnt += 1;
    }
    exps.push_back(cnt);
  }
  std::sort(exps.begin(), exps.end());
  return exps;
}

}  // namespace

SliceGeometry::SliceGeometry(const ChevalleyAlgebra& algebra, const std::vector<int>& levi)
    : g(algebra), L(levi_datum(algebra.d, levi)) {
  const RootDatum& d = g.d;
  degrees_ = L.invariant_degrees;
  require((int)degrees_.size() == d.rank, "one invariant degree per Cartan direction");

  for (int j = 0; j < d.rank; ++j) levi_vars_.push_back(g.h_index(j));
  std::vector<int> rts = L.roots_I;
  std::sort(rts.begin(), rts.end());
  for (int r : rts) levi_vars_.push_back(g.e_index(r));

  std::set<int> levi_roots(rts.begin(), rts.end());
  for (int r = 0; r < d.n_pos; ++r)
    if (!levi_roots.count(r)) outer_pos_.push_back(r);

  build_generators();
  build_section();
  compose_section();

  // Round trips on fixed points certify the graded-triangular inversion.
  RatVec trial(d.rank, Rat(0));
  require(chi(section(trial)) == trial, "section round trip fails at zero");
  for (int k = 0; k < d.rank; ++k) trial[k] = Rat(k + 1, 2);
  require(chi(section(trial)) == trial, "section round trip fails at a basic point");
}

const SliceGeometry& SliceGeometry::get(const std::string& cartan_type,
                                        const std::vector<int>& levi) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<SliceGeometry>> cache;
  std::vector<int> I(levi);
  std::sort(I.begin(), I.end());
  std::string key = cartan_type + "|";
  for (int i : I) key += std::to_string(i) + ",";
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto made = std::make_unique<SliceGeometry>(ChevalleyAlgebra::get(cartan_type), I);
    it = cache.emplace(key, std::move(made)).first;
  }
  return *it->second;
}

void SliceGeometry::build_generators() {
  const RootDatum& d = g.d;
  int nv = (int)levi_vars_.size();
  gens_.assign(degrees_.size(), mp_zero(nv));

  // Degree-one generators: linear forms on the Cartan orthogonal to the
  // Levi coroots (an echelon basis, so the choice is canonical).
  std::vector<RatVec> central_forms;
  if (L.I.empty()) {
    for (int j = 0; j < d.rank; ++j) {
      RatVec u(d.rank, Rat(0));
      u[j] = 1;
      central_forms.push_back(u);
    }
  } else {
    RatMat rows;
    for (int i : L.I) {
      int si = d.root_index(d.cartan[i]);
      RatVec row(d.rank, Rat(0));
      for (int j = 0; j < d.rank; ++j) row[j] = Rat(d.roots[si].coroot[j]);
      rows.push_back(row);
    }
    central_forms = nullspace(rows);
  }
  size_t ones = 0;
  while (ones < degrees_.size() && degrees_[ones] == 1) ++ones;
  require(central_forms.size() == ones, "central direction count disagrees with the degree list");
  for (size_t k = 0; k < ones; ++k) {
    MP p = mp_zero(nv);
    for (int j = 0; j < d.rank; ++j) {
      std::vector<int> e(nv, 0);
      e[j] = 1;
      mp_add_term(p, e, central_forms[k][j]);
    }
    gens_[k] = p;
  }
  if (ones == degrees_.size()) return;

  // Faithful module of least dimension, used for the trace-power invariants.
  int best = 0;
  long long best_dim = -1;
  for (int m = 0; m < d.rank; ++m) {
    IVec fund(d.rank, 0);
    fund[m] = 1;
    long long dm = d.weyl_dim(fund);
    if (best_dim < 0 || dm < best_dim) {
      best_dim = dm;
      best = m;
    }
  }
  IVec hw(d.rank, 0);
  hw[best] = 1;
  HWModule M(g, hw);
  int dv = (int)M.dim();

  std::vector<IVec> wt_order;
  std::map<IVec, int> offset;
  {
    int at = 0;
    for (const auto& [mu, sp] : M.spaces()) {
      wt_order.push_back(mu);
      offset[mu] = at;
      at += sp.dim;
    }
  }

  // Global matrices of the Levi basis vectors on the module; non-simple root
  // vectors are reached through commutators of the simple ones.
  std::map<int, RatMat> rho;  // by algebra basis index
  for (int j = 0; j < d.rank; ++j) {
    RatMat m = rat_mat(dv, dv);
    for (const IVec& mu : wt_order) {
      int off = offset[mu];
      int dim = M.space(mu).dim;
      for (int a = 0; a < dim; ++a) m[off + a][off + a] = Rat(mu[j]);
    }
    rho[g.h_index(j)] = m;
  }
  auto place_block = [&](const IVec& src, const IVec& dst, const RatMat& block, RatMat& out) {
    if (!M.has_weight(dst)) return;
    int r0 = offset[dst], c0 = offset[src];
    for (size_t a = 0; a < block.size(); ++a)
      for (size_t b = 0; b < block[a].size(); ++b) out[r0 + a][c0 + b] = block[a][b];
  };
  for (int i = 0; i < d.rank; ++i) {
    int si = d.root_index(d.cartan[i]);
    RatMat me = rat_mat(dv, dv), mf = rat_mat(dv, dv);
    for (const IVec& mu : wt_order) {
      place_block(mu, ivec_add(mu, d.cartan[i]), M.e_matrix(i, mu), me);
      place_block(mu, ivec_sub(mu, d.cartan[i]), M.f_matrix(i, mu), mf);
    }
    rho[g.e_index(si)] = me;
    rho[g.e_index(d.n_pos + si)] = mf;
  }
  std::function<const RatMat&(int)> rho_root = [&](int r) -> const RatMat& {
    int idx = g.e_index(r);
    auto it = rho.find(idx);
    if (it != rho.end()) return it->second;
    const IVec& wt = d.roots[r].wt;
    for (int i = 0; i < d.rank; ++i) {
      int si = d.root_index(d.cartan[i]);
      int s = r < d.n_pos ? si : d.n_pos + si;
      IVec rest = ivec_sub(wt, d.roots[s].wt);
      int rest_idx = d.root_index(rest);
      if (rest_idx < 0) continue;
      if ((r < d.n_pos) != (rest_idx < d.n_pos)) continue;
      long long n = g.n_constant(s, rest_idx);
      if (n == 0) continue;
      const RatMat& a = rho_root(s);
      const RatMat& b = rho_root(rest_idx);
      RatMat m = rat_mat(dv, dv);
      RatMat ab = mat_mul(a, b), ba = mat_mul(b, a);
      Rat inv = Rat(1) / Rat(n);
      for (int p = 0; p < dv; ++p)
        for (int q = 0; q < dv; ++q) m[p][q] = (ab[p][q] - ba[p][q]) * inv;
      return rho.emplace(idx, std::move(m)).first->second;
    }
    throw VerifyError("no commutator decomposition for a root vector");
  };

  // Symbolic action of a general Levi element, entries linear in the
  // coordinate variables.
  SymMat sym(dv, std::vector<MP>(dv, mp_zero(nv)));
  for (int v = 0; v < nv; ++v) {
    int idx = levi_vars_[v];
    const RatMat& m = g.is_root_vector(idx) ? rho_root(g.root_of(idx)) : rho.at(idx);
    std::vector<int> e(nv, 0);
    e[v] = 1;
    for (int p = 0; p < dv; ++p)
      for (int q = 0; q < dv; ++q) mp_add_term(sym[p][q], e, m[p][q]);
  }

  // Trace powers, kept when they add a new invariant beyond products of the
  // earlier generators (echelon test over the monomial support).
  long long max_deg = degrees_.back();
  std::map<long long, MP> traces;
  SymMat power = sym;
  for (long long k = 2; k <= max_deg; ++k) {
    power = sym_mul(power, sym);
    if (std::find(degrees_.begin() + ones, degrees_.end(), k) != degrees_.end()) {
      MP tr = mp_zero(nv);
      for (int p = 0; p < dv; ++p) tr = mp_add(tr, power[p][p]);
      traces[k] = tr;
    }
  }

  for (size_t k = ones; k < degrees_.size(); ++k) {
    long long dgr = degrees_[k];
    require(k == ones || degrees_[k - 1] < dgr,
            "repeated generator degrees beyond the central block are not supported");

    // All products of earlier generators with total degree dgr.
    std::vector<MP> products;
    std::function<void(size_t, long long, const MP&)> extend = [&](size_t from, long long left,
                                                                   const MP& acc) {
      if (left == 0) {
        products.push_back(acc);
        return;
      }
      for (size_t j = from; j < k; ++j) {
        if (degrees_[j] > left) continue;
        extend(j, left - degrees_[j], mp_mul(acc, gens_[j]));
      }
    };
    MP one = mp_zero(nv);
    mp_add_term(one, std::vector<int>(nv, 0), Rat(1));
    extend(0, dgr, one);

    std::map<std::vector<int>, size_t> support;
    auto touch = [&](const MP& p) {
      for (const auto& [e, c] : p.t) {
        (void)c;
        if (!support.count(e)) {
          size_t at = support.size();
          support[e] = at;
        }
      }
    };
    for (const MP& p : products) touch(p);
    touch(traces.at(dgr));
    auto as_row = [&](const MP& p) {
      RatVec row(support.size(), Rat(0));
      for (const auto& [e, c] : p.t) row[support.at(e)] = c;
      return row;
    };
    RatMat rows;
    for (const MP& p : products) rows.push_back(as_row(p));
    size_t base_rank = rank(rows);
    rows.push_back(as_row(traces.at(dgr)));
    require(rank(rows) == base_rank + 1,
            "trace power is dependent on products of earlier invariants");
    gens_[k] = traces.at(dgr);
  }
}

void SliceGeometry::build_section() {
  const RootDatum& d = g.d;
  base_point_ = g.zero();
  for (int i : L.I) {
    int si = d.root_index(d.cartan[i]);
    base_point_[g.e_index(d.n_pos + si)] = 1;
  }

  // Central directions of the Levi: kernel of the simple roots in I.
  std::vector<RatVec> central;
  if (L.I.empty()) {
    for (int j = 0; j < d.rank; ++j) {
      RatVec u(d.rank, Rat(0));
      u[j] = 1;
      central.push_back(u);
    }
  } else {
    RatMat rows;
    for (int i : L.I) {
      RatVec row(d.rank, Rat(0));
      for (int j = 0; j < d.rank; ++j) row[j] = Rat(d.cartan[i][j]);
      rows.push_back(row);
    }
    central = nullspace(rows);
  }
  size_t ones = central.size();

  // Connected components of the Levi diagram, each contributing one raising
  // root vector per exponent.
  std::vector<std::vector<int>> comps;
  std::set<int> seen;
  for (int i : L.I) {
    if (seen.count(i)) continue;
    std::vector<int> comp{i};
    seen.insert(i);
    for (size_t at = 0; at < comp.size(); ++at)
      for (int j : L.I)
        if (!seen.count(j) && d.cartan[comp[at]][j] != 0) {
          comp.push_back(j);
          seen.insert(j);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  std::sort(comps.begin(), comps.end());

  struct Slot {
    long long degree;
    std::vector<int> candidates;  // positive root indices of the right height
  };
  std::vector<Slot> slots;
  for (const auto& comp : comps) {
    std::vector<int> pool;
    std::vector<long long> heights;
    for (int r = 0; r < d.n_pos; ++r) {
      bool inside = true;
      for (int j = 0; j < d.rank; ++j)
        if (d.roots[r].rc[j] != 0 &&
            std::find(comp.begin(), comp.end(), j) == comp.end())
          inside = false;
      if (!inside) continue;
      pool.push_back(r);
      heights.push_back(d.roots[r].height);
    }
    for (long long m : exponents_from_heights(heights)) {
      Slot s;
      s.degree = m + 1;
      for (int r : pool)
        if (d.roots[r].height == m) s.candidates.push_back(r);
      require(!s.candidates.empty(), "no root of the exponent height");
      slots.push_back(s);
    }
  }
  std::stable_sort(slots.begin(), slots.end(),
                   [](const Slot& a, const Slot& b) { return a.degree < b.degree; });

  {
    std::vector<long long> check(ones, 1);
    for (const Slot& s : slots) check.push_back(s.degree);
    std::sort(check.begin(), check.end());
    require(check == degrees_, "section degrees disagree with the invariant degrees");
  }

  // Transversality: the adjoint image of the base point inside the Levi plus
  // the chosen complement must fill the Levi subalgebra.
  auto transversal = [&](const std::vector<int>& chosen) {
    RatMat cols;
    for (int v : levi_vars_) cols.push_back(g.bracket(base_point_, g.basis(v)));
    for (const RatVec& z : central) {
      RatVec x = g.zero();
      for (int j = 0; j < d.rank; ++j) x[g.h_index(j)] = z[j];
      cols.push_back(x);
    }
    for (int r : chosen) cols.push_back(g.basis_e(r));
    return rank(cols) == levi_vars_.size();
  };

  std::vector<int> pick;
  std::function<bool(size_t)> search = [&](size_t at) {
    if (at == slots.size()) return transversal(pick);
    for (int r : slots[at].candidates) {
      pick.push_back(r);
      if (search(at + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  require(search(0), "no transversal complement among the exponent root vectors");
  section_roots_ = pick;

  section_basis_.clear();
  size_t used = 0;
  for (long long dgr : degrees_) {
    RatVec x = g.zero();
    if (dgr == 1) {
      const RatVec& z = central[section_basis_.size()];
      for (int j = 0; j < d.rank; ++j) x[g.h_index(j)] = z[j];
    } else {
      x[g.e_index(section_roots_[used])] = 1;
      ++used;
    }
    section_basis_.push_back(x);
  }
}

void SliceGeometry::compose_section() {
  const RootDatum& d = g.d;
  int r = d.rank;
  int nv = (int)levi_vars_.size();

  // Each Levi coordinate of the section point is affine-linear in c.
  std::vector<MP> coord(nv, mp_zero(r));
  for (int v = 0; v < nv; ++v) {
    std::vector<int> e0(r, 0);
    mp_add_term(coord[v], e0, base_point_[levi_vars_[v]]);
    for (int k = 0; k < r; ++k) {
      std::vector<int> e(r, 0);
      e[k] = 1;
      mp_add_term(coord[v], e, section_basis_[k][levi_vars_[v]]);
    }
  }

  composed_.clear();
  for (const MP& gen : gens_) {
    MP out = mp_zero(r);
    for (const auto& [e, c] : gen.t) {
      MP term = mp_zero(r);
      mp_add_term(term, std::vector<int>(r, 0), c);
      for (int v = 0; v < nv; ++v)
        for (int k = 0; k < e[v]; ++k) term = mp_mul(term, coord[v]);
      out = mp_add(out, term);
    }
    composed_.push_back(out);
  }
}

RatVec SliceGeometry::solve_values(const RatVec& v) const {
  int r = g.d.rank;
  RatVec c(r, Rat(0));
  std::vector<bool> solved(r, false);
  size_t at = 0;
  while (at < degrees_.size()) {
    size_t to = at;
    while (to < degrees_.size() && degrees_[to] == degrees_[at]) ++to;
    std::map<int, int> pos;
    for (size_t k = at; k < to; ++k) pos[(int)k] = (int)(k - at);
    int n = (int)(to - at);
    RatMat a = rat_mat(n, n);
    RatVec rhs(n, Rat(0));
    for (size_t k = at; k < to; ++k) {
      Rat cst(0);
      for (const auto& [e, coef] : composed_[k].t) {
        Rat val = coef;
        int open = -1;
        for (int j = 0; j < r; ++j) {
          if (e[j] == 0) continue;
          if (solved[j]) {
            val *= rat_pow(c[j], e[j]);
          } else {
            require(open < 0 && e[j] == 1 && pos.count(j),
                    "invariant solve is not graded-triangular");
            open = j;
          }
        }
        if (open < 0)
          cst += val;
        else
          a[k - at][pos[open]] += val;
      }
      rhs[k - at] = v[k] - cst;
    }
    auto sol = solve(a, rhs);
    require(sol.has_value(), "invariant solve block is singular");
    for (size_t k = at; k < to; ++k) {
      c[k] = (*sol)[k - at];
      solved[k] = true;
    }
    at = to;
  }
  return c;
}

RatVec SliceGeometry::section(const RatVec& values) const {
  require((int)values.size() == g.d.rank, "one section coordinate per invariant degree");
  RatVec x = base_point_;
  for (int k = 0; k < g.d.rank; ++k)
    for (int idx = 0; idx < g.dim; ++idx) x[idx] += values[k] * section_basis_[k][idx];
  return x;
}

RatVec SliceGeometry::chi(const RatVec& x) const {
  require((int)x.size() == g.dim, "element size");
  RatVec vals(levi_vars_.size(), Rat(0));
  std::map<int, int> where;
  for (size_t v = 0; v < levi_vars_.size(); ++v) where[levi_vars_[v]] = (int)v;
  for (int idx = 0; idx < g.dim; ++idx) {
    auto it = where.find(idx);
    if (it != where.end())
      vals[it->second] = x[idx];
    else
      require(x[idx] == 0, "element is not supported on the Levi subalgebra");
  }
  RatVec v;
  for (const MP& gen : gens_) v.push_back(mp_eval(gen, vals));
  return solve_values(v);
}

RatVec SliceGeometry::embed_cartan(const RatVec& t) const {
  require((int)t.size() == g.d.rank, "Cartan coordinate count");
  RatVec x = g.zero();
  for (int j = 0; j < g.d.rank; ++j) x[g.h_index(j)] = t[j];
  return x;
}

SpacePoint SliceGeometry::from_cartan(const RatVec& t) const {
  SpacePoint p;
  p.I = L.I;
  p.values = chi(embed_cartan(t));
  p.cartan = t;
  auto [f_forms, g_forms] = levi_polynomials(L);
  p.levi_generic = true;
  for (const IVec& wt : f_forms)
    if (root_value_at(g.d, wt, t) == 0) p.levi_generic = false;
  p.outer_generic = true;
  for (const IVec& wt : g_forms)
    if (root_value_at(g.d, wt, t) == 0) p.outer_generic = false;
  return p;
}

SpacePoint SliceGeometry::from_values(const RatVec& values) const {
  require((int)values.size() == g.d.rank, "one coordinate per invariant degree");
  SpacePoint p;
  p.I = L.I;
  p.values = values;
  return p;
}

TorsorReport SliceGeometry::torsor_check(const SpacePoint& p) const {
  const RootDatum& d = g.d;
  if (!p.cartan.has_value())
    throw PreconditionError("torsor check needs a Cartan preimage to certify anti-genericity");
  for (int r : outer_pos_) {
    if (root_value_at(d, d.roots[r].wt, *p.cartan) == 0)
      throw PreconditionError("anti-genericity fails: the root with simple coordinates (" +
                              ivec_to_string(d.roots[r].rc) +
                              ") vanishes at the Cartan preimage");
  }

  RatVec x = section(p.values);
  TorsorReport rep;

  // Adjoint action restricted to the outer positive root spaces and
  // projected back onto them.
  int n = (int)outer_pos_.size();
  RatMat m = rat_mat(n, n);
  for (int j = 0; j < n; ++j) {
    RatVec br = g.bracket(x, g.basis_e(outer_pos_[j]));
    for (int i = 0; i < n; ++i) m[i][j] = br[g.e_index(outer_pos_[i])];
  }
  rep.det = n == 0 ? Rat(1) : det(m);

  // Stabilizer of the point inside the positive nilpotent subalgebra.
  RatMat vf;
  for (int r = 0; r < d.n_pos; ++r) vf.push_back(g.bracket(g.basis_e(r), x));
  rep.orbit_span = (long long)rank(vf);
  rep.stabilizer_trivial = rep.orbit_span == d.n_pos;

  rep.status = (rep.det != 0 && rep.stabilizer_trivial) ? "PASS" : "FAIL";
  return rep;
}

long long centralizer_dim(const ChevalleyAlgebra& g, const RatVec& x) {
  require((int)x.size() == g.dim, "element size");
  return g.dim - (long long)rank(g.ad(x));
}

RationalSampler::RationalSampler(std::uint64_t seed, int size) : rng_(seed), size_(size) {}

RatVec RationalSampler::next() {
  RatVec out(size_);
  for (int j = 0; j < size_; ++j) {
    long long num = (long long)(rng_() % 19) - 9;
    long long den = 1 + (long long)(rng_() % 3);
    out[j] = Rat(num, den);
  }
  return out;
}

}  // namespace verify
