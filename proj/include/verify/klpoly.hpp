#ifndef VERIFY_KLPOLY_HPP
#define VERIFY_KLPOLY_HPP

#include <map>
#include <vector>

#include "verify/affweyl.hpp"
#include "verify/poly.hpp"

namespace verify {

// The lower interval [e, w] in the neutral component, with the order
// restricted to it. leq[i][j] says whether element j <= element i.
struct BruhatInterval {
  std::vector<AffWeylElt> elts;  // sorted by (length, canonical string)
  std::map<AffWeylElt, int> index;
  std::vector<long long> lengths;
  std::vector<std::vector<char>> leq;

  int find(const AffWeylElt& x) const {
    auto it = index.find(x);
    return it == index.end() ? -1 : it->second;
  }
  bool leq_idx(int x, int y) const { return leq[y][x] != 0; }
};

BruhatInterval bruhat_interval(const AffWeyl& W, const AffWeylElt& w);

// All Kazhdan-Lusztig data for one top element w (neutral component).
class KLTable {
 public:
  KLTable(const AffWeyl& W, const AffWeylElt& w);

  const BruhatInterval& interval() const { return iv_; }
  const AffWeylElt& top() const { return w_; }

  // R_{x,y} within the interval; zero when x is not below y.
  const PolyZ& r_poly(int x, int y);
  // P_{y,w}; zero when y is not in the interval.
  PolyZ kl_row(const AffWeylElt& y);
  const PolyZ& kl_row_idx(int y) const { return p_[y]; }

 private:
  const AffWeyl& W_;
  AffWeylElt w_;
  BruhatInterval iv_;
  std::vector<int> left_descent_;  // a generator index strictly lowering each element
  std::map<std::pair<int, int>, PolyZ> rmemo_;
  std::vector<PolyZ> p_;
  void compute_kl();
};

// Shared per-process table for a given neutral top element.
KLTable& kl_table_cached(const AffWeyl& W, const AffWeylElt& w);

// Convenience single-value entry points; both sides may carry a length-zero
// factor, which must agree on the left for a nonzero answer.
PolyZ kl_polynomial(const AffWeyl& W, const AffWeylElt& y, const AffWeylElt& w);
PolyZ r_polynomial(const AffWeyl& W, const AffWeylElt& x, const AffWeylElt& y);

// Graded costalk series of the translation stratum labelled mu inside the
// closure of the one labelled lambda: the degree-reversed Kazhdan-Lusztig
// entry between the longest double-coset elements, rescaled so its lowest
// term sits in degree zero exactly when mu = lambda.
PolyZ costalk_poincare(const AffWeyl& W, const IVec& lambda, const IVec& mu);
// The same rescaling applied to a caller-supplied Kazhdan-Lusztig entry
// (the persistent-cache path).
PolyZ costalk_from_kl(const AffWeyl& W, const IVec& lambda, const IVec& mu, const PolyZ& kl);

}  // namespace verify

#endif
