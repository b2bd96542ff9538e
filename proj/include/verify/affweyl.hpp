#ifndef VERIFY_AFFWEYL_HPP
#define VERIFY_AFFWEYL_HPP

#include <string>
#include <utility>
#include <vector>

#include "verify/rootdata.hpp"

namespace verify {

// Element t_lam * w of the extended affine Weyl group: lam runs over the
// weight lattice (fundamental-weight coordinates), w over the finite group.
struct AffWeylElt {
  IVec lam;
  int w = 0;
  bool operator==(const AffWeylElt& o) const { return w == o.w && lam == o.lam; }
  bool operator!=(const AffWeylElt& o) const { return !(*this == o); }
  bool operator<(const AffWeylElt& o) const {
    if (w != o.w) return w < o.w;
    return lam < o.lam;
  }
};

class AffWeyl {
 public:
  explicit AffWeyl(const RootDatum& datum);
  static const AffWeyl& get(const std::string& cartan_type);

  const RootDatum& d;
  int n_gen;  // generators 0..rank, 0 the affine one

  AffWeylElt identity() const { return {IVec(d.rank, 0), d.w_id}; }
  AffWeylElt translation(const IVec& lam) const { return {lam, d.w_id}; }
  AffWeylElt finite(int w) const { return {IVec(d.rank, 0), w}; }
  AffWeylElt gen(int i) const;

  AffWeylElt mult(const AffWeylElt& a, const AffWeylElt& b) const;
  AffWeylElt inverse(const AffWeylElt& a) const;

  long long length(const AffWeylElt& x) const;
  // translation part lies in the root lattice
  bool neutral(const AffWeylElt& x) const { return d.in_root_lattice(x.lam); }

  // The length-zero subgroup; its size is the index of the root lattice in
  // the weight lattice.
  const std::vector<AffWeylElt>& omega() const { return omega_; }
  // x = omega_part * neutral_part with the omega part of length zero
  std::pair<AffWeylElt, AffWeylElt> split_omega(const AffWeylElt& x) const;

  // Greedy left-descent reduced word; requires a neutral element.
  std::vector<int> reduced_word(const AffWeylElt& x) const;
  AffWeylElt from_word(const std::vector<int>& word) const;

  // Unique longest element of the double coset W t_mu W.
  AffWeylElt double_coset_max(const IVec& mu) const;

  std::string to_string(const AffWeylElt& x) const;

 private:
  std::vector<AffWeylElt> omega_;
  AffWeylElt s0_;
};

}  // namespace verify

#endif
