#ifndef VERIFY_CHEVALLEY_HPP
#define VERIFY_CHEVALLEY_HPP

#include "verify/linalg.hpp"
#include "verify/rootdata.hpp"

namespace verify {

// The simple Lie algebra over the rationals on the Chevalley basis
// h_1..h_rank, e_beta (all roots beta). Structure constants are fixed by
// making the sign of each extraspecial pair positive; every bracket is
// validated against the Jacobi identity on all basis triples.
class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(const RootDatum& datum);
  static const ChevalleyAlgebra& get(const std::string& cartan_type);

  const RootDatum& d;
  int dim;

  int h_index(int i) const { return i; }
  int e_index(int root_idx) const { return d.rank + root_idx; }
  bool is_root_vector(int basis_idx) const { return basis_idx >= d.rank; }
  int root_of(int basis_idx) const { return basis_idx - d.rank; }

  RatVec zero() const { return RatVec(dim, Rat(0)); }
  RatVec basis(int idx) const;
  RatVec basis_h(int i) const { return basis(h_index(i)); }
  RatVec basis_e(int root_idx) const { return basis(e_index(root_idx)); }

  // N_{a,b} with [e_a, e_b] = N e_{a+b}; zero when the sum is not a root.
  long long n_constant(int root_a, int root_b) const { return nmat_[root_a][root_b]; }

  const RatVec& bracket_basis(int a, int b) const { return table_[a][b]; }
  RatVec bracket(const RatVec& x, const RatVec& y) const;
  RatMat ad(const RatVec& x) const;

  // Weight of each basis vector under the Cartan (zero for h's), in
  // fundamental-weight coordinates.
  IVec basis_weight(int idx) const;

 private:
  std::vector<std::vector<long long>> nmat_;
  std::vector<std::vector<RatVec>> table_;
  void build(long long free_sign);
  bool jacobi_holds() const;
};

}  // namespace verify

#endif
