#ifndef VERIFY_HWREP_HPP
#define VERIFY_HWREP_HPP

#include <map>
#include <string>
#include <vector>

#include "verify/chevalley.hpp"
#include "verify/poly.hpp"

namespace verify {

// Exponent vector over the positive roots: the lowering monomial
// f_{beta_0}^{a_0} f_{beta_1}^{a_1} ... applied to the highest vector.
using Mon = std::vector<int>;
using ModElt = std::map<Mon, Rat>;

// Irreducible module with a chosen dominant highest weight, realized as the
// quotient of the span of lowering monomials by the radical of the
// contravariant form. Weight-space bases are picked by Gram rank, and the
// actions of the simple raising and lowering operators are solved from the
// form.
class HWModule {
 public:
  HWModule(const ChevalleyAlgebra& algebra, const IVec& lambda);

  struct WtSpace {
    IVec mu;
    std::vector<Mon> basis;
    RatMat gram;  // pairings of the chosen basis monomials
    int dim = 0;
  };

  // Rebuild from serialized weight spaces and action tables; the shapes and
  // the Weyl dimension identity are re-asserted.
  HWModule(const ChevalleyAlgebra& algebra, const IVec& lambda,
           std::map<IVec, WtSpace> spaces, std::vector<std::map<IVec, RatMat>> emat,
           std::vector<std::map<IVec, RatMat>> fmat);

  const ChevalleyAlgebra& g;
  IVec lambda;

  long long dim() const { return dim_; }
  const std::map<IVec, WtSpace>& spaces() const { return spaces_; }
  bool has_weight(const IVec& mu) const { return spaces_.count(mu) > 0; }
  const WtSpace& space(const IVec& mu) const;

  // Matrix of the i-th simple raising operator from V_mu to V_{mu+alpha_i}
  // (rows index the target basis); a 0 x dim matrix when the target is absent.
  const RatMat& e_matrix(int i, const IVec& mu) const;
  // Matrix of the i-th simple lowering operator from V_mu to V_{mu-alpha_i}.
  const RatMat& f_matrix(int i, const IVec& mu) const;

  // Contravariant form on lowering monomials (exposed for tests).
  Rat shapovalov(const Mon& a, const Mon& b);

 private:
  std::map<IVec, WtSpace> spaces_;
  long long dim_ = 0;
  std::vector<std::map<IVec, RatMat>> emat_, fmat_;
  std::map<std::pair<int, Mon>, ModElt> act_memo_;
  std::map<std::pair<Mon, Mon>, Rat> pair_memo_;

  IVec mon_weight(const Mon& m) const;
  ModElt mult_f(int r, const Mon& m);
  ModElt mult_f_elt(int r, const ModElt& x);
  const ModElt& act_e(int r, const Mon& m);
  RatVec coords_in_space(const WtSpace& sp, const ModElt& x);
};

// Decomposition of the weights of a module by their class modulo the lattice
// spanned by the Levi's simple roots.
struct CosetPart {
  std::string label;
  IVec rep;                  // lexicographically smallest weight in the part
  std::vector<IVec> weights; // all weights in the part, ascending
  long long dim = 0;         // with multiplicity
};

std::vector<CosetPart> coset_decompose(const RootDatum& d, const std::vector<int>& I,
                                       const HWModule& M);

}  // namespace verify

#endif
