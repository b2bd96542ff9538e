#ifndef VERIFY_QMULT_HPP
#define VERIFY_QMULT_HPP

#include <map>

#include "verify/poly.hpp"
#include "verify/rootdata.hpp"

namespace verify {

// q-weighted count of the ways to write nu as a sum of positive roots,
// graded by the number of summands.
PolyZ kostant_partition_q(const RootDatum& d, const IVec& nu);

// Alternating sum of q-weighted partition counts over the finite Weyl group;
// specializes at q = 1 to the weight multiplicity of mu in L(lambda).
PolyZ lusztig_q_mult(const RootDatum& d, const IVec& lambda, const IVec& mu);

// Weight multiplicity by the Freudenthal recursion, independent of any
// alternating sum or explicit module construction.
long long freudenthal_mult(const RootDatum& d, const IVec& lambda, const IVec& mu);

// All weights of the irreducible module with highest weight lambda.
std::map<IVec, long long> weight_system(const RootDatum& d, const IVec& lambda);

// Character of L(lambda) graded by the pairing with the sum of positive
// Levi coroots.
PolyZ graded_character(const LeviDatum& L, const IVec& lambda);
// Same, restricted to weights congruent to rep modulo the lattice spanned by
// the Levi's simple roots.
PolyZ graded_character_coset(const LeviDatum& L, const IVec& lambda, const IVec& rep);

// W-invariant pairing used by the Freudenthal recursion.
long long invariant_form(const RootDatum& d, const IVec& x, const IVec& y);

}  // namespace verify

#endif
