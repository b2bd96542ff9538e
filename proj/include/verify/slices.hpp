#ifndef VERIFY_SLICES_HPP
#define VERIFY_SLICES_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "verify/chevalley.hpp"
#include "verify/rootdata.hpp"

namespace verify {

// A point of the adjoint-quotient base attached to a Levi subset: its
// invariant coordinates (one per generator degree, ascending) and, when the
// point was produced from a Cartan element, that preimage together with the
// two genericity flags (no Levi root vanishes / no outer root vanishes).
struct SpacePoint {
  std::vector<int> I;
  RatVec values;
  std::optional<RatVec> cartan;
  bool levi_generic = false;
  bool outer_generic = false;
};

struct TorsorReport {
  std::string status;       // "PASS" or "FAIL"
  Rat det;                  // determinant of the projected adjoint action
  long long orbit_span = 0; // rank of the nilpotent vector fields at the point
  bool stabilizer_trivial = false;
};

// Kostant-style slice geometry for a Levi subalgebra: the section
// c -> e_I + sum_k c_k s_k into the Levi, the invariant coordinates defined
// by inverting the section degree by degree, and the transversality test for
// the nilpotent-group action on the associated affine slice.
class SliceGeometry {
 public:
  SliceGeometry(const ChevalleyAlgebra& algebra, const std::vector<int>& levi);
  static const SliceGeometry& get(const std::string& cartan_type,
                                  const std::vector<int>& levi);

  const ChevalleyAlgebra& g;
  LeviDatum L;

  // Generator degrees, ascending; one section coordinate per degree.
  const std::vector<long long>& degrees() const { return degrees_; }
  // Root indices spanning the non-central part of the section complement.
  const std::vector<int>& section_roots() const { return section_roots_; }

  // The section point e_I + sum_k values[k] * s_k, in algebra coordinates.
  RatVec section(const RatVec& values) const;
  // Invariant coordinates of an element supported on the Levi subalgebra.
  RatVec chi(const RatVec& x) const;

  RatVec embed_cartan(const RatVec& t) const;
  SpacePoint from_cartan(const RatVec& t) const;
  SpacePoint from_values(const RatVec& values) const;

  // Transversality of the nilpotent action at the section point: requires an
  // outer-generic Cartan preimage (throws PreconditionError naming a
  // vanishing outer root otherwise), then tests the projected adjoint
  // determinant on the outer positive root spaces and the stabilizer rank.
  TorsorReport torsor_check(const SpacePoint& p) const;

  // Multivariate polynomials with rational coefficients, keyed by exponent
  // vectors over a fixed variable list.
  struct MPoly {
    int nvars = 0;
    std::map<std::vector<int>, Rat> t;
  };

 private:
  std::vector<int> levi_vars_;          // algebra basis indices of the Levi
  std::vector<long long> degrees_;      // == L.invariant_degrees
  std::vector<MPoly> gens_;             // raw invariants, one per degree
  std::vector<RatVec> section_basis_;   // algebra coordinates, one per degree
  std::vector<int> section_roots_;      // root indices used for degrees >= 2
  RatVec base_point_;                   // e_I in algebra coordinates
  std::vector<MPoly> composed_;         // gens_ evaluated on the section
  std::vector<int> outer_pos_;          // positive root indices outside Phi_I

  void build_generators();
  void build_section();
  void compose_section();
  RatVec solve_values(const RatVec& v) const;
};

// Dimension of the centralizer of x in the ambient algebra.
long long centralizer_dim(const ChevalleyAlgebra& g, const RatVec& x);

// Seeded generator of small rational Cartan points, used by the harness to
// sample the section properties reproducibly.
class RationalSampler {
 public:
  RationalSampler(std::uint64_t seed, int size);
  RatVec next();

 private:
  std::mt19937_64 rng_;
  int size_;
};

}  // namespace verify

#endif
