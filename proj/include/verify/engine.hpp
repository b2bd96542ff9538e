#ifndef VERIFY_ENGINE_HPP
#define VERIFY_ENGINE_HPP

#include <string>
#include <vector>

#include "verify/hwrep.hpp"
#include "verify/poly.hpp"

namespace verify {

// Graded dimensions of the invariant sections over one central-character
// class, with the canonical regrading shift of that class recorded.
struct GradedSummary {
  std::string label;
  IVec rep;
  long long shift = 0;
  long long lo = 0, hi = 0;        // inclusive degree window actually computed
  std::vector<long long> dims;     // dims[n - lo]

  PolyZ hilbert() const;
  long long total() const;
};

// Invariants of the nilpotent action on functions on the shifted Borel slice
// tensored with the irreducible module, graded by degree and split by the
// central character classes of the module's weights.
struct SpectralModule {
  std::string cartan_type;
  std::vector<int> I;
  IVec lambda;
  long long cutoff = 0;
  std::vector<GradedSummary> cosets;  // ordered by label

  const GradedSummary* find(const std::string& label) const;
};

SpectralModule spectral_module(const HWModule& M, const std::vector<int>& I,
                               long long cutoff);

// Trivial-Levi invariants at one fixed character (the base case of the
// graded comparison); degrees are even, so callers can halve the series.
GradedSummary gr_base_module(const HWModule& M, const IVec& mu, long long cutoff);

// Clears a windowed Hilbert series against a free-module hypothesis over
// generators in the given degrees (doubled in the cohomological grading).
// FAIL on a negative numerator coefficient; INCONCLUSIVE when the window is
// too short to trust the numerator; otherwise PASS with the generic rank.
struct FreenessResult {
  PolyZ numerator;
  long long rank = 0;
  std::string status;
  std::string note;
};

FreenessResult freeness_test(const GradedSummary& s, const std::vector<long long>& degrees);

}  // namespace verify

#endif
