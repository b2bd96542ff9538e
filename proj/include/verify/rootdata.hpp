#ifndef VERIFY_ROOTDATA_HPP
#define VERIFY_ROOTDATA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "verify/basics.hpp"
#include "verify/linalg.hpp"

namespace verify {

struct Root {
  IVec wt;      // fundamental-weight coordinates
  IVec rc;      // simple-root coordinates
  IVec coroot;  // simple-coroot coordinates of the associated coroot
  long long height = 0;  // sum of rc entries
};

// Pinned integral root datum of one of the desk-scale types, together with
// the finite Weyl group realized as permutations of the root list.
class RootDatum {
 public:
  explicit RootDatum(const std::string& cartan_type);
  static const RootDatum& get(const std::string& cartan_type);

  std::string cartan_type;
  int rank = 0;
  // cartan[i][j] = pairing(simple root i, simple coroot j)
  std::vector<IVec> cartan;
  std::vector<Root> roots;  // positives (height then lex), then negatives mirrored
  int n_pos = 0;
  IVec rho;             // (1,...,1)
  IVec two_rho_check;   // sum of positive coroots, simple-coroot coordinates
  int highest_coroot_root = -1;  // positive root whose coroot is the highest coroot

  struct WElt {
    std::vector<int> perm;  // image of each root index
    std::vector<int> word;  // product of simple reflections, left to right
    int length = 0;
  };
  std::vector<WElt> welts;
  int w_id = -1;
  int w0 = -1;
  std::vector<std::vector<int>> wmul;
  std::vector<int> winv;
  int simple_w(int i) const { return simple_w_[i]; }
  int reflection_in_root(int root_idx) const;

  long long pairing(const IVec& wt, const IVec& coroot) const { return ivec_dot(wt, coroot); }
  // pairing of a simple root with an arbitrary coroot vector
  long long pair_simple_root(int i, const IVec& coroot) const { return ivec_dot(cartan[i], coroot); }

  IVec simple_reflect_weight(int i, const IVec& wt) const;
  IVec simple_reflect_coroot(int i, const IVec& c) const;
  IVec w_act_weight(int w, IVec wt) const;
  IVec w_act_coroot(int w, IVec c) const;
  int w_act_root(int w, int root_idx) const { return welts[w].perm[root_idx]; }
  int w_sign(int w) const { return welts[w].length % 2 == 0 ? 1 : -1; }

  bool is_dominant(const IVec& wt) const;
  IVec dominant_rep(const IVec& wt) const;
  std::vector<IVec> weyl_orbit(const IVec& wt) const;

  RatVec root_coords(const IVec& wt) const;
  std::optional<IVec> nonneg_int_root_coords(const IVec& wt) const;
  bool in_root_lattice(const IVec& wt) const;
  bool dominance_leq(const IVec& mu, const IVec& lam) const;
  long long height_of(const IVec& wt) const { return pairing(wt, two_rho_check); }

  int root_index(const IVec& wt) const;  // -1 when wt is not a root
  long long weyl_dim(const IVec& lam) const;  // Weyl dimension formula

  // All dominant weights with height_of(wt) <= hmax.
  std::vector<IVec> dominant_grid(long long hmax) const;
  // All dominant mu <= lam (including lam itself).
  std::vector<IVec> dominant_below(const IVec& lam) const;

 private:
  std::map<IVec, int> root_lookup_;
  std::vector<int> simple_w_;
  RatMat root_coord_solver_;  // inverse of the transposed Cartan matrix
  void build_roots();
  void build_weyl();
};

struct LeviDatum {
  const RootDatum* parent = nullptr;
  std::vector<int> I;          // sorted simple indices
  std::vector<int> roots_I;    // root indices of Phi_I (positive and negative)
  std::vector<int> weyl_I;     // element indices of W_I
  IVec two_rho_I;              // sum of positive Levi roots, weight coordinates
  IVec two_rho_check_I;        // sum of positive Levi coroots, coroot coordinates
  std::vector<long long> invariant_degrees;  // ascending; 1 per central direction

  std::string label() const;
  bool contains_simple(int i) const;
};

LeviDatum levi_datum(const RootDatum& d, std::vector<int> I);
std::vector<std::vector<int>> all_levi_subsets(const RootDatum& d);

// f_I = all roots of the Levi, g_I = all other roots, as lists of weight
// vectors (the polynomials are products of these linear forms on the Cartan).
std::pair<std::vector<IVec>, std::vector<IVec>> levi_polynomials(const LeviDatum& L);

// Canonical label of (wt mod Z-span of the Levi's simple roots).
std::string coset_label(const RootDatum& d, const std::vector<int>& I, const IVec& wt);

// Value of the linear form "root" at the Cartan point with coordinates t
// (in the h_i basis): sum_i t_i * pairing(root, coroot_i).
Rat root_value_at(const RootDatum& d, const IVec& root_wt, const RatVec& t);

}  // namespace verify

#endif
