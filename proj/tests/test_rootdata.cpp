#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "verify/rootdata.hpp"

using namespace verify;

TEST_CASE("positive root counts per type") {
  CHECK(RootDatum::get("A1").n_pos == 1);
  CHECK(RootDatum::get("A2").n_pos == 3);
  CHECK(RootDatum::get("B2").n_pos == 4);
  CHECK(RootDatum::get("C2").n_pos == 4);
  CHECK(RootDatum::get("G2").n_pos == 6);
}

TEST_CASE("weyl group sizes and longest element") {
  CHECK(RootDatum::get("A1").welts.size() == 2);
  CHECK(RootDatum::get("A2").welts.size() == 6);
  CHECK(RootDatum::get("C2").welts.size() == 8);
  CHECK(RootDatum::get("G2").welts.size() == 12);
  const RootDatum& a2 = RootDatum::get("A2");
  CHECK(a2.welts[a2.w0].length == 3);
  // Longest element of A2 sends the first fundamental weight to minus the second.
  CHECK(a2.w_act_weight(a2.w0, {1, 0}) == IVec{0, -1});
}

TEST_CASE("group law matches permutation composition") {
  const RootDatum& d = RootDatum::get("C2");
  for (size_t a = 0; a < d.welts.size(); ++a)
    for (size_t b = 0; b < d.welts.size(); ++b) {
      int ab = d.wmul[a][b];
      IVec lam = {2, -1};
      CHECK(d.w_act_weight(static_cast<int>(a), d.w_act_weight(static_cast<int>(b), lam)) ==
            d.w_act_weight(ab, lam));
    }
  for (size_t a = 0; a < d.welts.size(); ++a)
    CHECK(d.wmul[a][d.winv[a]] == d.w_id);
}

TEST_CASE("lengths via inversion count match word lengths") {
  for (const char* t : {"A1", "A2", "B2", "C2", "G2"}) {
    const RootDatum& d = RootDatum::get(t);
    for (const auto& e : d.welts) {
      int inv = 0;
      for (int k = 0; k < d.n_pos; ++k)
        if (e.perm[k] >= d.n_pos) ++inv;
      CHECK(inv == e.length);
      CHECK(static_cast<int>(e.word.size()) == e.length);
    }
  }
}

TEST_CASE("two rho check") {
  CHECK(RootDatum::get("A1").two_rho_check == IVec{1});
  CHECK(RootDatum::get("A2").two_rho_check == IVec{2, 2});
  CHECK(RootDatum::get("C2").two_rho_check == IVec{3, 4});
  CHECK(RootDatum::get("B2").two_rho_check == IVec{4, 3});
}

TEST_CASE("C2 coroot coordinates") {
  const RootDatum& d = RootDatum::get("C2");
  // Short root a1+a2 has coroot a1v + 2 a2v; long root 2a1+a2 has coroot a1v + a2v.
  int shortroot = d.root_index(ivec_add(d.cartan[0], d.cartan[1]));
  REQUIRE(shortroot >= 0);
  CHECK(d.roots[shortroot].coroot == IVec{1, 2});
  IVec longwt = ivec_add(ivec_scale(2, d.cartan[0]), d.cartan[1]);
  int longroot = d.root_index(longwt);
  REQUIRE(longroot >= 0);
  CHECK(d.roots[longroot].coroot == IVec{1, 1});
  // The highest coroot comes from the short root here.
  CHECK(d.highest_coroot_root == shortroot);
}

TEST_CASE("A2 highest coroot root is the highest root") {
  const RootDatum& d = RootDatum::get("A2");
  CHECK(d.roots[d.highest_coroot_root].wt == IVec{1, 1});
  CHECK(d.roots[d.highest_coroot_root].height == 2);
}

TEST_CASE("orbits and dominant representatives") {
  const RootDatum& a2 = RootDatum::get("A2");
  CHECK(a2.weyl_orbit({1, 0}).size() == 3);
  CHECK(a2.weyl_orbit({1, 1}).size() == 6);
  CHECK(a2.weyl_orbit({0, 0}).size() == 1);
  for (const IVec& v : a2.weyl_orbit({1, 0})) CHECK(a2.dominant_rep(v) == IVec{1, 0});
  const RootDatum& c2 = RootDatum::get("C2");
  CHECK(c2.weyl_orbit({1, 0}).size() == 4);
  CHECK(c2.weyl_orbit({0, 1}).size() == 4);
}

TEST_CASE("root coordinates and lattices") {
  const RootDatum& a2 = RootDatum::get("A2");
  RatVec rc = a2.root_coords({1, 0});
  CHECK(rc[0] == Rat(2, 3));
  CHECK(rc[1] == Rat(1, 3));
  CHECK_FALSE(a2.in_root_lattice({1, 0}));
  CHECK(a2.in_root_lattice({1, 1}));
  auto c = a2.nonneg_int_root_coords({1, 1});
  REQUIRE(c.has_value());
  CHECK(*c == IVec{1, 1});
  CHECK(a2.nonneg_int_root_coords({-1, 2}).value() == IVec{0, 1});
  CHECK_FALSE(a2.nonneg_int_root_coords({1, -1}).has_value());
  CHECK_FALSE(a2.nonneg_int_root_coords({-2, 1}).has_value());
}

TEST_CASE("dominance order") {
  const RootDatum& a2 = RootDatum::get("A2");
  CHECK(a2.dominance_leq({0, 0}, {1, 1}));
  CHECK(a2.dominance_leq({1, 1}, {1, 1}));
  CHECK_FALSE(a2.dominance_leq({1, 0}, {0, 1}));
  CHECK_FALSE(a2.dominance_leq({1, 1}, {0, 0}));
  const RootDatum& a1 = RootDatum::get("A1");
  CHECK(a1.dominance_leq({0}, {2}));
  CHECK_FALSE(a1.dominance_leq({1}, {2}));
}

TEST_CASE("weyl dimensions") {
  CHECK(RootDatum::get("A1").weyl_dim({1}) == 2);
  CHECK(RootDatum::get("A1").weyl_dim({2}) == 3);
  CHECK(RootDatum::get("A2").weyl_dim({1, 0}) == 3);
  CHECK(RootDatum::get("A2").weyl_dim({1, 1}) == 8);
  CHECK(RootDatum::get("A2").weyl_dim({3, 0}) == 10);
  CHECK(RootDatum::get("C2").weyl_dim({1, 0}) == 4);
  CHECK(RootDatum::get("C2").weyl_dim({0, 1}) == 5);
  CHECK(RootDatum::get("C2").weyl_dim({2, 0}) == 10);
  CHECK(RootDatum::get("G2").weyl_dim({1, 0}) == 7);
  CHECK(RootDatum::get("G2").weyl_dim({0, 1}) == 14);
}

TEST_CASE("dominant grids at the default heights") {
  CHECK(RootDatum::get("A1").dominant_grid(8).size() == 9);
  CHECK(RootDatum::get("A2").dominant_grid(6).size() == 10);
  auto c2grid = RootDatum::get("C2").dominant_grid(6);
  std::set<IVec> got(c2grid.begin(), c2grid.end());
  std::set<IVec> want = {{0, 0}, {1, 0}, {2, 0}, {0, 1}};
  CHECK(got == want);
}

TEST_CASE("dominant weights below a weight") {
  const RootDatum& a2 = RootDatum::get("A2");
  auto below = a2.dominant_below({1, 1});
  std::set<IVec> got(below.begin(), below.end());
  std::set<IVec> want = {{0, 0}, {1, 1}};
  CHECK(got == want);
  auto below22 = a2.dominant_below({2, 2});
  CHECK(below22.size() == 5);  // (0,0), (1,1), (3,0), (0,3), (2,2)
}

TEST_CASE("levi data") {
  const RootDatum& a2 = RootDatum::get("A2");
  LeviDatum L0 = levi_datum(a2, {0});
  auto [f, g] = levi_polynomials(L0);
  CHECK(f.size() == 2);
  CHECK(g.size() == 4);
  CHECK(L0.weyl_I.size() == 2);
  CHECK(L0.invariant_degrees == std::vector<long long>{1, 2});
  CHECK(L0.two_rho_check_I == IVec{1, 0});

  LeviDatum Lfull = levi_datum(a2, {0, 1});
  CHECK(Lfull.invariant_degrees == std::vector<long long>{2, 3});
  CHECK(Lfull.weyl_I.size() == 6);
  CHECK(Lfull.two_rho_check_I == a2.two_rho_check);

  LeviDatum Lempty = levi_datum(a2, {});
  CHECK(Lempty.invariant_degrees == std::vector<long long>{1, 1});
  CHECK(Lempty.weyl_I.size() == 1);

  LeviDatum Lc2 = levi_datum(RootDatum::get("C2"), {0, 1});
  CHECK(Lc2.invariant_degrees == std::vector<long long>{2, 4});
  LeviDatum Lg2 = levi_datum(RootDatum::get("G2"), {0, 1});
  CHECK(Lg2.invariant_degrees == std::vector<long long>{2, 6});
}

TEST_CASE("levi subsets enumeration") {
  auto subs = all_levi_subsets(RootDatum::get("A2"));
  REQUIRE(subs.size() == 4);
  CHECK(subs[0].empty());
  CHECK(subs[3] == std::vector<int>{0, 1});
}

TEST_CASE("coset labels") {
  const RootDatum& a2 = RootDatum::get("A2");
  CHECK(coset_label(a2, {0}, {1, 1}) == "(0,1)");
  CHECK(coset_label(a2, {0}, {1, 0}) == "(2/3,1/3)");
  // Shifting by the Levi root does not change the label.
  IVec shifted_wt = ivec_sub(IVec{1, 1}, ivec_scale(2, a2.cartan[0]));
  CHECK(coset_label(a2, {0}, shifted_wt) == coset_label(a2, {0}, {1, 1}));
  // Shifting by a non-Levi root does.
  IVec other = ivec_sub(IVec{1, 1}, a2.cartan[1]);
  CHECK(coset_label(a2, {0}, other) != coset_label(a2, {0}, {1, 1}));
}

TEST_CASE("reflections in non-simple roots") {
  const RootDatum& a2 = RootDatum::get("A2");
  int theta = a2.root_index({1, 1});
  int s_theta = a2.reflection_in_root(theta);
  CHECK(a2.welts[s_theta].length == 3);
  CHECK(a2.w_act_weight(s_theta, {1, 1}) == IVec{-1, -1});
}

TEST_CASE("linear forms at cartan points") {
  const RootDatum& a1 = RootDatum::get("A1");
  RatVec t = {Rat(3, 2)};
  CHECK(root_value_at(a1, a1.roots[0].wt, t) == Rat(3));
}
