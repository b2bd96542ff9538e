#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <deque>
#include <map>

#include "verify/affweyl.hpp"

using namespace verify;

// Word-length distances in the neutral component, computed by breadth-first
// search over generator multiplication, independent of the length formula.
static std::map<AffWeylElt, int> bfs_ball(const AffWeyl& W, int radius) {
  std::map<AffWeylElt, int> dist;
  std::deque<AffWeylElt> queue;
  dist[W.identity()] = 0;
  queue.push_back(W.identity());
  while (!queue.empty()) {
    AffWeylElt cur = queue.front();
    queue.pop_front();
    int dc = dist[cur];
    if (dc == radius) continue;
    for (int i = 0; i < W.n_gen; ++i) {
      AffWeylElt nxt = W.mult(W.gen(i), cur);
      if (dist.emplace(nxt, dc + 1).second) queue.push_back(nxt);
    }
  }
  return dist;
}

TEST_CASE("length formula matches breadth-first word length") {
  for (const char* t : {"A1", "A2", "C2"}) {
    const AffWeyl& W = AffWeyl::get(t);
    auto ball = bfs_ball(W, 6);
    CHECK(ball.size() > 10);
    for (const auto& [x, dist] : ball) CHECK(W.length(x) == dist);
  }
}

TEST_CASE("generators are involutions of length one") {
  for (const char* t : {"A1", "A2", "B2", "C2", "G2"}) {
    const AffWeyl& W = AffWeyl::get(t);
    for (int i = 0; i < W.n_gen; ++i) {
      CHECK(W.length(W.gen(i)) == 1);
      CHECK(W.mult(W.gen(i), W.gen(i)) == W.identity());
    }
  }
}

TEST_CASE("translation lengths equal heights for dominant weights") {
  for (const char* t : {"A1", "A2", "C2", "G2"}) {
    const AffWeyl& W = AffWeyl::get(t);
    for (const IVec& lam : W.d.dominant_grid(6))
      CHECK(W.length(W.translation(lam)) == W.d.height_of(lam));
  }
  CHECK(AffWeyl::get("A1").length(AffWeyl::get("A1").translation({2})) == 2);
  CHECK(AffWeyl::get("A2").length(AffWeyl::get("A2").translation({1, 1})) == 4);
}

TEST_CASE("group laws") {
  const AffWeyl& W = AffWeyl::get("C2");
  std::vector<AffWeylElt> sample = {
      W.identity(), W.gen(0), W.gen(1), W.gen(2),
      W.translation({1, 0}), W.translation({-1, 2}),
      W.mult(W.gen(0), W.translation({1, 1})),
  };
  for (const auto& a : sample) {
    CHECK(W.mult(a, W.inverse(a)) == W.identity());
    CHECK(W.length(a) == W.length(W.inverse(a)));
    for (const auto& b : sample)
      for (const auto& c : sample)
        CHECK(W.mult(W.mult(a, b), c) == W.mult(a, W.mult(b, c)));
  }
}

TEST_CASE("length zero subgroup sizes") {
  CHECK(AffWeyl::get("A1").omega().size() == 2);
  CHECK(AffWeyl::get("A2").omega().size() == 3);
  CHECK(AffWeyl::get("B2").omega().size() == 2);
  CHECK(AffWeyl::get("C2").omega().size() == 2);
  CHECK(AffWeyl::get("G2").omega().size() == 1);
}

TEST_CASE("length zero elements normalize length") {
  const AffWeyl& W = AffWeyl::get("A2");
  auto ball = bfs_ball(W, 4);
  for (const AffWeylElt& om : W.omega())
    for (const auto& [x, dist] : ball) {
      CHECK(W.length(W.mult(om, x)) == dist);
      CHECK(W.length(W.mult(x, om)) == dist);
    }
}

TEST_CASE("omega splitting") {
  const AffWeyl& W = AffWeyl::get("A2");
  AffWeylElt x = W.mult(W.translation({1, 0}), W.gen(1));
  auto [om, rest] = W.split_omega(x);
  CHECK(W.length(om) == 0);
  CHECK(W.neutral(rest));
  CHECK(W.mult(om, rest) == x);
  // Neutral elements split with the trivial omega factor.
  AffWeylElt y = W.translation({1, 1});
  auto [om2, rest2] = W.split_omega(y);
  CHECK(om2 == W.identity());
  CHECK(rest2 == y);
}

TEST_CASE("reduced words roundtrip") {
  for (const char* t : {"A1", "A2", "C2"}) {
    const AffWeyl& W = AffWeyl::get(t);
    auto ball = bfs_ball(W, 5);
    for (const auto& [x, dist] : ball) {
      if (!W.neutral(x)) continue;
      auto word = W.reduced_word(x);
      CHECK(static_cast<int>(word.size()) == dist);
      CHECK(W.from_word(word) == x);
    }
  }
}

TEST_CASE("longest double coset elements") {
  const AffWeyl& a1 = AffWeyl::get("A1");
  AffWeylElt n2 = a1.double_coset_max({2});
  CHECK(a1.length(n2) == 3);
  CHECK(n2 == a1.mult(a1.finite(a1.d.w0), a1.translation({2})));
  CHECK(a1.double_coset_max({0}) == a1.finite(a1.d.w0));

  const AffWeyl& a2 = AffWeyl::get("A2");
  CHECK(a2.length(a2.double_coset_max({1, 1})) == 7);
  CHECK(a2.length(a2.double_coset_max({1, 0})) == 5);
  CHECK(a2.double_coset_max({1, 1}) ==
        a2.mult(a2.finite(a2.d.w0), a2.translation({1, 1})));

  const AffWeyl& c2 = AffWeyl::get("C2");
  CHECK(c2.length(c2.double_coset_max({0, 0})) == 4);
  CHECK(c2.length(c2.double_coset_max({1, 0})) == 3 + 4);
}

TEST_CASE("canonical strings") {
  const AffWeyl& W = AffWeyl::get("A2");
  CHECK(W.to_string(W.identity()) == "t[0,0]*w[]");
  CHECK(W.to_string(W.translation({2, -1})) == "t[2,-1]*w[]");
  AffWeylElt x = W.mult(W.translation({1, 1}), W.finite(W.d.simple_w(0)));
  CHECK(W.to_string(x) == "t[1,1]*w[1]");
}
