#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "curves/generators.hpp"
#include "curves/moves.hpp"

using namespace curves;

TEST_CASE("torus projections") {
  auto t = torus_projection(2, 3);
  CHECK(t.n() == 3);
  CHECK(canonicalize(t) == canonicalize(realize({0, 1, 2, 0, 1, 2})[0]));
  auto t34 = torus_projection(3, 4);
  CHECK(t34.n() == 8);
  CHECK(face_census(faces(t34.word, t34.signs)) == FaceCensus{{3, 8}, {4, 2}});
  CHECK(torus_projection(4, 3).n() == 9);
  CHECK(torus_projection(3, 5).n() == 10);
  for (auto t : {torus_projection(3, 2), torus_projection(4, 3), torus_projection(3, 4)}) {
    CHECK(is_reduced(t.word));
    CHECK(is_prime(t.word));
  }
  CHECK_THROWS(torus_projection(2, 4));
  CHECK_THROWS(torus_projection(4, 2));
  CHECK_THROWS(torus_projection(1, 3));
}

TEST_CASE("enumeration counts") {
  auto levels = enumerate_curves(6);
  std::vector<size_t> want{1, 2, 6, 19, 76, 376};
  for (int n = 1; n <= 6; ++n) CHECK(levels[n].size() == want[n - 1]);
}

TEST_CASE("enumeration filters at small n") {
  auto levels = enumerate_curves(3);
  // n=1: only the curl, not reduced
  CHECK(levels[1].size() == 1);
  CHECK(!is_reduced(levels[1][0].word));
  // n=2: no reduced curve exists (both 2-crossing curves are double curls)
  for (auto& c : levels[2]) CHECK(!is_reduced(c.word));
  // n=3: exactly one reduced+prime curve, the trefoil projection
  std::vector<PlaneCurve> rp;
  for (auto& c : levels[3])
    if (is_reduced(c.word) && is_prime(c.word)) rp.push_back(c);
  REQUIRE(rp.size() == 1);
  CHECK(canonicalize(rp[0]) == canonicalize(torus_projection(2, 3)));
}

TEST_CASE("closure is downward consistent") {
  // splicing any crossing of a level-n curve lands in level n-1
  auto levels = enumerate_curves(5);
  for (int n = 2; n <= 5; ++n) {
    std::set<CanonicalCode> prev;
    for (auto& c : levels[n - 1]) prev.insert(canonicalize(c));
    for (auto& c : levels[n])
      for (int lab = 0; lab < n; ++lab)
        CHECK(prev.count(canonicalize(half_twisted_splice(c, lab))));
  }
}

TEST_CASE("enumeration agrees with realize-based generation at n <= 4") {
  // independent generation: all double-occurrence words, realized
  for (int n = 1; n <= 4; ++n) {
    std::set<CanonicalCode> direct;
    Word w(2 * n);
    std::function<void(int, std::vector<int>&, int)> rec = [&](int i, std::vector<int>& cnt,
                                                               int nxt) {
      if (i == 2 * n) {
        if (nxt == n)
          for (auto& c : realize(w)) direct.insert(canonicalize(c));
        return;
      }
      for (int c = 0; c <= std::min(nxt, n - 1); ++c) {
        if (cnt[c] >= 2) continue;
        ++cnt[c];
        w[i] = c;
        rec(i + 1, cnt, c == nxt && cnt[c] == 1 ? nxt + 1 : nxt);
        --cnt[c];
      }
    };
    std::vector<int> cnt(n, 0);
    rec(0, cnt, 0);
    auto levels = enumerate_curves(n);
    std::set<CanonicalCode> closure;
    for (auto& c : levels[n]) closure.insert(canonicalize(c));
    CHECK(closure == direct);
  }
}
