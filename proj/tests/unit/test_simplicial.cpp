#include <doctest.h>

#include "duplex/catalog.hpp"
#include "duplex/nerve.hpp"
#include "duplex/simplicial.hpp"

using namespace duplex;

namespace {

// Standard simplices Δ[k] truncated at N as a simplicial set: monotone maps
// [n] -> [k], computed directly as value vectors.
struct DeltaK {
  std::vector<std::vector<std::vector<int>>> maps;
};

std::vector<std::vector<int>> monotone(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(n + 1, 0);
  std::function<void(int, int)> go = [&](int i, int lo) {
    if (i == n + 1) {
      out.push_back(v);
      return;
    }
    for (int x = lo; x <= k; ++x) {
      v[i] = x;
      go(i + 1, x);
    }
  };
  go(0, 0);
  return out;
}

TruncAugSimplicial<SetTarget> delta(int k, int N) {
  std::vector<std::vector<std::vector<int>>> lv;
  for (int n = 0; n <= N; ++n) lv.push_back(monotone(n, k));
  auto find = [&](int n, const std::vector<int>& v) {
    for (int s = 0; s < static_cast<int>(lv[n].size()); ++s) {
      if (lv[n][s] == v) return s;
    }
    throw std::logic_error("missing simplex");
  };
  return TruncAugSimplicial<SetTarget>::build(
      SetTarget{}, N, false, [&](int n) { return static_cast<int>(lv[n].size()); },
      [&](int n, int i) {
        std::vector<int> m;
        for (auto v : lv[n]) {
          v.erase(v.begin() + i);
          m.push_back(find(n - 1, v));
        }
        return m;
      },
      [&](int n, int j) {
        std::vector<int> m;
        for (auto v : lv[n]) {
          v.insert(v.begin() + j, v[j]);
          m.push_back(find(n + 1, v));
        }
        return m;
      });
}

int binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

}  // namespace

TEST_CASE("standard simplices satisfy the simplicial identities") {
  for (int k = 0; k <= 3; ++k) {
    auto X = delta(k, 4);
    CHECK(check_simplicial(X));
    for (int n = 0; n <= 4; ++n) CHECK(X.level(n) == binom(n + k + 1, n + 1));
  }
}

TEST_CASE("a broken face table is caught") {
  auto X = delta(2, 3);
  auto f = X.face(2, 1);
  std::swap(f[0], f[1]);
  X.set_face(2, 1, f);
  auto r = check_simplicial(X);
  CHECK_FALSE(r);
  CHECK((r.rule == "FaceFace" || r.rule == "FaceDegen"));
}

TEST_CASE("nerve of the 2-chain is Δ[1]") {
  auto c = share(catalog::chain(2));
  auto nv = nerve(c, 3);
  auto d = delta(1, 3);
  for (int n = 0; n <= 3; ++n) CHECK(nv.sset.level(n) == n + 2);
  // Same simplicial set up to the order of simplices: compare sizes of all
  // fibres of all faces.
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i <= n; ++i) {
      std::vector<int> a(nv.sset.level(n - 1)), b(d.level(n - 1));
      for (int s : nv.sset.face(n, i)) ++a[s];
      for (int s : d.face(n, i)) ++b[s];
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
  }
  CHECK(check_simplicial(nv.sset));
}

TEST_CASE("nerves of fixtures are simplicial and both decalages are comonads") {
  for (const auto& c : catalog::small_fixtures(6)) {
    auto nv = nerve(share(c), 4);
    REQUIRE(check_simplicial(nv.sset));
    CHECK(check_decalage_comonad(nv.sset, Side::Right));
    CHECK(check_decalage_comonad(nv.sset, Side::Left));
    CHECK(check_simplicial(reverse(nv.sset)));
    CHECK(reverse(reverse(nv.sset)) == nv.sset);
  }
}

TEST_CASE("Z/2 nerve level n has 2^n simplices") {
  auto nv = nerve(share(catalog::cyclic_group(2)), 5);
  for (int n = 0; n <= 5; ++n) CHECK(nv.sset.level(n) == (1 << n));
}

TEST_CASE("right decalage of a nerve is the nerve of the slices") {
  for (const auto& c : catalog::small_fixtures(6)) {
    CHECK(check_dec_nerve_slices(nerve(share(c), 4)));
  }
}

TEST_CASE("out of truncation access throws") {
  auto X = delta(1, 2);
  CHECK_THROWS_AS((void)X.level(3), Error);
  CHECK_THROWS_AS((void)X.level(-1), Error);
  CHECK_THROWS_AS((void)decalage(truncate(X, 0), Side::Right), Error);
}

TEST_CASE("bar resolutions of comonads are augmented simplicial objects") {
  for (const auto& c : catalog::small_fixtures(5)) {
    auto cp = share(c);
    Budget budget;
    for (const auto& g : enumerate_comonads(cp, budget)) {
      for (ObjId x = 0; x < cp->num_objects(); ++x) {
        auto B = bar_resolution(g, identity_functor(cp), x, 3);
        CHECK(B.augmented());
        CHECK(check_simplicial(B));
        CHECK(check_decalage_comonad(B, Side::Right));
      }
    }
  }
}
