#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "duplex/catalog.hpp"
#include "duplex/dupcat.hpp"
#include "duplex/nerve.hpp"

using namespace duplex;

namespace {

DuplicialFamily<SetTarget> z2_family(int N) {
  auto c = share(catalog::cyclic_group(2));
  return nerve_family(nerve(c, N), canonical_groupoid(*c));
}

std::vector<DuplicialOperator> ops_between(int n, int m, int kmax) {
  std::vector<DuplicialOperator> out;
  for (const auto& s : all_operators(n, m)) {
    for (int k = 0; k <= (m >= 0 ? kmax : 0); ++k) out.push_back({k, s});
  }
  return out;
}

// Composite of value lists computed without compose_op.
std::vector<int> after(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  for (int v : a) r.push_back(b[v]);
  return r;
}

}  // namespace

TEST_CASE("face and degeneracy encodings") {
  CHECK(face_op(2, 1).values == std::vector<int>{0, 2});
  CHECK(degen_op(1, 0).values == std::vector<int>{0, 0, 1});
  // d_0 d_1 = d_0 d_0 on X_3
  CHECK(compose_op(face_op(2, 0), face_op(3, 1)) == compose_op(face_op(2, 0), face_op(3, 0)));
  CHECK(compose_op(face_op(2, 0), face_op(3, 1)).values == std::vector<int>{2, 3});
  CHECK(compose_op(identity_op(3), face_op(4, 2)) == face_op(4, 2));
  CHECK_THROWS_AS((void)compose_op(face_op(2, 0), face_op(2, 0)), Error);
}

TEST_CASE("simplicial identities hold for the encodings") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 0; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        // d_i d_j = d_{j-1} d_i
        CHECK(compose_op(face_op(n - 1, i), face_op(n, j)) == compose_op(face_op(n - 1, j - 1), face_op(n, i)));
      }
    }
  }
}

TEST_CASE("factorization round trips") {
  for (int n = -1; n <= 4; ++n) {
    for (int m = -1; m <= 4; ++m) {
      for (const auto& op : all_operators(n, m)) {
        CHECK(is_valid(op));
        CHECK(from_word(n, factor(op)) == op);
      }
    }
  }
  CHECK(all_operators(2, 1).size() == 6);
  CHECK(all_operators(-1, 0).empty());
  CHECK(all_operators(3, -1).size() == 1);
}

TEST_CASE("reversal is an anti-monoidal involution") {
  std::mt19937 rng(0);
  for (int n = -1; n <= 4; ++n) CHECK(rev_op(identity_op(n)) == identity_op(n));
  for (int trial = 0; trial < 300; ++trial) {
    int n1 = std::uniform_int_distribution<int>(-1, 3)(rng), m1 = std::uniform_int_distribution<int>(-1, 3)(rng);
    int n2 = std::uniform_int_distribution<int>(-1, 3)(rng), m2 = std::uniform_int_distribution<int>(-1, 3)(rng);
    auto a = all_operators(n1, m1);
    auto b = all_operators(n2, m2);
    if (a.empty() || b.empty()) continue;
    const auto& f = a[rng() % a.size()];
    const auto& g = b[rng() % b.size()];
    CHECK(rev_op(rev_op(f)) == f);
    CHECK(is_valid(rev_op(f)));
    CHECK(rev_op(ordinal_sum(f, g)) == ordinal_sum(rev_op(g), rev_op(f)));
  }
  // reversal exchanges d_i and d_{n-i}
  CHECK(rev_op(face_op(3, 0)) == face_op(3, 3));
  CHECK(rev_op(degen_op(3, 1)) == degen_op(3, 2));
}

TEST_CASE("rewriting instances of the duplicial relations") {
  const int n = 3;
  // d_0 t_{n+1} = d_{n+1}
  CHECK(compose_duplicial({0, face_op(n + 1, 0)}, t_op(n + 1)) == DuplicialOperator{0, face_op(n + 1, n + 1)});
  // s_0 t_n = t^2 s_n
  CHECK(compose_duplicial({0, degen_op(n, 0)}, t_op(n)) == DuplicialOperator{2, degen_op(n, n)});
  // d_2 t_{n+1} = t_n d_1
  CHECK(compose_duplicial({0, face_op(n + 1, 2)}, t_op(n + 1)) == DuplicialOperator{1, face_op(n + 1, 1)});
  // augmentation: d_0 t_0 = d_0
  CHECK(compose_duplicial({0, face_op(0, 0)}, t_op(0)) == DuplicialOperator{0, face_op(0, 0)});
  CHECK_THROWS_AS((void)compose_duplicial(t_op(2), t_op(3)), Error);
}

TEST_CASE("t-free operators compose as in Δ") {
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      for (int k = 0; k <= 3; ++k) {
        for (const auto& b : all_operators(n, m)) {
          for (const auto& a : all_operators(m, k)) {
            CHECK(compose_duplicial({0, a}, {0, b}) == DuplicialOperator{0, compose_op(a, b)});
            CHECK(compose_op(a, b).values == after(a.values, b.values));
          }
        }
      }
    }
  }
}

TEST_CASE("t-power growth bound") {
  for (int level = 0; level <= 5; ++level) {
    for (int i = 0; i <= level; ++i) {
      for (char kind : {'d', 's'}) {
        for (int k = 0; k <= 12; ++k) {
          RewriteStats st;
          auto [c, g] = push_generator({kind, i, level}, k, &st);
          CHECK(st.steps <= 2 * k);
          CHECK(c <= 2 * k);
          CHECK(g.level == level);
        }
      }
    }
  }
}

TEST_CASE("evaluation is functorial on the Z/2 family and the periodic family") {
  const int N = 4;
  auto z2 = z2_family(N);
  auto per = periodic_family(2, 2, N).family;
  REQUIRE(classify_duplicial(per).kind == DuplicialKind::Paracyclic);
  for (const DuplicialFamily<SetTarget>* F : {&z2, &per}) {
    const SetTarget tg;
    std::map<DuplicialOperator, std::vector<int>> cache;
    auto ev = [&](const DuplicialOperator& o) -> const std::vector<int>& {
      auto it = cache.find(o);
      if (it == cache.end()) it = cache.emplace(o, eval_op(o, *F)).first;
      return it->second;
    };
    for (int n = 0; n <= 3; ++n) {
      for (int m = 0; m <= 3; ++m) {
        for (int l = 0; l <= 3; ++l) {
          for (const auto& b : ops_between(n, m, 2)) {
            for (const auto& a : ops_between(m, l, 2)) {
              auto ab = compose_duplicial(a, b);
              CHECK(ab.n() == n);
              CHECK(ab.m() == l);
              CHECK(ev(ab) == tg.compose(ev(a), ev(b)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("normal forms are separated by the periodic family") {
  // t_m has order r(m+1) there, so forms with k < r(m+1) must stay distinct.
  const int r = 2;
  auto per = periodic_family(3, r, 3).family;
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      std::set<std::vector<int>> seen;
      int count = 0;
      for (const auto& o : ops_between(n, m, r * (m + 1) - 1)) {
        seen.insert(eval_op(o, per));
        ++count;
      }
      CHECK(static_cast<int>(seen.size()) == count);
    }
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937 rng(0);
  auto pick = [&](int n, int m) {
    auto all = all_operators(n, m);
    return DuplicialOperator{static_cast<int>(rng() % 4), all[rng() % all.size()]};
  };
  for (int trial = 0; trial < 1000; ++trial) {
    std::uniform_int_distribution<int> deg(0, 6);
    int n = deg(rng), m = deg(rng), l = deg(rng), q = deg(rng);
    auto c = pick(n, m), b = pick(m, l), a = pick(l, q);
    CHECK(compose_duplicial(a, compose_duplicial(b, c)) == compose_duplicial(compose_duplicial(a, b), c));
    CHECK(compose_duplicial({0, identity_op(q)}, a) == a);
    CHECK(compose_duplicial(a, {0, identity_op(l)}) == a);
  }
}

TEST_CASE("text notation") {
  auto o = DuplicialOperator{2, compose_op(degen_op(2, 1), face_op(3, 0))};
  CHECK(to_string(o) == "t^2 . s_{1}d_{0} @ 3->3");
  CHECK(parse_duplicial(to_string(o)) == o);
  CHECK(parse_duplicial("t . id @ 2->2") == t_op(2));
  CHECK(parse_duplicial("d_0 @ 1->0") == DuplicialOperator{0, face_op(1, 0)});
  CHECK(parse_duplicial("t^0 . d_{0} d_{1} @ 3->1") == DuplicialOperator{0, compose_op(face_op(2, 0), face_op(3, 1))});
  CHECK(to_string(parse_duplicial("t^0 . d_{0} d_{1} @ 3->1")) == "t^0 . d_{0}d_{1} @ 3->1");
  CHECK_THROWS_AS((void)parse_duplicial("t^1 . d_{0} @ 3->3"), Error);
  CHECK_THROWS_AS((void)parse_duplicial("x_{0} @ 1->0"), Error);
  CHECK_THROWS_AS((void)parse_duplicial("t . d_{0} @ 0->-1"), Error);
  for (int n = -1; n <= 3; ++n) {
    for (int m = -1; m <= 3; ++m) {
      for (const auto& op : ops_between(n, m, 2)) CHECK(parse_duplicial(to_string(op)) == op);
    }
  }
}
