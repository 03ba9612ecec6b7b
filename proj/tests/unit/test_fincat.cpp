#include <doctest.h>

#include <functional>
#include <set>

#include "duplex/catalog.hpp"
#include "duplex/fincat.hpp"

using namespace duplex;

namespace {

// Naive oracle: every assignment of ids, filtered by the checkers only.
std::vector<FinFunctor> naive_functors(const CatPtr& c, const CatPtr& d) {
  std::vector<FinFunctor> out;
  std::vector<int> obj(c->num_objects(), 0), mor(c->num_morphisms(), 0);
  std::function<void(int)> go = [&](int k) {
    const int no = c->num_objects();
    if (k == no + c->num_morphisms()) {
      FinFunctor f(c, d, obj, mor);
      if (check_functor(f)) out.push_back(f);
      return;
    }
    const int range = k < no ? d->num_objects() : d->num_morphisms();
    for (int v = 0; v < range; ++v) {
      (k < no ? obj[k] : mor[k - no]) = v;
      go(k + 1);
    }
  };
  go(0);
  return out;
}

std::vector<std::vector<MorId>> all_component_lists(const FinCategory& c, int n) {
  std::vector<std::vector<MorId>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<MorId>> next;
    for (const auto& v : out) {
      for (MorId m = 0; m < c.num_morphisms(); ++m) {
        auto w = v;
        w.push_back(m);
        next.push_back(w);
      }
    }
    out = next;
  }
  return out;
}

std::vector<Comonad> naive_comonads(const CatPtr& c) {
  std::vector<Comonad> out;
  auto one = identity_functor(c);
  auto comps = all_component_lists(*c, c->num_objects());
  for (const auto& g : naive_functors(c, c)) {
    auto gg = compose(g, g);
    for (const auto& e : comps) {
      for (const auto& d : comps) {
        Comonad cm{g, NatTrans(g, gg, d), NatTrans(g, one, e)};
        if (check_comonad(cm)) out.push_back(cm);
      }
    }
  }
  return out;
}

Comonad bottom_coreflection(const CatPtr& p) {
  FinFunctor g(p, p, {0, 0}, {0, 0, 0});
  auto gg = compose(g, g);
  return Comonad{g, NatTrans(g, gg, {0, 0}), NatTrans(g, identity_functor(p), {0, 2})};
}

}  // namespace

TEST_CASE("validate_category accepts small categories") {
  auto term = catalog::terminal();
  CHECK(term.num_objects() == 1);
  CHECK(term.num_morphisms() == 1);
  CHECK(validate_category(term.to_raw()).report.ok);

  auto p = catalog::chain(2);
  CHECK(p.num_morphisms() == 3);
  CHECK(validate_category(p.to_raw()).report.ok);
}

TEST_CASE("validate_category rejects a composite with the wrong source") {
  auto raw = catalog::chain(3).to_raw();
  // chain(3): identities 0..2, then 0<1 (3), 0<2 (4), 1<2 (5).
  for (auto& t : raw.comp) {
    if (t[0] == 5 && t[1] == 3) t[2] = 5;
  }
  auto v = validate_category(raw);
  CHECK_FALSE(v.category.has_value());
  CHECK(v.report.rule == "MissingComposite");
  CHECK(v.report.witness == "(1<2, 0<1)");
}

TEST_CASE("validate_category finds non-associativity and bad identities") {
  // Monoid {1, a, b} with a table that is not associative: aa = b, ab = a, ba = a, bb = a.
  RawCategory raw;
  raw.objects = {"*"};
  raw.morphisms = {{0, 0, "1"}, {0, 0, "a"}, {0, 0, "b"}};
  raw.identity = {0};
  const int table[3][3] = {{0, 1, 2}, {1, 2, 1}, {2, 1, 1}};
  for (int g = 0; g < 3; ++g) {
    for (int f = 0; f < 3; ++f) raw.comp.push_back({g, f, table[g][f]});
  }
  auto v = validate_category(raw);
  CHECK_FALSE(v.report.ok);
  CHECK(v.report.rule == "NotAssociative");
  CHECK_THROWS_AS(catalog::monoid({{0, 1, 2}, {1, 2, 1}, {2, 1, 1}}), Error);

  auto bad = catalog::chain(2).to_raw();
  for (auto& t : bad.comp) {
    if (t[0] == 1 && t[1] == 2) t[2] = 1;
  }
  CHECK(validate_category(bad).report.rule == "MissingComposite");
}

TEST_CASE("every fixture is associative by full triple scan") {
  for (const auto& c : catalog::small_fixtures(8)) {
    for (MorId f = 0; f < c.num_morphisms(); ++f) {
      for (MorId g = 0; g < c.num_morphisms(); ++g) {
        if (c.src(g) != c.tgt(f)) continue;
        for (MorId h = 0; h < c.num_morphisms(); ++h) {
          if (c.src(h) != c.tgt(g)) continue;
          REQUIRE(c.compose(h, c.compose(g, f)) == c.compose(c.compose(h, g), f));
        }
      }
    }
  }
}

TEST_CASE("comonad checks on the two-element chain") {
  auto p = share(catalog::chain(2));
  CHECK(check_comonad(identity_comonad(p)).ok);

  auto b = bottom_coreflection(p);
  CHECK(check_comonad(b).ok);

  Comonad broken{b.endo, b.comult, NatTrans(b.endo, identity_functor(p), {0, 1})};
  auto r = check_comonad(broken);
  CHECK_FALSE(r.ok);
  CHECK(r.rule == "counit.ComponentShape");
}

TEST_CASE("enumerate_comonads agrees with the naive oracle") {
  Budget budget;
  auto term = share(catalog::terminal());
  CHECK(enumerate_comonads(term, budget).size() == 1);

  auto p = share(catalog::chain(2));
  auto found = enumerate_comonads(p, budget);
  auto oracle = naive_comonads(p);
  CHECK(found.size() == oracle.size());
  CHECK(found.size() == 2);
  CHECK(found == oracle);
  CHECK(std::find(found.begin(), found.end(), identity_comonad(p)) != found.end());
  CHECK(std::find(found.begin(), found.end(), bottom_coreflection(p)) != found.end());

  auto z2 = share(catalog::cyclic_group(2));
  auto zfound = enumerate_comonads(z2, budget);
  CHECK(zfound == naive_comonads(z2));
  CHECK(zfound.size() == 2);
  CHECK(std::find(zfound.begin(), zfound.end(), identity_comonad(z2)) != zfound.end());
}

TEST_CASE("enumerated comonads pass the checker and are distinct") {
  Budget budget;
  for (const auto& c : catalog::small_fixtures(5)) {
    auto cp = share(c);
    auto all = enumerate_comonads(cp, budget);
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(check_comonad(all[i]).ok);
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(all[i] == all[j]);
    }
  }
}

TEST_CASE("distributive laws on the two-element chain") {
  auto p = share(catalog::chain(2));
  auto id = identity_comonad(p);
  auto b = bottom_coreflection(p);
  CHECK(check_distributive_law(identity_law(id, id)).ok);
  CHECK(check_distributive_law(identity_law(b, id)).ok);
  // Both sides are the constant functor at 0 whose only endomorphism is the
  // identity, so every axiom holds.
  CHECK(check_distributive_law(identity_law(b, b)).ok);

  Budget budget;
  auto laws = enumerate_distributive_laws(id, id, budget);
  REQUIRE(laws.size() == 1);
  CHECK(laws[0] == identity_law(id, id));
}

TEST_CASE("distributive law enumeration matches brute force") {
  auto z2 = share(catalog::cyclic_group(2));
  Budget budget;
  auto comonads = enumerate_comonads(z2, budget);
  for (const auto& g : comonads) {
    for (const auto& h : comonads) {
      auto found = enumerate_distributive_laws(g, h, budget);
      std::vector<DistributiveLaw> oracle;
      auto gh = compose(g.endo, h.endo), hg = compose(h.endo, g.endo);
      for (const auto& comps : all_component_lists(*z2, 1)) {
        DistributiveLaw d{g, h, NatTrans(gh, hg, comps)};
        if (check_distributive_law(d)) oracle.push_back(d);
      }
      CHECK(found == oracle);
    }
  }
}

TEST_CASE("adjunction checks") {
  auto p = share(catalog::chain(2));
  auto one = identity_functor(p);
  auto idn = identity_nat(one);
  CHECK(check_adjunction({one, one, idn, idn}).ok);

  auto t = share(catalog::terminal());
  FinFunctor i(t, p, {0}, {0});
  FinFunctor q(p, t, {0, 0}, {0, 0, 0});
  Adjunction a{i, q, NatTrans(identity_functor(t), compose(q, i), {0}),
               NatTrans(compose(i, q), one, {0, 2})};
  CHECK(check_adjunction(a).ok);

  auto z2 = share(catalog::cyclic_group(2));
  auto zid = identity_functor(z2);
  Adjunction bad{zid, zid, NatTrans(zid, zid, {1}), NatTrans(zid, zid, {0})};
  auto r = check_adjunction(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.rule == "TriangleLeft");
}

TEST_CASE("adjunction into a groupoid has invertible unit") {
  auto g = share(catalog::contractible_groupoid(2));
  auto one = identity_functor(g);
  Adjunction a{one, one, identity_nat(one), identity_nat(one)};
  REQUIRE(check_adjunction(a).ok);
  for (ObjId x = 0; x < g->num_objects(); ++x) CHECK(g->is_iso(a.unit.at(x)));
}

TEST_CASE("budget aborts enumeration") {
  Budget tiny(10);
  auto c = share(catalog::chain(3));
  CHECK_THROWS_AS(enumerate_comonads(c, tiny), Error);
}

TEST_CASE("functor powers") {
  auto p = share(catalog::chain(2));
  auto b = bottom_coreflection(p);
  FunctorPowers pw(b.endo);
  CHECK(pw.power(0) == identity_functor(p));
  CHECK(pw.power(3) == b.endo);
  const auto& two = pw.power(2);
  pw.power(10);
  CHECK(two == compose(b.endo, b.endo));
}
