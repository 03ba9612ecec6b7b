#include <doctest.h>

#include <functional>

#include "duplex/catalog.hpp"
#include "duplex/moncat.hpp"
#include "duplex/nerve.hpp"
#include "duplex/pi1.hpp"

using namespace duplex;

namespace {

// Oracle: every table (tx, tf) whose induced family passes the duplicial
// relations. Tables with the wrong endpoints cannot form a family and are
// skipped.
std::vector<NerveDuplicialData> naive_nerve_data(const CatPtr& c, int N) {
  auto nv = nerve(c, N);
  std::vector<NerveDuplicialData> out;
  NerveDuplicialData d{std::vector<ObjId>(c->num_objects()), std::vector<MorId>(c->num_morphisms())};
  const int no = c->num_objects();
  std::function<void(int)> go = [&](int k) {
    if (k == no + c->num_morphisms()) {
      for (MorId f = 0; f < c->num_morphisms(); ++f) {
        if (c->src(d.t_mor[f]) != d.t_obj[c->tgt(f)] || c->tgt(d.t_mor[f]) != c->src(f)) return;
      }
      if (classify_duplicial(nerve_family(nv, d)).kind != DuplicialKind::Invalid) out.push_back(d);
      return;
    }
    const int range = k < no ? no : c->num_morphisms();
    for (int v = 0; v < range; ++v) {
      (k < no ? d.t_obj[k] : d.t_mor[k - no]) = v;
      go(k + 1);
    }
  };
  go(0);
  return out;
}

}  // namespace

TEST_CASE("nerve level sizes") {
  auto nv = nerve(share(catalog::chain(2)), 3);
  CHECK(nv.sset.level(0) == 2);
  CHECK(nv.sset.level(1) == 3);
  CHECK(nv.sset.level(2) == 4);
  CHECK(nv.sset.level(3) == 5);
  CHECK(nv.vertices(2, nv.find(2, {2, 1})) == std::vector<ObjId>{0, 1, 1});
}

TEST_CASE("fundamental groupoids") {
  auto p2 = pi1(share(catalog::chain(2)));
  CHECK(p2.groupoid->num_objects() == 2);
  CHECK(p2.groupoid->num_morphisms() == 4);
  CHECK(p2.groupoid->is_groupoid());

  auto idem = pi1(share(catalog::monoid({{0, 1}, {1, 1}})));
  CHECK(idem.groupoid->num_morphisms() == 1);

  auto z2 = pi1(share(catalog::cyclic_group(2)));
  CHECK(z2.groupoid->num_morphisms() == 2);

  auto s3 = pi1(share(catalog::s3()));
  CHECK(s3.groupoid->num_morphisms() == 6);

  auto cone = pi1(share(catalog::iso_with_cone()));
  CHECK(cone.groupoid->num_morphisms() == 9);

  auto two = pi1(share(catalog::coproduct(catalog::cyclic_group(2), catalog::terminal())));
  CHECK(two.groupoid->num_morphisms() == 3);

  CHECK_THROWS_AS((void)pi1(share(catalog::parallel_pair()), 1000), Error);
  try {
    (void)pi1(share(catalog::parallel_pair()), 1000);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GroupoidTooLarge);
  }
}

TEST_CASE("localization is universal on fixtures") {
  for (const auto& c : catalog::small_fixtures(6)) {
    auto cp = share(c);
    if (c.num_morphisms() == 4 && c.num_objects() == 2 && !c.is_groupoid() && c.hom(0, 1).size() == 2) continue;
    Pi1 pi = [&] {
      try {
        return pi1(cp, 1000);
      } catch (const Error&) {
        return Pi1{};
      }
    }();
    if (!pi.groupoid) continue;
    CHECK(check_functor(pi.p));
    CHECK(induce_from_pi1(pi, pi.p) == identity_functor(pi.groupoid));
    if (c.is_groupoid()) CHECK(pi.groupoid->num_morphisms() == c.num_morphisms());
  }
}

TEST_CASE("enumerated nerve data agrees with the classification route") {
  for (const auto& c : catalog::small_fixtures(5)) {
    auto cp = share(c);
    Budget budget;
    auto fast = enumerate_nerve_data(c, budget);
    auto slow = naive_nerve_data(cp, 3);
    CHECK(fast == slow);
    for (const auto& d : fast) {
      auto v = check_nerve_data(cp, d, 3);
      CHECK(v.conditions);
      CHECK(v.routes_agree);
    }
  }
}

TEST_CASE("structure counts on small categories") {
  Budget budget;
  auto disc = classify_category_structures(share(catalog::discrete(2)), 4, budget);
  CHECK(disc.data_count == 1);
  CHECK(disc.cyclic_count == 1);

  auto ch = classify_category_structures(share(catalog::chain(2)), 4, budget);
  CHECK(ch.data_count == 1);
  CHECK(ch.paracyclic_count == 0);
  CHECK(ch.report);

  auto z2 = share(catalog::cyclic_group(2));
  CHECK(count_natural_automorphisms(z2, budget) == 2);
  auto s = classify_category_structures(z2, 4, budget);
  CHECK(s.data_count == 2);
  CHECK(s.cyclic_count == 2);
  CHECK(s.report);

  auto s3 = share(catalog::s3());
  CHECK(count_natural_automorphisms(s3, budget) == 1);
}

TEST_CASE("paracyclic only on groupoids, cyclic count equals natural automorphisms") {
  for (const auto& c : catalog::small_fixtures(6)) {
    Budget budget;
    auto s = classify_category_structures(share(c), 4, budget);
    CHECK_MESSAGE(s.report, s.report.describe());
  }
}

TEST_CASE("canonical groupoid data") {
  auto g = catalog::contractible_groupoid(3);
  auto d = canonical_groupoid(g);
  CHECK(check_nerve_conditions(g, d));
  CHECK_THROWS_AS((void)canonical_groupoid(catalog::chain(2)), Error);
}

TEST_CASE("left adjoints of localization and nerve data correspond") {
  for (const auto& c : catalog::small_fixtures(5)) {
    auto cp = share(c);
    Pi1 pi;
    try {
      pi = pi1(cp, 1000);
    } catch (const Error&) {
      continue;
    }
    Budget budget;
    auto data = enumerate_nerve_data(c, budget);
    auto adjs = enumerate_left_adjoints(pi, budget);
    CHECK(data.size() == adjs.size());
    for (const auto& d : data) {
      auto adj = duplicial_to_adjoint(pi, d);
      CHECK(adjoint_to_duplicial(pi, adj) == d);
    }
    for (const auto& a : adjs) {
      auto d = adjoint_to_duplicial(pi, a);
      CHECK(check_nerve_conditions(c, d));
    }
  }
}

TEST_CASE("coreflective groupoid gives nerve data") {
  // {0} is coreflective in 0 < 1.
  auto c = share(catalog::chain(2));
  auto pi = pi1(c);
  auto g = share(catalog::terminal());
  FinFunctor i(g, c, {0}, {c->id(0)});
  FinFunctor r(c, g, {0, 0}, {0, 0, 0});
  Adjunction cr{i, r, identity_nat(identity_functor(g)), NatTrans(compose(i, r), identity_functor(c), {c->id(0), c->hom(0, 1)[0]})};
  REQUIRE(check_adjunction(cr));
  auto d = coreflection_duplicial(pi, cr);
  CHECK(d.t_obj == std::vector<ObjId>{0, 0});
  CHECK(check_nerve_conditions(*c, d));
}

TEST_CASE("broken data is reported by rule") {
  auto c = catalog::cyclic_group(3);
  auto d = canonical_groupoid(c);
  d.t_mor[1] = d.t_mor[2];
  auto r = check_nerve_conditions(c, d);
  CHECK_FALSE(r);
  CHECK(r.rule == "FunctorialityCondition");
  d.t_obj.push_back(0);
  CHECK(check_nerve_conditions(c, d).rule == "TShape");
}

// ---------------------------------------------------------------------------
// Monoidal

TEST_CASE("discrete groups are paracyclic at every object") {
  auto m = discrete_monoidal(catalog::cyclic_table(3));
  REQUIRE(check_strict_monoidal(m));
  for (ObjId d = 0; d < 3; ++d) {
    auto r = check_monoidal_duplicial(m, d);
    CHECK(r.duplicial);
    CHECK(r.star_autonomous);
    CHECK(r.paracyclic);
    CHECK(r.implications);
    // [x,d] = x^{-1} d
    for (ObjId x = 0; x < 3; ++x) CHECK(internal_hom(m, x, d).hom == (d - x + 3) % 3);
  }
}

TEST_CASE("idempotent monoid has no duplicial object") {
  auto m = discrete_monoidal({{0, 1}, {1, 1}});
  for (ObjId d = 0; d < 2; ++d) CHECK_FALSE(check_monoidal_duplicial(m, d).duplicial);
  CHECK_THROWS_AS((void)internal_hom(m, 1, 0), Error);
}

TEST_CASE("chains with min and Lukasiewicz tensor") {
  auto two = chain_monoidal(2, 1, [](ObjId a, ObjId b) { return std::min(a, b); });
  REQUIRE(check_strict_monoidal(two));
  auto r0 = check_monoidal_duplicial(two, 0);
  CHECK(r0.duplicial);
  CHECK(r0.star_autonomous);
  CHECK(r0.paracyclic);
  auto r1 = check_monoidal_duplicial(two, 1);
  CHECK(r1.duplicial);
  CHECK_FALSE(r1.star_autonomous);

  auto heyting = chain_monoidal(3, 2, [](ObjId a, ObjId b) { return std::min(a, b); });
  for (ObjId d = 0; d < 3; ++d) {
    auto r = check_monoidal_duplicial(heyting, d);
    CHECK(r.duplicial);
    CHECK_FALSE(r.star_autonomous);
    CHECK(r.implications);
  }
  CHECK(internal_hom(heyting, 1, 0).hom == 0);
  CHECK(internal_hom(heyting, 0, 0).hom == 2);

  auto luk = chain_monoidal(3, 2, [](ObjId a, ObjId b) { return std::max(0, a + b - 2); });
  REQUIRE(check_strict_monoidal(luk));
  auto l0 = check_monoidal_duplicial(luk, 0);
  CHECK(l0.duplicial);
  CHECK(l0.star_autonomous);
  CHECK(l0.paracyclic);
  for (ObjId x = 0; x < 3; ++x) CHECK(internal_hom(luk, x, 0).hom == 2 - x);
  auto l1 = check_monoidal_duplicial(luk, 1);
  CHECK(l1.duplicial);
  CHECK_FALSE(l1.star_autonomous);
}

// ---------------------------------------------------------------------------
// Strict 2-categories

TEST_CASE("one-object 2-categories from monoidal duplicial objects") {
  std::vector<std::pair<StrictMonCat, ObjId>> cases = {
      {discrete_monoidal(catalog::cyclic_table(3)), 1},
      {chain_monoidal(2, 1, [](ObjId a, ObjId b) { return std::min(a, b); }), 0},
      {chain_monoidal(3, 2, [](ObjId a, ObjId b) { return std::min(a, b); }), 1},
      {chain_monoidal(3, 2, [](ObjId a, ObjId b) { return std::max(0, a + b - 2); }), 0},
  };
  for (const auto& [m, d] : cases) {
    auto b = one_object_2cat(m);
    REQUIRE(check_strict_2cat(b));
    auto data = monoidal_2cat_data(m, d);
    REQUIRE(data);
    CHECK(check_2cat_duplicial(b, *data));
  }
  CHECK_FALSE(monoidal_2cat_data(discrete_monoidal({{0, 1}, {1, 1}}), 0));
}

TEST_CASE("locally discrete 2-categories from nerve data") {
  for (const auto& c : catalog::small_fixtures(5)) {
    auto b = locally_discrete_2cat(c);
    REQUIRE(check_strict_2cat(b));
    Budget budget;
    for (const auto& d : enumerate_nerve_data(c, budget)) CHECK(check_2cat_duplicial(b, nerve_2cat_data(c, d)));
  }
  auto c = catalog::cyclic_group(3);
  auto d = canonical_groupoid(c);
  auto data = nerve_2cat_data(c, d);
  data.t_mor[c.id(0)] = 1;
  CHECK_FALSE(check_2cat_duplicial(locally_discrete_2cat(c), data));
}
