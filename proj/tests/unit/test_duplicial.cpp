#include <doctest.h>

#include "duplex/catalog.hpp"
#include "duplex/duplicial.hpp"
#include "duplex/nerve.hpp"

using namespace duplex;

namespace {

DuplicialFamily<SetTarget> canonical(const FinCategory& g, int N) {
  auto c = share(g);
  return nerve_family(nerve(c, N), canonical_groupoid(*c));
}

}  // namespace

TEST_CASE("canonical structure on Z/2 is cyclic") {
  auto F = canonical(catalog::cyclic_group(2), 4);
  auto cls = classify_duplicial(F);
  CHECK(cls.kind == DuplicialKind::Cyclic);
  CHECK(cls.verdict() == "cyclic@N=4");
}

TEST_CASE("canonical structures on groups are cyclic, with t^{n+1} = id") {
  for (auto g : {catalog::cyclic_group(3), catalog::s3(), catalog::contractible_groupoid(3)}) {
    auto F = canonical(g, 3);
    CHECK(classify_duplicial(F).kind == DuplicialKind::Cyclic);
  }
}

TEST_CASE("tampering with t breaks the relations") {
  auto F = canonical(catalog::cyclic_group(3), 3);
  auto t1 = F.t[1];
  std::swap(t1[1], t1[2]);
  F.t[1] = t1;
  auto cls = classify_duplicial(F);
  CHECK(cls.kind == DuplicialKind::Invalid);
  CHECK_FALSE(cls.report);
}

TEST_CASE("wrong number of t operators is a shape error") {
  auto F = canonical(catalog::cyclic_group(2), 3);
  F.t.pop_back();
  CHECK_THROWS_AS((void)check_duplicial_relations(F), Error);
}

TEST_CASE("duplicial families and maps Dec_r -> Dec_l correspond") {
  for (const auto& c : catalog::small_fixtures(6)) {
    auto cp = share(c);
    Budget budget;
    auto nv = nerve(cp, 4);
    for (const auto& d : enumerate_nerve_data(c, budget)) {
      auto F = nerve_family(nv, d);
      auto m = family_to_decalage_map(F);
      CHECK(check_decalage_map(nv.sset, m));
      CHECK(decalage_map_to_family(nv.sset, m) == F);
      CHECK(check_duplicial_map(F, F, identity_map(nv.sset)));
    }
  }
}

TEST_CASE("a map that is not simplicial is rejected by the inverse direction") {
  auto c = share(catalog::cyclic_group(2));
  auto nv = nerve(c, 3);
  auto m = family_to_decalage_map(nerve_family(nv, canonical_groupoid(*c)));
  auto bad = m;
  bad.components[1][0] = bad.components[1][1];
  CHECK_FALSE(check_decalage_map(nv.sset, bad));
  CHECK_THROWS_AS((void)decalage_map_to_family(nv.sset, bad), Error);
  CHECK_THROWS_AS((void)decalage_map_to_family(truncate(nv.sset, 1), m), Error);
}

TEST_CASE("family_to_decalage_map refuses non-duplicial input") {
  auto F = canonical(catalog::cyclic_group(3), 2);
  F.t[0] = {0};
  F.t[1] = {0, 0, 0};
  CHECK_THROWS_AS((void)family_to_decalage_map(F), Error);
}
