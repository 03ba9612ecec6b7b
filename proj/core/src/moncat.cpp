#include "duplex/moncat.hpp"

#include <array>
#include <string>

#include "duplex/catalog.hpp"

namespace duplex {

StrictMonCat make_moncat(const CatPtr& base, ObjId unit, const std::function<ObjId(ObjId, ObjId)>& on_obj,
                         const std::function<MorId(MorId, MorId)>& on_mor) {
  StrictMonCat m;
  m.base = base;
  m.square = share(catalog::product(*base, *base));
  m.unit = unit;
  const int no = base->num_objects();
  const int nm = base->num_morphisms();
  std::vector<ObjId> obj(static_cast<std::size_t>(no) * no);
  std::vector<MorId> mor(static_cast<std::size_t>(nm) * nm);
  for (ObjId a = 0; a < no; ++a) {
    for (ObjId b = 0; b < no; ++b) obj[a * no + b] = on_obj(a, b);
  }
  for (MorId u = 0; u < nm; ++u) {
    for (MorId v = 0; v < nm; ++v) mor[u * nm + v] = on_mor(u, v);
  }
  m.tensor = FinFunctor(m.square, base, std::move(obj), std::move(mor));
  return m;
}

StrictMonCat discrete_monoidal(const std::vector<std::vector<int>>& table) {
  auto base = share(catalog::discrete(static_cast<int>(table.size())));
  return make_moncat(
      base, 0, [&](ObjId a, ObjId b) { return table[a][b]; },
      [&](MorId u, MorId v) { return base->id(table[base->src(u)][base->src(v)]); });
}

StrictMonCat chain_monoidal(int n, ObjId unit, const std::function<ObjId(ObjId, ObjId)>& on_obj) {
  auto base = share(catalog::chain(n));
  return make_moncat(base, unit, on_obj, [&](MorId u, MorId v) {
    ObjId s = on_obj(base->src(u), base->src(v));
    ObjId t = on_obj(base->tgt(u), base->tgt(v));
    auto h = base->hom(s, t);
    if (h.empty()) throw Error(ErrorKind::InvalidInput, "tensor on a chain is not monotone");
    return h.front();
  });
}

Report check_strict_monoidal(const StrictMonCat& m) {
  if (auto r = check_functor(m.tensor); !r) return Report::fail("tensor." + r.rule, r.witness);
  const auto& A = *m.base;
  for (ObjId a = 0; a < A.num_objects(); ++a) {
    if (m.obj(m.unit, a) != a || m.obj(a, m.unit) != a) return Report::fail("UnitObject", A.object_name(a));
  }
  for (MorId u = 0; u < A.num_morphisms(); ++u) {
    if (m.mor(A.id(m.unit), u) != u || m.mor(u, A.id(m.unit)) != u) return Report::fail("UnitMorphism", A.morphism_name(u));
  }
  for (MorId u = 0; u < A.num_morphisms(); ++u) {
    for (MorId v = 0; v < A.num_morphisms(); ++v) {
      for (MorId w = 0; w < A.num_morphisms(); ++w) {
        if (m.mor(m.mor(u, v), w) != m.mor(u, m.mor(v, w))) {
          return Report::fail("Associativity", A.morphism_name(u) + "," + A.morphism_name(v) + "," + A.morphism_name(w));
        }
      }
    }
  }
  return Report::pass();
}

namespace catalog {

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return t;
}

std::vector<std::vector<int>> s3_table() {
  // Permutations of {0,1,2} in lexicographic order; entry [g][f] is g∘f.
  const std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int g = 0; g < 6; ++g) {
    for (int f = 0; f < 6; ++f) {
      std::array<int, 3> gf{};
      for (int i = 0; i < 3; ++i) gf[i] = perms[g][perms[f][i]];
      for (int k = 0; k < 6; ++k) {
        if (perms[k] == gf) t[g][f] = k;
      }
    }
  }
  return t;
}

}  // namespace catalog

}  // namespace duplex
