#include "duplex/fincat.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace duplex {

namespace {

std::string mor_label(const FinCategory& c, MorId f) {
  const auto& n = c.morphism_name(f);
  return n.empty() ? "#" + std::to_string(f) : n;
}

std::string obj_label(const FinCategory& c, ObjId x) {
  const auto& n = c.object_name(x);
  return n.empty() ? "#" + std::to_string(x) : n;
}

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::ShapeMismatch, what);
}

}  // namespace

// ---------------------------------------------------------------------------
// FinCategory

FinCategory FinCategory::from_raw(const RawCategory& raw) {
  const int no = static_cast<int>(raw.objects.size());
  const int nm = static_cast<int>(raw.morphisms.size());
  require(static_cast<int>(raw.identity.size()) == no, "identity table size differs from object count");
  for (const auto& m : raw.morphisms) {
    require(m.src >= 0 && m.src < no && m.tgt >= 0 && m.tgt < no,
            "morphism '" + m.name + "' has an endpoint out of range");
  }
  for (int x = 0; x < no; ++x) {
    require(raw.identity[x] >= 0 && raw.identity[x] < nm, "identity of object " + std::to_string(x) + " out of range");
  }
  FinCategory c;
  c.object_names_ = raw.objects;
  c.morphisms_ = raw.morphisms;
  c.identity_ = raw.identity;
  c.comp_.assign(static_cast<std::size_t>(nm) * nm, kUndefined);
  for (const auto& [g, f, gf] : raw.comp) {
    require(g >= 0 && g < nm && f >= 0 && f < nm && gf >= 0 && gf < nm, "composition triple out of range");
    c.comp_[static_cast<std::size_t>(g) * nm + f] = gf;
  }
  c.hom_.assign(static_cast<std::size_t>(no) * no, {});
  for (int f = 0; f < nm; ++f) {
    c.hom_[static_cast<std::size_t>(c.morphisms_[f].src) * no + c.morphisms_[f].tgt].push_back(f);
  }
  return c;
}

MorId FinCategory::compose(MorId g, MorId f) const {
  if (tgt(f) != src(g)) {
    throw Error(ErrorKind::ShapeMismatch,
                "cannot compose " + mor_label(*this, g) + " after " + mor_label(*this, f));
  }
  MorId gf = comp_or_undefined(g, f);
  if (gf == kUndefined) {
    throw Error(ErrorKind::ShapeMismatch,
                "missing composite " + mor_label(*this, g) + " . " + mor_label(*this, f));
  }
  return gf;
}

MorId FinCategory::compose_chain(std::initializer_list<MorId> chain) const {
  require(chain.size() > 0, "empty composition chain");
  auto it = std::rbegin(chain);
  MorId acc = *it++;
  for (; it != std::rend(chain); ++it) acc = compose(*it, acc);
  return acc;
}

std::optional<ObjId> FinCategory::find_object(const std::string& name) const {
  auto it = std::find(object_names_.begin(), object_names_.end(), name);
  if (it == object_names_.end()) return std::nullopt;
  return static_cast<ObjId>(it - object_names_.begin());
}

std::optional<MorId> FinCategory::find_morphism(const std::string& name) const {
  for (int f = 0; f < num_morphisms(); ++f) {
    if (morphisms_[f].name == name) return f;
  }
  return std::nullopt;
}

std::optional<MorId> FinCategory::inverse(MorId f) const {
  for (MorId g : hom(tgt(f), src(f))) {
    if (comp_or_undefined(g, f) == id(src(f)) && comp_or_undefined(f, g) == id(tgt(f))) return g;
  }
  return std::nullopt;
}

bool FinCategory::is_groupoid() const {
  for (int f = 0; f < num_morphisms(); ++f) {
    if (!is_iso(f)) return false;
  }
  return true;
}

RawCategory FinCategory::to_raw() const {
  RawCategory raw;
  raw.objects = object_names_;
  raw.morphisms = morphisms_;
  raw.identity = identity_;
  const int nm = num_morphisms();
  for (int g = 0; g < nm; ++g) {
    for (int f = 0; f < nm; ++f) {
      MorId gf = comp_or_undefined(g, f);
      if (gf != kUndefined) raw.comp.push_back({g, f, gf});
    }
  }
  return raw;
}

std::vector<std::pair<ObjId, ObjId>> FinCategory::endpoints() const {
  std::vector<std::pair<ObjId, ObjId>> out;
  out.reserve(morphisms_.size());
  for (const auto& m : morphisms_) out.emplace_back(m.src, m.tgt);
  return out;
}

CategoryValidation validate_category(const RawCategory& raw) {
  FinCategory c;
  try {
    c = FinCategory::from_raw(raw);
  } catch (const Error& e) {
    return {std::nullopt, Report::fail("ShapeMismatch", e.what())};
  }
  const int nm = c.num_morphisms();
  for (int x = 0; x < c.num_objects(); ++x) {
    MorId i = c.id(x);
    if (c.src(i) != x || c.tgt(i) != x) {
      return {std::nullopt, Report::fail("BadIdentity", obj_label(c, x))};
    }
  }
  for (int g = 0; g < nm; ++g) {
    for (int f = 0; f < nm; ++f) {
      MorId gf = c.comp_or_undefined(g, f);
      if (c.tgt(f) == c.src(g)) {
        if (gf == kUndefined || c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g)) {
          return {std::nullopt,
                  Report::fail("MissingComposite", "(" + mor_label(c, g) + ", " + mor_label(c, f) + ")")};
        }
      } else if (gf != kUndefined) {
        return {std::nullopt,
                Report::fail("IllTypedComposite", "(" + mor_label(c, g) + ", " + mor_label(c, f) + ")")};
      }
    }
  }
  for (int x = 0; x < c.num_objects(); ++x) {
    MorId i = c.id(x);
    for (int f = 0; f < nm; ++f) {
      if ((c.tgt(f) == x && c.comp_or_undefined(i, f) != f) ||
          (c.src(f) == x && c.comp_or_undefined(f, i) != f)) {
        return {std::nullopt, Report::fail("BadIdentity", obj_label(c, x))};
      }
    }
  }
  for (int f = 0; f < nm; ++f) {
    for (MorId g = 0; g < nm; ++g) {
      if (c.src(g) != c.tgt(f)) continue;
      MorId gf = c.comp_or_undefined(g, f);
      for (MorId h = 0; h < nm; ++h) {
        if (c.src(h) != c.tgt(g)) continue;
        if (c.comp_or_undefined(h, gf) != c.comp_or_undefined(c.comp_or_undefined(h, g), f)) {
          return {std::nullopt, Report::fail("NotAssociative", "(" + mor_label(c, h) + ", " +
                                                                    mor_label(c, g) + ", " +
                                                                    mor_label(c, f) + ")")};
        }
      }
    }
  }
  return {std::move(c), Report::pass()};
}

ObjId CategoryBuilder::add_object(std::string name) {
  ObjId x = static_cast<ObjId>(raw_.objects.size());
  MorId i = static_cast<MorId>(raw_.morphisms.size());
  raw_.morphisms.push_back({x, x, "1_" + name});
  raw_.objects.push_back(std::move(name));
  raw_.identity.push_back(i);
  return x;
}

MorId CategoryBuilder::add_morphism(ObjId src, ObjId tgt, std::string name) {
  raw_.morphisms.push_back({src, tgt, std::move(name)});
  return static_cast<MorId>(raw_.morphisms.size() - 1);
}

void CategoryBuilder::set_comp(MorId g, MorId f, MorId gf) { raw_.comp.push_back({g, f, gf}); }

FinCategory CategoryBuilder::finish() const {
  RawCategory raw = raw_;
  for (int f = 0; f < static_cast<int>(raw.morphisms.size()); ++f) {
    const auto& m = raw.morphisms[f];
    raw.comp.push_back({raw.identity[m.tgt], f, f});
    if (raw.identity[m.src] != f) raw.comp.push_back({f, raw.identity[m.src], f});
  }
  auto v = validate_category(raw);
  if (!v.category) throw Error(ErrorKind::InvalidInput, v.report.describe());
  return std::move(*v.category);
}

// ---------------------------------------------------------------------------
// Functors and natural transformations

FinFunctor::FinFunctor(CatPtr dom, CatPtr cod, std::vector<ObjId> obj_map, std::vector<MorId> mor_map)
    : dom_(std::move(dom)), cod_(std::move(cod)), obj_(std::move(obj_map)), mor_(std::move(mor_map)) {
  require(dom_ && cod_, "functor needs both categories");
  require(static_cast<int>(obj_.size()) == dom_->num_objects(), "functor object map has wrong size");
  require(static_cast<int>(mor_.size()) == dom_->num_morphisms(), "functor morphism map has wrong size");
  for (ObjId y : obj_) require(y >= 0 && y < cod_->num_objects(), "functor object image out of range");
  for (MorId g : mor_) require(g >= 0 && g < cod_->num_morphisms(), "functor morphism image out of range");
}

bool same_category(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  return a && b && *a == *b;
}

bool operator==(const FinFunctor& a, const FinFunctor& b) {
  return a.obj_ == b.obj_ && a.mor_ == b.mor_ && same_category(a.dom_, b.dom_) &&
         same_category(a.cod_, b.cod_);
}

FinFunctor identity_functor(const CatPtr& c) {
  std::vector<ObjId> obj(c->num_objects());
  std::vector<MorId> mor(c->num_morphisms());
  for (int i = 0; i < c->num_objects(); ++i) obj[i] = i;
  for (int i = 0; i < c->num_morphisms(); ++i) mor[i] = i;
  return FinFunctor(c, c, std::move(obj), std::move(mor));
}

FinFunctor compose(const FinFunctor& second, const FinFunctor& first) {
  require(same_category(first.cod(), second.dom()), "functor composite with mismatched categories");
  std::vector<ObjId> obj(first.obj_map().size());
  std::vector<MorId> mor(first.mor_map().size());
  for (std::size_t i = 0; i < obj.size(); ++i) obj[i] = second.obj(first.obj(static_cast<ObjId>(i)));
  for (std::size_t i = 0; i < mor.size(); ++i) mor[i] = second.mor(first.mor(static_cast<MorId>(i)));
  return FinFunctor(first.dom(), second.cod(), std::move(obj), std::move(mor));
}

Report check_functor(const FinFunctor& F) {
  const auto& C = *F.dom();
  const auto& D = *F.cod();
  for (MorId f = 0; f < C.num_morphisms(); ++f) {
    MorId Ff = F.mor(f);
    if (D.src(Ff) != F.obj(C.src(f)) || D.tgt(Ff) != F.obj(C.tgt(f))) {
      return Report::fail("FunctorEndpoints", mor_label(C, f));
    }
  }
  for (ObjId x = 0; x < C.num_objects(); ++x) {
    if (F.mor(C.id(x)) != D.id(F.obj(x))) return Report::fail("FunctorIdentity", obj_label(C, x));
  }
  for (MorId f = 0; f < C.num_morphisms(); ++f) {
    for (MorId g = 0; g < C.num_morphisms(); ++g) {
      if (C.src(g) != C.tgt(f)) continue;
      if (F.mor(C.compose(g, f)) != D.compose(F.mor(g), F.mor(f))) {
        return Report::fail("FunctorComposite", "(" + mor_label(C, g) + ", " + mor_label(C, f) + ")");
      }
    }
  }
  return Report::pass();
}

NatTrans::NatTrans(FinFunctor src, FinFunctor tgt, std::vector<MorId> components)
    : src_(std::move(src)), tgt_(std::move(tgt)), comp_(std::move(components)) {
  require(same_category(src_.dom(), tgt_.dom()) && same_category(src_.cod(), tgt_.cod()),
          "natural transformation between functors of different shape");
  require(static_cast<int>(comp_.size()) == src_.dom()->num_objects(),
          "natural transformation has wrong component count");
  for (MorId m : comp_) require(m >= 0 && m < src_.cod()->num_morphisms(), "component out of range");
}

NatTrans identity_nat(const FinFunctor& f) {
  std::vector<MorId> comps(f.dom()->num_objects());
  for (ObjId x = 0; x < f.dom()->num_objects(); ++x) comps[x] = f.cod()->id(f.obj(x));
  return NatTrans(f, f, std::move(comps));
}

NatTrans vertical(const NatTrans& second, const NatTrans& first) {
  require(first.tgt() == second.src(), "vertical composite with mismatched functors");
  const auto& D = *first.src().cod();
  std::vector<MorId> comps(first.components().size());
  for (std::size_t x = 0; x < comps.size(); ++x) {
    comps[x] = D.compose(second.at(static_cast<ObjId>(x)), first.at(static_cast<ObjId>(x)));
  }
  return NatTrans(first.src(), second.tgt(), std::move(comps));
}

NatTrans whisker(const FinFunctor& outer, const NatTrans& alpha) {
  std::vector<MorId> comps(alpha.components().size());
  for (std::size_t x = 0; x < comps.size(); ++x) comps[x] = outer.mor(alpha.at(static_cast<ObjId>(x)));
  return NatTrans(compose(outer, alpha.src()), compose(outer, alpha.tgt()), std::move(comps));
}

NatTrans whisker(const NatTrans& alpha, const FinFunctor& inner) {
  std::vector<MorId> comps(inner.dom()->num_objects());
  for (std::size_t b = 0; b < comps.size(); ++b) comps[b] = alpha.at(inner.obj(static_cast<ObjId>(b)));
  return NatTrans(compose(alpha.src(), inner), compose(alpha.tgt(), inner), std::move(comps));
}

Report check_nat_trans(const NatTrans& alpha) {
  const auto& C = *alpha.src().dom();
  const auto& D = *alpha.src().cod();
  const auto& F = alpha.src();
  const auto& G = alpha.tgt();
  for (ObjId x = 0; x < C.num_objects(); ++x) {
    MorId a = alpha.at(x);
    if (D.src(a) != F.obj(x) || D.tgt(a) != G.obj(x)) return Report::fail("ComponentShape", obj_label(C, x));
  }
  for (MorId u = 0; u < C.num_morphisms(); ++u) {
    if (D.compose(G.mor(u), alpha.at(C.src(u))) != D.compose(alpha.at(C.tgt(u)), F.mor(u))) {
      return Report::fail("Naturality", mor_label(C, u));
    }
  }
  return Report::pass();
}

// ---------------------------------------------------------------------------
// Comonads, distributive laws, adjunctions

Comonad identity_comonad(const CatPtr& c) {
  FinFunctor id = identity_functor(c);
  NatTrans one = identity_nat(id);
  return Comonad{id, one, one};
}

Report check_comonad(const Comonad& c) {
  const auto& G = c.endo;
  require(same_category(G.dom(), G.cod()), "comonad functor is not an endofunctor");
  const FinFunctor GG = compose(G, G);
  const FinFunctor one = identity_functor(G.dom());
  require(c.comult.src() == G && c.comult.tgt() == GG, "comultiplication must have shape g => gg");
  require(c.counit.src() == G && c.counit.tgt() == one, "counit must have shape g => 1");
  if (auto r = check_nat_trans(c.counit); !r) return Report::fail("counit." + r.rule, r.witness);
  if (auto r = check_nat_trans(c.comult); !r) return Report::fail("comult." + r.rule, r.witness);
  const auto& X = *G.dom();
  for (ObjId x = 0; x < X.num_objects(); ++x) {
    MorId d = c.comult.at(x);
    MorId idGx = X.id(G.obj(x));
    if (X.compose(c.counit.at(G.obj(x)), d) != idGx) return Report::fail("CounitLeft", obj_label(X, x));
    if (X.compose(G.mor(c.counit.at(x)), d) != idGx) return Report::fail("CounitRight", obj_label(X, x));
    if (X.compose(c.comult.at(G.obj(x)), d) != X.compose(G.mor(d), d)) {
      return Report::fail("Coassociativity", obj_label(X, x));
    }
  }
  return Report::pass();
}

DistributiveLaw identity_law(const Comonad& g, const Comonad& h) {
  const FinFunctor gh = compose(g.endo, h.endo);
  const FinFunctor hg = compose(h.endo, g.endo);
  require(gh == hg, "identity law needs commuting functors");
  return DistributiveLaw{g, h, NatTrans(gh, hg, identity_nat(gh).components())};
}

namespace {

// The four axioms at a single object; empty rule means all hold.
std::string law_axiom_failure(const DistributiveLaw& d, ObjId x) {
  const auto& X = *d.base();
  const auto& g = d.g.endo;
  const auto& h = d.h.endo;
  MorId l = d.lambda.at(x);
  if (X.compose(h.mor(d.g.counit.at(x)), l) != d.g.counit.at(h.obj(x))) return "CounitG";
  if (X.compose(d.h.counit.at(g.obj(x)), l) != g.mor(d.h.counit.at(x))) return "CounitH";
  {
    MorId lhs = X.compose(h.mor(d.g.comult.at(x)), l);
    MorId rhs = X.compose_chain({d.lambda.at(g.obj(x)), g.mor(l), d.g.comult.at(h.obj(x))});
    if (lhs != rhs) return "ComultG";
  }
  {
    MorId lhs = X.compose(d.h.comult.at(g.obj(x)), l);
    MorId rhs = X.compose_chain({h.mor(l), d.lambda.at(h.obj(x)), g.mor(d.h.comult.at(x))});
    if (lhs != rhs) return "ComultH";
  }
  return {};
}

}  // namespace

Report check_distributive_law(const DistributiveLaw& d) {
  require(same_category(d.g.base(), d.h.base()), "comonads of a distributive law need a shared base");
  require(d.lambda.src() == compose(d.g.endo, d.h.endo) && d.lambda.tgt() == compose(d.h.endo, d.g.endo),
          "distributive law must have shape gh => hg");
  if (auto r = check_nat_trans(d.lambda); !r) return Report::fail("lambda." + r.rule, r.witness);
  const auto& X = *d.base();
  for (ObjId x = 0; x < X.num_objects(); ++x) {
    if (auto rule = law_axiom_failure(d, x); !rule.empty()) return Report::fail(rule, obj_label(X, x));
  }
  return Report::pass();
}

Report check_adjunction(const Adjunction& a) {
  const auto& C = a.left.cod();
  const auto& D = a.left.dom();
  require(same_category(a.right.dom(), C) && same_category(a.right.cod(), D),
          "adjoint functors point the wrong way");
  require(a.unit.src() == identity_functor(D) && a.unit.tgt() == compose(a.right, a.left),
          "unit must have shape 1 => p i");
  require(a.counit.src() == compose(a.left, a.right) && a.counit.tgt() == identity_functor(C),
          "counit must have shape i p => 1");
  if (auto r = check_nat_trans(a.unit); !r) return Report::fail("unit." + r.rule, r.witness);
  if (auto r = check_nat_trans(a.counit); !r) return Report::fail("counit." + r.rule, r.witness);
  for (ObjId d = 0; d < D->num_objects(); ++d) {
    ObjId id_ = a.left.obj(d);
    if (C->compose(a.counit.at(id_), a.left.mor(a.unit.at(d))) != C->id(id_)) {
      return Report::fail("TriangleLeft", obj_label(*D, d));
    }
  }
  for (ObjId c = 0; c < C->num_objects(); ++c) {
    ObjId pc = a.right.obj(c);
    if (D->compose(a.right.mor(a.counit.at(c)), a.unit.at(pc)) != D->id(pc)) {
      return Report::fail("TriangleRight", obj_label(*C, c));
    }
  }
  return Report::pass();
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<FinFunctor> enumerate_functors(const CatPtr& dom, const CatPtr& cod, Budget& budget) {
  const auto& C = *dom;
  const auto& D = *cod;
  const int no = C.num_objects();
  const int nm = C.num_morphisms();
  // Composition constraints keyed by the largest morphism id they mention.
  std::vector<std::vector<std::array<MorId, 3>>> checks(nm);
  for (MorId g = 0; g < nm; ++g) {
    for (MorId f = 0; f < nm; ++f) {
      MorId gf = C.comp_or_undefined(g, f);
      if (gf == kUndefined) continue;
      checks[std::max({g, f, gf})].push_back({g, f, gf});
    }
  }
  std::vector<ObjId> obj(no, 0);
  std::vector<MorId> mor(nm, 0);
  std::vector<FinFunctor> out;

  std::function<void(int)> assign_mor = [&](int k) {
    if (k == nm) {
      out.emplace_back(dom, cod, obj, mor);
      return;
    }
    ObjId a = obj[C.src(k)];
    ObjId b = obj[C.tgt(k)];
    auto candidates = D.hom(a, b);
    for (MorId cand : candidates) {
      if (C.is_identity(k) && cand != D.id(a)) continue;
      budget.charge();
      mor[k] = cand;
      bool ok = true;
      for (const auto& [g, f, gf] : checks[k]) {
        if (D.comp_or_undefined(mor[g], mor[f]) != mor[gf]) {
          ok = false;
          break;
        }
      }
      if (ok) assign_mor(k + 1);
    }
  };
  std::function<void(int)> assign_obj = [&](int k) {
    if (k == no) {
      assign_mor(0);
      return;
    }
    for (ObjId y = 0; y < D.num_objects(); ++y) {
      budget.charge();
      obj[k] = y;
      assign_obj(k + 1);
    }
  };
  assign_obj(0);
  return out;
}

namespace {

using ComponentFilter = std::function<bool(ObjId, MorId)>;

std::vector<NatTrans> enumerate_filtered(const FinFunctor& F, const FinFunctor& G, Budget& budget,
                                         const ComponentFilter& keep) {
  require(same_category(F.dom(), G.dom()) && same_category(F.cod(), G.cod()),
          "natural transformations need parallel functors");
  const auto& C = *F.dom();
  const auto& D = *F.cod();
  const int no = C.num_objects();
  std::vector<std::vector<MorId>> squares(no);
  for (MorId u = 0; u < C.num_morphisms(); ++u) squares[std::max(C.src(u), C.tgt(u))].push_back(u);
  std::vector<MorId> comps(no, 0);
  std::vector<NatTrans> out;
  std::function<void(int)> go = [&](int x) {
    if (x == no) {
      out.emplace_back(F, G, comps);
      return;
    }
    for (MorId cand : D.hom(F.obj(x), G.obj(x))) {
      budget.charge();
      if (keep && !keep(x, cand)) continue;
      comps[x] = cand;
      bool ok = true;
      for (MorId u : squares[x]) {
        if (D.compose(G.mor(u), comps[C.src(u)]) != D.compose(comps[C.tgt(u)], F.mor(u))) {
          ok = false;
          break;
        }
      }
      if (ok) go(x + 1);
    }
  };
  go(0);
  return out;
}

}  // namespace

std::vector<NatTrans> enumerate_nat_trans(const FinFunctor& src, const FinFunctor& tgt, Budget& budget) {
  return enumerate_filtered(src, tgt, budget, nullptr);
}

std::vector<Comonad> enumerate_comonads(const CatPtr& base, Budget& budget) {
  const auto& X = *base;
  const FinFunctor one = identity_functor(base);
  std::vector<Comonad> out;
  for (const auto& G : enumerate_functors(base, base, budget)) {
    const FinFunctor GG = compose(G, G);
    for (const auto& eps : enumerate_nat_trans(G, one, budget)) {
      auto counital = [&](ObjId x, MorId d) {
        MorId idGx = X.id(G.obj(x));
        return X.compose(eps.at(G.obj(x)), d) == idGx && X.compose(G.mor(eps.at(x)), d) == idGx;
      };
      for (auto& delta : enumerate_filtered(G, GG, budget, counital)) {
        Comonad c{G, std::move(delta), eps};
        budget.charge();
        if (check_comonad(c)) out.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::vector<DistributiveLaw> enumerate_distributive_laws(const Comonad& g, const Comonad& h,
                                                         Budget& budget) {
  require(same_category(g.base(), h.base()), "comonads of a distributive law need a shared base");
  const auto& X = *g.base();
  const FinFunctor gh = compose(g.endo, h.endo);
  const FinFunctor hg = compose(h.endo, g.endo);
  auto counital = [&](ObjId x, MorId l) {
    return X.compose(h.endo.mor(g.counit.at(x)), l) == g.counit.at(h.endo.obj(x)) &&
           X.compose(h.counit.at(g.endo.obj(x)), l) == g.endo.mor(h.counit.at(x));
  };
  std::vector<DistributiveLaw> out;
  for (auto& lambda : enumerate_filtered(gh, hg, budget, counital)) {
    DistributiveLaw d{g, h, std::move(lambda)};
    budget.charge();
    if (check_distributive_law(d)) out.push_back(std::move(d));
  }
  return out;
}

FunctorPowers::FunctorPowers(FinFunctor endo) {
  powers_.push_back(identity_functor(endo.dom()));
  powers_.push_back(std::move(endo));
}

const FinFunctor& FunctorPowers::power(int n) {
  while (static_cast<int>(powers_.size()) <= n) powers_.push_back(compose(powers_[1], powers_.back()));
  return powers_[n];
}

}  // namespace duplex
