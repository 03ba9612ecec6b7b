#include "duplex/bohmstefan.hpp"

#include <string>

namespace duplex {

namespace {

std::string at_obj(const FinCategory& c, ObjId x) { return "x=" + c.object_name(x); }

void require_valid(const LeftCoalgebra& l, const RightCoalgebra& r) {
  if (!(l.law == r.law)) throw Error(ErrorKind::CoalgebraInvalid, "left and right coalgebras over different laws");
  if (auto rep = check_left_coalgebra(l); !rep) throw Error(ErrorKind::CoalgebraInvalid, "left: " + rep.describe());
  if (auto rep = check_right_coalgebra(r); !rep) throw Error(ErrorKind::CoalgebraInvalid, "right: " + rep.describe());
}

}  // namespace

Report check_right_coalgebra(const RightCoalgebra& r) {
  const auto& g = r.law.g;
  const auto& h = r.law.h;
  const auto& A = *r.law.base();
  const ObjId x = r.x;
  if (x < 0 || x >= A.num_objects() || r.xi < 0 || r.xi >= A.num_morphisms()) {
    throw Error(ErrorKind::ShapeMismatch, "coalgebra ids out of range");
  }
  if (A.src(r.xi) != g.endo.obj(x) || A.tgt(r.xi) != h.endo.obj(x)) {
    throw Error(ErrorKind::ShapeMismatch, "xi must be gx -> hx");
  }
  MorId lhs = A.compose(h.comult.at(x), r.xi);
  MorId rhs = A.compose_chain({h.endo.mor(r.xi), r.law.lambda.at(x), g.endo.mor(r.xi), g.comult.at(x)});
  if (lhs != rhs) return Report::fail("ComultDiagram", at_obj(A, x));
  if (A.compose(h.counit.at(x), r.xi) != g.counit.at(x)) return Report::fail("CounitDiagram", at_obj(A, x));
  return Report::pass();
}

Report check_left_coalgebra(const LeftCoalgebra& l) {
  const auto& g = l.law.g;
  const auto& h = l.law.h;
  const auto& f = l.f;
  if (!same_category(f.dom(), l.law.base())) throw Error(ErrorKind::ShapeMismatch, "f must start at the comonads' base");
  if (!(l.phi.src() == compose(f, h.endo)) || !(l.phi.tgt() == compose(f, g.endo))) {
    throw Error(ErrorKind::ShapeMismatch, "phi must be f h => f g");
  }
  if (auto r = check_nat_trans(l.phi); !r) return Report::fail("phi." + r.rule, r.witness);
  const auto& A = *l.law.base();
  const auto& P = *f.cod();
  for (ObjId a = 0; a < A.num_objects(); ++a) {
    MorId lhs = P.compose(f.mor(g.comult.at(a)), l.phi.at(a));
    MorId rhs = P.compose_chain({l.phi.at(g.endo.obj(a)), f.mor(l.law.lambda.at(a)), l.phi.at(h.endo.obj(a)),
                                 f.mor(h.comult.at(a))});
    if (lhs != rhs) return Report::fail("ComultDiagram", at_obj(A, a));
    if (P.compose(f.mor(g.counit.at(a)), l.phi.at(a)) != f.mor(h.counit.at(a))) {
      return Report::fail("CounitDiagram", at_obj(A, a));
    }
  }
  return Report::pass();
}

NatTrans lambda_power(const DistributiveLaw& law, int n) {
  const auto& A = *law.base();
  FunctorPowers gp(law.g.endo);
  const auto& h = law.h.endo;
  std::vector<MorId> comps(A.num_objects());
  for (ObjId a = 0; a < A.num_objects(); ++a) {
    MorId acc = A.id(h.obj(a));
    for (int k = 0; k < n; ++k) acc = A.compose(law.lambda.at(gp.power(k).obj(a)), law.g.endo.mor(acc));
    comps[a] = acc;
  }
  return NatTrans(compose(gp.power(n), h), compose(h, gp.power(n)), comps);
}

NatTrans lambda_power_h(const DistributiveLaw& law, int n) {
  const auto& A = *law.base();
  FunctorPowers hp(law.h.endo);
  const auto& g = law.g.endo;
  std::vector<MorId> comps(A.num_objects());
  for (ObjId a = 0; a < A.num_objects(); ++a) {
    MorId acc = A.id(g.obj(a));
    for (int k = 0; k < n; ++k) acc = A.compose(law.h.endo.mor(acc), law.lambda.at(hp.power(k).obj(a)));
    comps[a] = acc;
  }
  return NatTrans(compose(g, hp.power(n)), compose(hp.power(n), g), comps);
}

DuplicialFamily<CatTarget> bs_operator(const LeftCoalgebra& l, const RightCoalgebra& r, int trunc) {
  require_valid(l, r);
  const auto& law = l.law;
  FunctorPowers gp(law.g.endo);
  DuplicialFamily<CatTarget> F{bar_resolution(law.g, gp, l.f, r.x, trunc), {}};
  const auto& P = *l.f.cod();
  for (int n = 0; n <= trunc; ++n) {
    auto ln = lambda_power(law, n);
    F.t.push_back(P.compose_chain({l.phi.at(gp.power(n).obj(r.x)), l.f.mor(ln.at(r.x)), l.f.mor(gp.power(n).mor(r.xi))}));
  }
  return F;
}

DuplicialFamily<CatTarget> bs_mirror(const LeftCoalgebra& l, const RightCoalgebra& r, int trunc) {
  require_valid(l, r);
  const auto& law = l.law;
  FunctorPowers hp(law.h.endo);
  DuplicialFamily<CatTarget> F{reverse(bar_resolution(law.h, hp, l.f, r.x, trunc)), {}};
  const auto& P = *l.f.cod();
  for (int n = 0; n <= trunc; ++n) {
    auto mn = lambda_power_h(law, n);
    F.t.push_back(P.compose_chain({l.f.mor(hp.power(n).mor(r.xi)), l.f.mor(mn.at(r.x)), l.phi.at(hp.power(n).obj(r.x))}));
  }
  return F;
}

Comparison iterate_comparison(const LeftCoalgebra& l, const RightCoalgebra& r, int trunc, Direction direction) {
  const auto& law = l.law;
  const auto& A = *law.base();
  const auto& P = *l.f.cod();
  auto G = bs_operator(l, r, trunc);
  auto H = bs_mirror(l, r, trunc);
  FunctorPowers gp(law.g.endo);
  Comparison out{direction, l.f.cod(), {G.base.bottom(), {}}, {}};
  if (direction == Direction::GToH) {
    // ξ^{(k)}: g^k x -> h^k x, with ξ^{(0)} = 1.
    MorId acc = A.id(r.x);
    for (int k = 0; k <= trunc + 1; ++k) {
      out.map.components.push_back(l.f.mor(acc));
      acc = A.compose_chain({law.h.endo.mor(acc), lambda_power(law, k).at(r.x), gp.power(k).mor(r.xi)});
    }
    out.verdict = check_duplicial_map(G, H, out.map);
  } else {
    // Φ^{(k)}_a: f h^k a -> f g^k a, with Φ^{(0)} = 1.
    std::vector<MorId> acc(A.num_objects());
    for (ObjId a = 0; a < A.num_objects(); ++a) acc[a] = P.id(l.f.obj(a));
    for (int k = 0; k <= trunc + 1; ++k) {
      out.map.components.push_back(acc[r.x]);
      auto lk = lambda_power(law, k);
      std::vector<MorId> next(A.num_objects());
      for (ObjId a = 0; a < A.num_objects(); ++a) {
        next[a] = P.compose_chain({l.phi.at(gp.power(k).obj(a)), l.f.mor(lk.at(a)), acc[law.h.endo.obj(a)]});
      }
      acc = std::move(next);
    }
    out.verdict = check_duplicial_map(H, G, out.map);
  }
  return out;
}

bool comparisons_inverse(const Comparison& g_to_h, const Comparison& h_to_g) {
  const auto& P = *g_to_h.cat;
  const auto& a = g_to_h.map.components;
  const auto& b = h_to_g.map.components;
  if (a.size() != b.size()) return false;
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (P.tgt(a[n]) != P.src(b[n]) || P.tgt(b[n]) != P.src(a[n])) return false;
    if (P.compose(b[n], a[n]) != P.id(P.src(a[n])) || P.compose(a[n], b[n]) != P.id(P.src(b[n]))) return false;
  }
  return true;
}

std::vector<RightCoalgebra> enumerate_right_coalgebras(const DistributiveLaw& law, Budget& budget) {
  std::vector<RightCoalgebra> out;
  const auto& A = *law.base();
  for (ObjId x = 0; x < A.num_objects(); ++x) {
    for (MorId xi : A.hom(law.g.endo.obj(x), law.h.endo.obj(x))) {
      budget.charge();
      RightCoalgebra r{law, x, xi};
      if (check_right_coalgebra(r)) out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<LeftCoalgebra> enumerate_left_coalgebras(const DistributiveLaw& law, const CatPtr& p, Budget& budget) {
  std::vector<LeftCoalgebra> out;
  for (const auto& f : enumerate_functors(law.base(), p, budget)) {
    auto fh = compose(f, law.h.endo);
    auto fg = compose(f, law.g.endo);
    for (auto& phi : enumerate_nat_trans(fh, fg, budget)) {
      budget.charge();
      LeftCoalgebra l{law, f, std::move(phi)};
      if (check_left_coalgebra(l)) out.push_back(std::move(l));
    }
  }
  return out;
}

}  // namespace duplex
