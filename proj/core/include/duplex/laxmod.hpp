#pragma once

// Bimodules over a strict monoidal category with lax interchange, their
// morphisms, lax H^0 and codescent cocycles (the functors out of lax H_0),
// and the M^op case given by two comonads and a distributive law.

#include <functional>
#include <map>
#include <vector>

#include "duplex/bohmstefan.hpp"
#include "duplex/dupcat.hpp"
#include "duplex/moncat.hpp"
#include "duplex/target.hpp"

namespace duplex {

/// Left action on product(A, X), right action on product(X, A), and
/// λ_{a,x,b}: a(xb) -> (ax)b.
struct LaxBimodule {
  StrictMonCat mon;
  CatPtr carrier;
  FinFunctor left;
  FinFunctor right;
  std::vector<MorId> interchange;  ///< index (a * |X| + x) * |A| + b

  const FinCategory& A() const { return *mon.base; }
  const FinCategory& X() const { return *carrier; }
  ObjId l_obj(ObjId a, ObjId x) const { return left.obj(a * X().num_objects() + x); }
  ObjId r_obj(ObjId x, ObjId b) const { return right.obj(x * A().num_objects() + b); }
  MorId l_mor(MorId u, MorId w) const { return left.mor(u * X().num_morphisms() + w); }
  MorId r_mor(MorId w, MorId v) const { return right.mor(w * A().num_morphisms() + v); }
  MorId lambda(ObjId a, ObjId x, ObjId b) const {
    return interchange[(static_cast<std::size_t>(a) * X().num_objects() + x) * A().num_objects() + b];
  }
};

LaxBimodule make_lax_bimodule(const StrictMonCat& mon, const CatPtr& carrier,
                              const std::function<ObjId(ObjId, ObjId)>& l_obj,
                              const std::function<MorId(MorId, MorId)>& l_mor,
                              const std::function<ObjId(ObjId, ObjId)>& r_obj,
                              const std::function<MorId(MorId, MorId)>& r_mor,
                              const std::function<MorId(ObjId, ObjId, ObjId)>& lambda);

/// Strict actions, naturality of λ in each variable, and the four coherence
/// triangles (rules L1, L2 for the left letters, R1, R2 for the right).
Report check_bimodule(const LaxBimodule& x);

/// A acting on itself by the tensor, with identity interchange.
LaxBimodule regular_bimodule(const StrictMonCat& mon);

/// Objects are the functors X -> P, morphisms the natural transformations.
struct FunctorCategory {
  CatPtr cat;
  std::vector<FinFunctor> objects;
  std::vector<NatTrans> morphisms;
};
FunctorCategory functor_category(const CatPtr& x, const CatPtr& p, Budget& budget);

/// [X, P] with (af)(x) = f(xa), (fb)(x) = f(bx) and interchange f(λ_{b,x,a}).
LaxBimodule hom_bimodule(const LaxBimodule& x, const CatPtr& p, Budget& budget, FunctorCategory* out = nullptr);
/// P × X with the actions of X; object (y, x) is y * |X| + x.
LaxBimodule product_bimodule(const CatPtr& p, const LaxBimodule& x);

/// ρ_{a,x}: a.p(x) -> p(ax), stored at a * |X| + x.
struct LaxBimoduleMorphism {
  FinFunctor p;
  std::vector<MorId> rho;
};

/// Naturality, unit, multiplicativity, the strict right square and the
/// hexagon against λ.
Report check_bimodule_morphism(const LaxBimodule& x, const LaxBimodule& y, const LaxBimoduleMorphism& m);

std::vector<LaxBimoduleMorphism> enumerate_bimodule_morphisms(const LaxBimodule& x, const LaxBimodule& y,
                                                              Budget& budget);

/// ξ_a: ax -> xa per object a of A.
struct LaxH0Object {
  ObjId x = 0;
  std::vector<MorId> xi;
  friend bool operator==(const LaxH0Object&, const LaxH0Object&) = default;
  friend auto operator<=>(const LaxH0Object&, const LaxH0Object&) = default;
};

Report check_lax_h0_object(const LaxBimodule& x, const LaxH0Object& o);

struct LaxH0 {
  CatPtr cat;
  std::vector<LaxH0Object> objects;
  std::vector<MorId> underlying;  ///< per morphism of cat, a morphism of X
};

/// Every (x, ξ) passing the checks, and the morphisms of X commuting with ξ.
LaxH0 lax_h0(const LaxBimodule& x, Budget& budget);

/// Transport along (p, ρ): ξ'_a = p(ξ_a) ∘ ρ_{a,x}. Throws VerificationFailed
/// when an image is not an object of the target.
FinFunctor lax_h0_map(const LaxBimodule& x, const LaxBimodule& y, const LaxBimoduleMorphism& m, const LaxH0& hx,
                      const LaxH0& hy);

/// φ_{x,a}: f(xa) -> f(ax), stored at x * |A| + a.
struct CodescentCocycle {
  FinFunctor f;
  std::vector<MorId> phi;
};

/// Naturality in both variables, φ_{x,i} = 1, and
/// φ_{bx,a} ∘ f(λ_{b,x,a}) ∘ φ_{xa,b} = φ_{x,ab}.
Report check_codescent_cocycle(const LaxBimodule& x, const CodescentCocycle& c);

std::vector<CodescentCocycle> enumerate_cocycles(const LaxBimodule& x, const CatPtr& p, Budget& budget);

/// σ: f => f' with φ'_{x,a} ∘ σ_{xa} = σ_{ax} ∘ φ_{x,a}.
bool is_cocycle_morphism(const LaxBimodule& x, const CodescentCocycle& c, const CodescentCocycle& d,
                         const NatTrans& sigma);

struct BijectionReport {
  int left = 0;   ///< size of the first enumerated side
  int right = 0;  ///< size of the second
  int morphisms_left = 0;
  int morphisms_right = 0;
  Report report;
};

/// Cocycles X -> P against objects of lax_h0(A, [X, P]) under transposition,
/// and cocycle morphisms against morphisms of lax_h0 between them.
BijectionReport uct_bijection(const LaxBimodule& x, const CatPtr& p, Budget& budget);

/// Bimodule morphisms P × A -> X against functors P -> lax_h0(A, X) via
/// ξ_{a,y} = ρ_{a,(y,i)} and back via ρ_{a,(y,b)} = ξ_{a,y} b ∘ λ.
BijectionReport cohomology_adjunction(const LaxBimodule& x, const CatPtr& p, Budget& budget);

/// Bimodule morphisms X -> [A, P] against cocycles X -> P via
/// φ_{x,a} = ρ_{a,x}(i) and back via ρ_{a,x}(b) = f(λ_{a,x,b}) ∘ φ_{xb,a}.
BijectionReport homology_adjunction(const LaxBimodule& x, const CatPtr& p, Budget& budget);

// ---------------------------------------------------------------------------
// A = M^op, handled symbolically: objects are ordinal sizes, a morphism
// a -> a' is a SimplicialOperator from degree a-1 to degree a'-1. Every
// quantifier over A runs over sizes 0..max_size, and verdicts say so.

struct MopBimodule {
  CatPtr carrier;
  int max_size = 0;
  std::vector<FinFunctor> left, right;              ///< g^a and h^b
  std::map<SimplicialOperator, NatTrans> left_op;   ///< g^a => g^a'
  std::map<SimplicialOperator, NatTrans> right_op;  ///< h^b => h^b', through rev
  std::vector<std::vector<NatTrans>> interchange;   ///< [a][b]: g^a h^b => h^b g^a

  ObjId l_obj(int a, ObjId x) const { return left.at(a).obj(x); }
  ObjId r_obj(ObjId x, int b) const { return right.at(b).obj(x); }
  MorId lambda(int a, ObjId x, int b) const { return interchange.at(a).at(b).at(x); }
  std::string stamp() const { return "sizes<=" + std::to_string(max_size); }
};

/// Comonads to bimodule, with actions and interchange tabulated up to
/// max_size. Throws TruncationTooShallow below 2.
MopBimodule mop_convert(const DistributiveLaw& law, int max_size);
/// Bimodule to comonads: g, h at size 1, ε and δ at the generators, λ at (1, x, 1).
DistributiveLaw mop_convert(const MopBimodule& m);

/// Strict actions, naturality and the coherence triangles within range.
Report check_mop_bimodule(const MopBimodule& m);

/// ξ_a for every size a <= max_size.
Report check_mop_h0_object(const MopBimodule& m, const LaxH0Object& o);
/// All (x, ξ): ξ_1 ranges over every gx -> hx, higher ξ_a are forced by the
/// cocycle at (a-1, 1), and each candidate is checked in full.
std::vector<LaxH0Object> enumerate_mop_h0(const MopBimodule& m, Budget& budget);
/// The forced extension of a right coalgebra.
LaxH0Object mop_h0_object(const MopBimodule& m, const RightCoalgebra& r);

/// φ[a][x]: f(h^a x) -> f(g^a x).
struct MopCocycle {
  FinFunctor f;
  std::vector<std::vector<MorId>> phi;
};

Report check_mop_cocycle(const MopBimodule& m, const MopCocycle& c);
std::vector<MopCocycle> enumerate_mop_cocycles(const MopBimodule& m, const CatPtr& p, Budget& budget);
/// The forced extension φ_{x,a+1} = φ_{gx,a} ∘ f(λ_{1,x,a}) ∘ φ_{h^a x,1}.
MopCocycle mop_cocycle(const MopBimodule& m, const LeftCoalgebra& l);

/// Right coalgebras indexed by a finite category Y: a functor Y -> lax H^0.
struct RightFamily {
  CatPtr index;
  std::vector<RightCoalgebra> objects;  ///< per object of Y
  std::vector<MorId> maps;              ///< per morphism of Y, a morphism of X
};

RightFamily single_family(const RightCoalgebra& r);
/// Each image map commutes with ξ and the assignment is a functor.
Report check_right_family(const RightFamily& y);

struct CapResult {
  std::vector<DuplicialFamily<CatTarget>> families;  ///< per object of Y
  std::vector<SimplicialMap<CatTarget>> maps;        ///< per morphism of Y
  Report report;  ///< cocycle of each transpose, t_0 agreement, naturality in Y
};

/// The composite of the cap-product construction: unit of the homology
/// adjunction, H^0 applied, transposition to a cocycle on A, read off through
/// the decalage correspondence. Throws CoalgebraInvalid.
CapResult bs_cap(const LeftCoalgebra& l, const RightFamily& y, int trunc);

/// On a duplicial family: evaluation of K^op normal forms is functorial on
/// all composable pairs up to degree N, φ_{x,a} = t^{|a|} is a codescent
/// cocycle for the regular M^op bimodule, and φ_{x,1} evaluates to t.
Report duplicial_index_check(const DuplicialFamily<SetTarget>& F, int N);
Report duplicial_index_check(const DuplicialFamily<CatTarget>& F, int N);

/// The same on the canonical family of the nerve of Z/2 as a groupoid.
Report duplicial_index_check(int N);

}  // namespace duplex
