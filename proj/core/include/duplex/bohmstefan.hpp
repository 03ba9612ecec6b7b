#pragma once

// λ-coalgebras, the Böhm–Ştefan duplicial operator on bar resolutions, and
// the comparison maps between f^g(x) and the reversed bar resolution of h.

#include <vector>

#include "duplex/duplicial.hpp"
#include "duplex/fincat.hpp"
#include "duplex/simplicial.hpp"

namespace duplex {

/// ξ: gx -> hx.
struct RightCoalgebra {
  DistributiveLaw law;
  ObjId x = 0;
  MorId xi = 0;
};

/// φ: f∘h ⇒ f∘g for f: A -> P.
struct LeftCoalgebra {
  DistributiveLaw law;
  FinFunctor f;
  NatTrans phi;
};

/// δx ∘ ξ = hξ ∘ λx ∘ gξ ∘ δx and εx ∘ ξ = εx. Throws ShapeMismatch.
Report check_right_coalgebra(const RightCoalgebra& r);
/// fδ ∘ φ = φg ∘ fλ ∘ φh ∘ fδ and fε ∘ φ = fε, plus naturality of φ.
Report check_left_coalgebra(const LeftCoalgebra& l);

/// λ^n: g^n h ⇒ h g^n, with λ^0 = 1 and λ^{n+1} = λg^n ∘ gλ^n.
NatTrans lambda_power(const DistributiveLaw& law, int n);
/// μ^n: g h^n ⇒ h^n g, with μ^0 = 1 and μ^{n+1} = hμ^n ∘ λh^n.
NatTrans lambda_power_h(const DistributiveLaw& law, int n);

/// t_n = φ g^n x ∘ f λ^n x ∘ f g^n ξ on the bar resolution f^g(x).
/// Throws CoalgebraInvalid.
DuplicialFamily<CatTarget> bs_operator(const LeftCoalgebra& l, const RightCoalgebra& r, int trunc);

/// The reversed bar resolution Φ f^h(x) with t'_n = f h^n ξ ∘ f μ^n x ∘ φ h^n x.
DuplicialFamily<CatTarget> bs_mirror(const LeftCoalgebra& l, const RightCoalgebra& r, int trunc);

enum class Direction { GToH, HToG };

struct Comparison {
  Direction direction = Direction::GToH;
  CatPtr cat;  ///< where the components live
  SimplicialMap<CatTarget> map;
  Report verdict;  ///< check_duplicial_map against the two families
};

/// g_to_h: f ξ^{(n+1)} with ξ^{(k+1)} = hξ^{(k)} ∘ λ^k x ∘ g^k ξ, from f^g(x)
/// to Φ f^h(x). h_to_g: Φ^{(n+1)} x with Φ^{(k+1)}_a = φ g^k a ∘ fλ^k a ∘
/// Φ^{(k)}_{ha}, from Φ f^h(x) to f^g(x). The verdict is computed, not assumed.
Comparison iterate_comparison(const LeftCoalgebra& l, const RightCoalgebra& r, int trunc, Direction direction);

/// Both composites of the two comparisons are identities in range.
bool comparisons_inverse(const Comparison& g_to_h, const Comparison& h_to_g);

std::vector<RightCoalgebra> enumerate_right_coalgebras(const DistributiveLaw& law, Budget& budget);
/// Every functor f: A -> P with every φ passing the checks.
std::vector<LeftCoalgebra> enumerate_left_coalgebras(const DistributiveLaw& law, const CatPtr& p, Budget& budget);

}  // namespace duplex
