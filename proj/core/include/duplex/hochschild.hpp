#pragma once

// Degree-zero Hochschild theory of finite rings with coefficients in finite
// bimodules: the simplicial and cosimplicial complexes, H_0 and H^0, and the
// two universal properties checked by enumeration.

#include <memory>
#include <vector>

#include "duplex/abgroup.hpp"
#include "duplex/simplicial.hpp"

namespace duplex {

struct FinRing {
  int size = 0;
  std::vector<std::vector<int>> add, mul;
  int zero = 0;
  int one = 0;

  CarrierGroup additive() const { return {size, add, zero}; }
};

/// Abelian group, monoid, distributivity, by full table scan. Throws ShapeMismatch.
Report check_ring(const FinRing& a);

struct FinBimoduleAb {
  std::shared_ptr<const FinRing> ring;
  int size = 0;
  std::vector<std::vector<int>> add;
  int zero = 0;
  std::vector<std::vector<int>> left;   ///< left[a][x] = ax
  std::vector<std::vector<int>> right;  ///< right[x][a] = xa

  CarrierGroup additive() const { return {size, add, zero}; }
};

/// Biadditivity, associativity and unit of both actions, and (ax)b = a(xb).
Report check_bimodule(const FinBimoduleAb& x);

FinRing zmod_ring(int n);
/// 2×2 matrices over F_2; element bits (a,b,c,d) of [[a,b],[c,d]] as 8a+4b+2c+d.
FinRing matrix_ring_f2();
/// Upper triangular 2×2 matrices over F_2, 8 elements.
FinRing upper_triangular_f2();
/// F_2[e]/(e^2).
FinRing dual_numbers_f2();

FinBimoduleAb regular_bimodule(std::shared_ptr<const FinRing> a);
FinBimoduleAb zero_bimodule(std::shared_ptr<const FinRing> a);
/// Restriction of scalars along a ring map given on carriers.
FinBimoduleAb restrict_bimodule(std::shared_ptr<const FinRing> a, const std::vector<int>& hom, const FinBimoduleAb& x);

/// A bimodule in coordinates: action matrices for every ring element.
struct LinearBimodule {
  AbGroup group;
  std::vector<AbHom> left, right;  ///< indexed by ring carrier element
};

/// Coordinates of the ring and module carriers, shared by the constructions below.
struct HochschildData {
  FinRing ring;
  FinBimoduleAb module;
  CarrierIso ring_iso;
  CarrierIso module_iso;
  LinearBimodule linear;
};

/// Validates and decomposes. Throws InvalidInput.
HochschildData prepare(const FinBimoduleAb& x);

LinearBimodule linearize(const FinBimoduleAb& x, const CarrierIso& ring_iso, const CarrierIso& module_iso);

/// Bimodule maps X → Y among all group homs.
std::vector<AbHom> enumerate_bimodule_maps(const LinearBimodule& x, const LinearBimodule& y, Budget& budget);
bool is_bimodule_map(const LinearBimodule& x, const LinearBimodule& y, const AbHom& f);

/// Level n is A^{⊗n} ⊗ X. Throws BudgetExceeded beyond max_generators
/// structural generators in a level.
TruncAugSimplicial<AbTarget> hochschild_complex(const HochschildData& d, int trunc, int max_generators = 4096);
/// Level n is Hom(A^{⊗n}, X); coface δ_i is stored as face(n, i) in Ab^op.
TruncAugSimplicial<AbOpTarget> hochschild_cocomplex(const HochschildData& d, int trunc, int max_generators = 4096);

/// X modulo ax - xa, as generators of X with relations.
PresentedAbGroup zeroth_homology(const HochschildData& d);
/// Cokernel of f - g for f, g: Y → X.
PresentedAbGroup coequalizer(const AbHom& f, const AbHom& g);

struct Subgroup {
  std::vector<int> elements;  ///< sorted carrier elements
  AbGroup group;
};

/// {x : ax = xa for all a} by enumeration.
Subgroup zeroth_cohomology(const HochschildData& d);
/// Elements of the domain where f and g agree.
std::vector<std::vector<Int>> equalizer(const AbHom& f, const AbHom& g);

/// [A, P] with (af)(a') = f(a'a), (fa)(a') = f(aa').
LinearBimodule hom_bimodule(const HochschildData& d, const AbGroup& p, HomGroup* out = nullptr);
/// A ⊗ P with a(b ⊗ p) = ab ⊗ p, (b ⊗ p)a = ba ⊗ p.
LinearBimodule tensor_bimodule(const HochschildData& d, const AbGroup& p, TensorGroup* out = nullptr);

struct AdjunctionCounts {
  int bimodule_to_hom = 0;   ///< X → [A,P]
  int h0_to_p = 0;           ///< H_0(A,X) → P
  int tensor_to_bimodule = 0;  ///< A ⊗ P → X
  int p_to_h0co = 0;         ///< P → H^0(A,X)
};

/// Enumerates both sides of each adjunction and checks an explicit bijection.
Report verify_adjunctions(const HochschildData& d, const AbGroup& p, Budget& budget, AdjunctionCounts* counts = nullptr);

}  // namespace duplex
