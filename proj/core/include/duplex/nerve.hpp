#pragma once

// Nerves of finite categories and their duplicial structures: the
// object/morphism data (tx, tf), its correspondence with left adjoints of
// C -> Π₁(C), groupoid examples, and the monoidal and strict 2-categorical
// variants.

#include <map>
#include <optional>
#include <vector>

#include "duplex/duplicial.hpp"
#include "duplex/fincat.hpp"
#include "duplex/moncat.hpp"
#include "duplex/pi1.hpp"

namespace duplex {

/// n-simplices are composable chains (f_1, ..., f_n) read in application
/// order; a 0-simplex is stored as the one-element list {x}.
struct Nerve {
  CatPtr cat;
  std::vector<std::vector<std::vector<int>>> simplices;
  std::vector<std::map<std::vector<int>, int>> index;
  TruncAugSimplicial<SetTarget> sset;

  int find(int n, const std::vector<int>& simplex) const;
  /// Vertices x_0, ..., x_n of a simplex.
  std::vector<ObjId> vertices(int n, int s) const;
};

Nerve nerve(const CatPtr& c, int trunc);

/// Compares Dec_r of the nerve with the nerve of the disjoint union of the
/// slices C/x: same sizes level by level and the same face tables under the
/// evident bijection.
Report check_dec_nerve_slices(const Nerve& n);

struct NerveDuplicialData {
  std::vector<ObjId> t_obj;
  std::vector<MorId> t_mor;  ///< for f: a -> x, tf: tx -> a
  friend bool operator==(const NerveDuplicialData&, const NerveDuplicialData&) = default;
};

/// Endpoints, t(t(1_x)) = 1_{tx}, and g ∘ t(f ∘ g) = tf.
Report check_nerve_conditions(const FinCategory& c, const NerveDuplicialData& d);

/// t_0(x) = tx, t_n(f_1, ..., f_n) = (t(f_n ∘ ... ∘ f_1), f_1, ..., f_{n-1}).
DuplicialFamily<SetTarget> nerve_family(const Nerve& n, const NerveDuplicialData& d);

struct NerveDataVerdict {
  Report conditions;
  std::optional<Classification> classification;  ///< present when the endpoints are right
  bool routes_agree = true;
};

/// Checks the conditions and independently classifies the induced family;
/// the two verdicts on validity must agree.
NerveDataVerdict check_nerve_data(const CatPtr& c, const NerveDuplicialData& d, int trunc);

std::vector<NerveDuplicialData> enumerate_nerve_data(const FinCategory& c, Budget& budget);

/// tx = x, tf = f^{-1}. Throws NotGroupoid.
NerveDuplicialData canonical_groupoid(const FinCategory& g);

/// tx = ipx, tf = ε_a ∘ i((pf)^{-1}) for f: a -> x.
NerveDuplicialData adjoint_to_duplicial(const Pi1& pi, const Adjunction& adj);

/// ε_x = t(1_x), G = t² with i ∘ p = G, η_x = (p ε_x)^{-1}.
Adjunction duplicial_to_adjoint(const Pi1& pi, const NerveDuplicialData& d);

/// All adjunctions i ⊣ p with p the localization functor.
std::vector<Adjunction> enumerate_left_adjoints(const Pi1& pi, Budget& budget);

/// For a groupoid G with i: G -> C and right adjoint r (unit/counit given),
/// the left adjoint i∘q of p and the resulting duplicial data.
NerveDuplicialData coreflection_duplicial(const Pi1& pi, const Adjunction& coreflection);

struct CategoryStructures {
  int data_count = 0;
  int paracyclic_count = 0;
  int cyclic_count = 0;
  bool is_groupoid = false;
  int natural_automorphisms = 0;  ///< of the identity functor, groupoids only
  int trunc = 0;
  Report report;  ///< fails when an asserted implication breaks
};

CategoryStructures classify_category_structures(const CatPtr& c, int trunc, Budget& budget);

/// Natural isomorphisms 1 ⇒ 1.
int count_natural_automorphisms(const CatPtr& c, Budget& budget);

// ---------------------------------------------------------------------------
// Monoidal categories

struct InternalHom {
  ObjId hom;
  MorId counit;  ///< x ⊗ [x,d] -> d
};

/// Smallest representing object; [i,d] is normalized to d. Throws NoHom.
InternalHom internal_hom(const StrictMonCat& m, ObjId x, ObjId d);
std::optional<InternalHom> find_internal_hom(const StrictMonCat& m, ObjId x, ObjId d);

struct MonoidalDuplicialReport {
  bool duplicial = false;
  bool star_autonomous = false;
  bool paracyclic = false;
  std::string reason;  ///< why duplicial fails, when it does
  Report implications; ///< star ⇒ duplicial and paracyclic ⇒ star
};

MonoidalDuplicialReport check_monoidal_duplicial(const StrictMonCat& m, ObjId d);

// ---------------------------------------------------------------------------
// Strict 2-categories

struct Strict2Cat {
  int objects = 0;
  std::vector<std::pair<int, int>> cells1;  ///< (src, tgt)
  std::vector<int> id1;                     ///< identity 1-cell per object
  FinCategory vertical;                     ///< objects are 1-cells, morphisms 2-cells
  std::vector<int> hc1;                     ///< g∘f at [g * n1 + f], or -1
  std::vector<int> hc2;                     ///< β∘α horizontally at [β * n2 + α], or -1

  int num1() const { return static_cast<int>(cells1.size()); }
  int comp1(int g, int f) const { return hc1[static_cast<std::size_t>(g) * num1() + f]; }
  int comp2(int b, int a) const { return hc2[static_cast<std::size_t>(b) * vertical.num_morphisms() + a]; }
};

Strict2Cat one_object_2cat(const StrictMonCat& m);
Strict2Cat locally_discrete_2cat(const FinCategory& c);
/// Strict associativity and identities, functoriality of horizontal
/// composition and the interchange law.
Report check_strict_2cat(const Strict2Cat& b);

struct TwoCatDuplicialData {
  std::vector<int> t_obj;
  std::vector<int> eps_obj;  ///< 1-cell tx -> x
  std::vector<int> t_mor;    ///< per 1-cell f: a -> x, 1-cell tf: tx -> a
  std::vector<int> eps_mor;  ///< per 1-cell f, 2-cell f·tf ⇒ ε_x
};

Report check_2cat_duplicial(const Strict2Cat& b, const TwoCatDuplicialData& d);

/// Data for the one-object 2-category of a monoidal category from chosen
/// internal homs with [i,d] = d and [d,d] = i; empty when unavailable.
std::optional<TwoCatDuplicialData> monoidal_2cat_data(const StrictMonCat& m, ObjId d);
/// Data for the locally discrete 2-category of C from nerve data.
TwoCatDuplicialData nerve_2cat_data(const FinCategory& c, const NerveDuplicialData& d);

}  // namespace duplex
