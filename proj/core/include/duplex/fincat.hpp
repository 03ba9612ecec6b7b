#pragma once

// Finite categories, functors, natural transformations, comonads,
// distributive laws and adjunctions, all stored as dense id tables.

#include <array>
#include <deque>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "duplex/error.hpp"

namespace duplex {

using ObjId = int;
using MorId = int;
inline constexpr int kUndefined = -1;

struct MorphismInfo {
  ObjId src = 0;
  ObjId tgt = 0;
  std::string name;
};

/// Unvalidated category description, as read from JSON or built by hand.
/// `comp` lists triples (g, f, g∘f).
struct RawCategory {
  std::vector<std::string> objects;
  std::vector<MorphismInfo> morphisms;
  std::vector<MorId> identity;
  std::vector<std::array<MorId, 3>> comp;
};

class FinCategory {
 public:
  FinCategory() = default;

  /// Builds the dense tables. Only range errors are rejected here (as
  /// ShapeMismatch); law checking is validate_category's job.
  static FinCategory from_raw(const RawCategory& raw);

  int num_objects() const noexcept { return static_cast<int>(object_names_.size()); }
  int num_morphisms() const noexcept { return static_cast<int>(morphisms_.size()); }

  ObjId src(MorId f) const { return morphisms_[f].src; }
  ObjId tgt(MorId f) const { return morphisms_[f].tgt; }
  MorId id(ObjId x) const { return identity_[x]; }
  bool is_identity(MorId f) const { return identity_[src(f)] == f; }

  /// g∘f, or kUndefined when the table has no entry.
  MorId comp_or_undefined(MorId g, MorId f) const {
    return comp_[static_cast<std::size_t>(g) * morphisms_.size() + f];
  }
  /// g∘f; throws ShapeMismatch unless tgt(f) = src(g).
  MorId compose(MorId g, MorId f) const;
  /// Composes right to left: compose_chain({h, g, f}) = h∘g∘f.
  MorId compose_chain(std::initializer_list<MorId> chain) const;

  std::span<const MorId> hom(ObjId a, ObjId b) const {
    return hom_[static_cast<std::size_t>(a) * object_names_.size() + b];
  }

  const std::string& object_name(ObjId x) const { return object_names_[x]; }
  const std::string& morphism_name(MorId f) const { return morphisms_[f].name; }
  std::optional<ObjId> find_object(const std::string& name) const;
  std::optional<MorId> find_morphism(const std::string& name) const;

  std::optional<MorId> inverse(MorId f) const;
  bool is_iso(MorId f) const { return inverse(f).has_value(); }
  bool is_groupoid() const;

  RawCategory to_raw() const;

  /// Table equality; names are ignored.
  friend bool operator==(const FinCategory& a, const FinCategory& b) {
    return a.identity_ == b.identity_ && a.comp_ == b.comp_ && a.endpoints() == b.endpoints();
  }

 private:
  std::vector<std::pair<ObjId, ObjId>> endpoints() const;

  std::vector<std::string> object_names_;
  std::vector<MorphismInfo> morphisms_;
  std::vector<MorId> identity_;
  std::vector<MorId> comp_;
  std::vector<std::vector<MorId>> hom_;
};

using CatPtr = std::shared_ptr<const FinCategory>;

inline CatPtr share(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

/// Result of validate_category: the category when every law holds, else the
/// first violation (MissingComposite, BadIdentity, NotAssociative, ...).
struct CategoryValidation {
  std::optional<FinCategory> category;
  Report report;
};

CategoryValidation validate_category(const RawCategory& raw);

/// Incremental construction. Identities are created per object; composites
/// with identities are filled in automatically by finish().
class CategoryBuilder {
 public:
  ObjId add_object(std::string name);
  MorId add_morphism(ObjId src, ObjId tgt, std::string name);
  void set_comp(MorId g, MorId f, MorId gf);
  MorId identity(ObjId x) const { return raw_.identity.at(x); }
  /// Validates; throws InvalidInput carrying the violation on failure.
  FinCategory finish() const;

 private:
  RawCategory raw_;
};

// ---------------------------------------------------------------------------

class FinFunctor {
 public:
  FinFunctor() = default;
  FinFunctor(CatPtr dom, CatPtr cod, std::vector<ObjId> obj_map, std::vector<MorId> mor_map);

  const CatPtr& dom() const noexcept { return dom_; }
  const CatPtr& cod() const noexcept { return cod_; }
  ObjId obj(ObjId x) const { return obj_[x]; }
  MorId mor(MorId f) const { return mor_[f]; }
  const std::vector<ObjId>& obj_map() const noexcept { return obj_; }
  const std::vector<MorId>& mor_map() const noexcept { return mor_; }

  friend bool operator==(const FinFunctor& a, const FinFunctor& b);

 private:
  CatPtr dom_;
  CatPtr cod_;
  std::vector<ObjId> obj_;
  std::vector<MorId> mor_;
};

bool same_category(const CatPtr& a, const CatPtr& b);

FinFunctor identity_functor(const CatPtr& c);
/// second∘first.
FinFunctor compose(const FinFunctor& second, const FinFunctor& first);
/// Preservation of endpoints, identities and composites.
Report check_functor(const FinFunctor& f);

class NatTrans {
 public:
  NatTrans() = default;
  NatTrans(FinFunctor src, FinFunctor tgt, std::vector<MorId> components);

  const FinFunctor& src() const noexcept { return src_; }
  const FinFunctor& tgt() const noexcept { return tgt_; }
  MorId at(ObjId x) const { return comp_[x]; }
  const std::vector<MorId>& components() const noexcept { return comp_; }

  friend bool operator==(const NatTrans& a, const NatTrans& b) {
    return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.comp_ == b.comp_;
  }

 private:
  FinFunctor src_;
  FinFunctor tgt_;
  std::vector<MorId> comp_;
};

NatTrans identity_nat(const FinFunctor& f);
/// second∘first (vertical).
NatTrans vertical(const NatTrans& second, const NatTrans& first);
/// F·α, components F(α_x).
NatTrans whisker(const FinFunctor& outer, const NatTrans& alpha);
/// α·K, components α_{K x}.
NatTrans whisker(const NatTrans& alpha, const FinFunctor& inner);
/// Component endpoints and naturality squares.
Report check_nat_trans(const NatTrans& alpha);

/// A comonad (g, δ, ε) on a finite category.
struct Comonad {
  FinFunctor endo;
  NatTrans comult;
  NatTrans counit;

  const CatPtr& base() const { return endo.dom(); }
  friend bool operator==(const Comonad&, const Comonad&) = default;
};

Comonad identity_comonad(const CatPtr& c);
Report check_comonad(const Comonad& c);

/// λ: g∘h ⇒ h∘g between two comonads on the same base.
struct DistributiveLaw {
  Comonad g;
  Comonad h;
  NatTrans lambda;

  const CatPtr& base() const { return g.base(); }
  friend bool operator==(const DistributiveLaw&, const DistributiveLaw&) = default;
};

DistributiveLaw identity_law(const Comonad& g, const Comonad& h);
Report check_distributive_law(const DistributiveLaw& d);

/// left ⊣ right with unit 1 ⇒ right∘left and counit left∘right ⇒ 1.
struct Adjunction {
  FinFunctor left;
  FinFunctor right;
  NatTrans unit;
  NatTrans counit;
};

Report check_adjunction(const Adjunction& a);

// ---------------------------------------------------------------------------
// Exhaustive enumeration. All enumerators return results in lexicographic
// order of their id tables and charge one unit per candidate considered.

std::vector<FinFunctor> enumerate_functors(const CatPtr& dom, const CatPtr& cod, Budget& budget);
std::vector<NatTrans> enumerate_nat_trans(const FinFunctor& src, const FinFunctor& tgt,
                                          Budget& budget);
std::vector<Comonad> enumerate_comonads(const CatPtr& base, Budget& budget);
std::vector<DistributiveLaw> enumerate_distributive_laws(const Comonad& g, const Comonad& h,
                                                         Budget& budget);

/// Memoized powers g^n of an endofunctor.
class FunctorPowers {
 public:
  explicit FunctorPowers(FinFunctor endo);
  const FinFunctor& power(int n);
  const FinFunctor& base() const { return powers_[1]; }

 private:
  std::deque<FinFunctor> powers_;
};

}  // namespace duplex
