#pragma once

// Fundamental groupoid of a finite category: localization at every morphism,
// computed per connected component by coset enumeration over the vertex group.

#include <cstdint>
#include <vector>

#include "duplex/fincat.hpp"

namespace duplex {

/// Finite group given by its multiplication table; `mul[a][b]` is "a then b".
struct FiniteGroup {
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;
  int order() const { return static_cast<int>(mul.size()); }
};

/// A step along an edge of the underlying graph of C, taken forwards or backwards.
struct EdgeStep {
  MorId mor;
  bool forward;
};

struct Pi1 {
  CatPtr source;
  CatPtr groupoid;
  FinFunctor p;  ///< identity on objects

  std::vector<int> component;         ///< per object of source
  std::vector<ObjId> base;            ///< base object per component
  std::vector<FiniteGroup> groups;    ///< vertex group per component
  std::vector<std::vector<EdgeStep>> tree_path;  ///< base -> object, per object
  std::vector<int> generator_element; ///< group element of each morphism of source
  /// Each group element as a word of morphism steps, read in application order.
  std::vector<std::vector<std::vector<EdgeStep>>> element_word;

  /// Morphism id of the groupoid arrow a -> b labelled by group element e.
  MorId arrow(ObjId a, ObjId b, int e) const;
  /// (a, b, e) of a groupoid morphism.
  std::array<int, 3> decode(MorId m) const;

  std::vector<MorId> arrow_offset;    ///< indexing helper, per ordered pair
};

/// Throws GroupoidTooLarge when the groupoid would exceed `cap` morphisms or
/// the coset enumeration outgrows its working bound.
Pi1 pi1(const CatPtr& c, std::int64_t cap = 100000);

/// The functor Π₁(C) -> D through which `f` factors, for `f` sending every
/// morphism to an isomorphism. Throws InversionFails otherwise.
FinFunctor induce_from_pi1(const Pi1& pi, const FinFunctor& f);

}  // namespace duplex
