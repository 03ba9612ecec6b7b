#pragma once

// Strict monoidal structure on a finite category.

#include <functional>
#include <vector>

#include "duplex/fincat.hpp"

namespace duplex {

struct StrictMonCat {
  CatPtr base;
  CatPtr square;      ///< base × base, as built by catalog::product
  FinFunctor tensor;  ///< square -> base
  ObjId unit = 0;

  ObjId obj(ObjId a, ObjId b) const { return tensor.obj(a * base->num_objects() + b); }
  MorId mor(MorId u, MorId v) const { return tensor.mor(u * base->num_morphisms() + v); }
};

/// Builds the tensor functor from callbacks on objects and morphisms.
StrictMonCat make_moncat(const CatPtr& base, ObjId unit, const std::function<ObjId(ObjId, ObjId)>& on_obj,
                         const std::function<MorId(MorId, MorId)>& on_mor);
/// Discrete monoidal category on a monoid table with identity 0.
StrictMonCat discrete_monoidal(const std::vector<std::vector<int>>& table);
/// Poset {0 < 1 < ... < n-1} with tensor given on objects; must be monotone.
StrictMonCat chain_monoidal(int n, ObjId unit, const std::function<ObjId(ObjId, ObjId)>& on_obj);

/// Functoriality of the tensor, strict associativity and strict unit laws.
Report check_strict_monoidal(const StrictMonCat& m);

namespace catalog {

std::vector<std::vector<int>> cyclic_table(int n);
std::vector<std::vector<int>> s3_table();

}  // namespace catalog

}  // namespace duplex
