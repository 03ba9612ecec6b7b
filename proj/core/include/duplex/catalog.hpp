#pragma once

// Small named categories used as fixtures throughout.

#include <vector>

#include "duplex/fincat.hpp"

namespace duplex::catalog {

FinCategory terminal();
FinCategory discrete(int n);
/// Total order 0 < 1 < ... < n-1.
FinCategory chain(int n);
/// Poset on n elements given by leq[a][b]; must be reflexive and transitive.
FinCategory poset(const std::vector<std::vector<bool>>& leq);
/// One-object category from a monoid multiplication table with identity 0.
FinCategory monoid(const std::vector<std::vector<int>>& table);
FinCategory cyclic_group(int n);
/// Symmetric group on three letters as a one-object category.
FinCategory s3();
/// n objects with exactly one morphism between any two.
FinCategory contractible_groupoid(int n);
/// Two objects with two parallel arrows between them.
FinCategory parallel_pair();
/// Objects 0, 1, 2 with 0 ≅ 1 and a morphism from each into 2.
FinCategory iso_with_cone();

/// Object (a, x) has id a * |D| + x; morphism (u, v) has id u * |D_mor| + v.
FinCategory product(const FinCategory& c, const FinCategory& d);
FinCategory opposite(const FinCategory& c);
FinCategory coproduct(const FinCategory& c, const FinCategory& d);

inline ObjId pair_obj(const FinCategory& d, ObjId a, ObjId x) { return a * d.num_objects() + x; }
inline MorId pair_mor(const FinCategory& d, MorId u, MorId v) { return u * d.num_morphisms() + v; }

/// Every valid category with at most `max_morphisms` morphisms from the
/// fixed fixture list (not an exhaustive census of all such categories).
std::vector<FinCategory> small_fixtures(int max_morphisms);

}  // namespace duplex::catalog
