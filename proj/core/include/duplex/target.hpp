#pragma once

// Target categories for simplicial objects. A target supplies identities,
// composition, endpoint checks and inverses for its map type.

#include <optional>
#include <string>
#include <vector>

#include "duplex/fincat.hpp"

namespace duplex {

/// Levels are objects of a finite category, maps are its morphisms.
struct CatTarget {
  using Obj = ObjId;
  using Map = MorId;

  CatPtr cat;

  Map identity(Obj x) const { return cat->id(x); }
  Map compose(Map g, Map f) const { return cat->compose(g, f); }
  bool has_shape(Map f, Obj dom, Obj cod) const { return cat->src(f) == dom && cat->tgt(f) == cod; }
  std::optional<Map> inverse(Map f) const { return cat->inverse(f); }
  std::string describe_obj(Obj x) const { return cat->object_name(x); }

  friend bool operator==(const CatTarget& a, const CatTarget& b) { return same_category(a.cat, b.cat); }
};

/// Levels are finite sets {0..n-1} given by their size; maps are index arrays.
struct SetTarget {
  using Obj = int;
  using Map = std::vector<int>;

  Map identity(Obj n) const {
    Map m(n);
    for (int i = 0; i < n; ++i) m[i] = i;
    return m;
  }
  Map compose(const Map& g, const Map& f) const {
    Map out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = g.at(f[i]);
    return out;
  }
  bool has_shape(const Map& f, Obj dom, Obj cod) const {
    if (static_cast<int>(f.size()) != dom) return false;
    for (int v : f) {
      if (v < 0 || v >= cod) return false;
    }
    return true;
  }
  std::optional<Map> inverse(const Map& f) const {
    Map inv(f.size(), -1);
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] < 0 || f[i] >= static_cast<int>(f.size()) || inv[f[i]] != -1) return std::nullopt;
      inv[f[i]] = static_cast<int>(i);
    }
    return inv;
  }
  std::string describe_obj(Obj n) const { return "set of size " + std::to_string(n); }

  friend bool operator==(const SetTarget&, const SetTarget&) { return true; }
};

}  // namespace duplex
