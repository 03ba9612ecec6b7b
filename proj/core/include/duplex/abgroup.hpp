#pragma once

// Integer matrices, Smith normal form, finitely presented abelian groups in
// invariant-factor form, and homomorphisms between them as matrices.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "duplex/error.hpp"

namespace duplex {

using Int = std::int64_t;

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rs, int cols);
  static IntMatrix identity(int n);

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  Int at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Throws BudgetExceeded on 64-bit overflow.
IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);

struct SmithResult {
  IntMatrix U, D, V;
  IntMatrix V_inv;

  /// Diagonal of D with trailing zeros for the columns past the rank.
  std::vector<Int> invariant_factors() const;
};

/// U·M·V = D with D diagonal, non-negative, d1 | d2 | ..., U and V unimodular.
SmithResult smith_normal_form(const IntMatrix& M);

/// ⊕ Z/d_i with d_i > 1 dividing successively, followed by free summands
/// written as 0. Elements are coordinate vectors reduced mod d_i.
struct AbGroup {
  std::vector<Int> factors;

  int rank() const noexcept { return static_cast<int>(factors.size()); }
  bool finite() const noexcept;
  Int order() const;  ///< throws InvalidInput for infinite groups
  std::vector<Int> reduce(std::vector<Int> x) const;
  std::vector<Int> zero() const { return std::vector<Int>(factors.size(), 0); }
  std::vector<Int> unit(int j) const;
  /// Mixed-radix index of a reduced element, and its inverse.
  Int index_of(const std::vector<Int>& x) const;
  std::vector<Int> element(Int index) const;
  std::vector<std::vector<Int>> elements() const;
  std::string describe() const;

  friend bool operator==(const AbGroup&, const AbGroup&) = default;
};

/// Generators with given cyclic orders (0 = free) and relation rows.
struct PresentedAbGroup {
  std::vector<Int> orders;
  std::vector<std::vector<Int>> relations;

  struct NormalForm {
    AbGroup group;
    IntMatrix proj;  ///< group.rank × generators: generator j ↦ column j
    IntMatrix lift;  ///< generators × group.rank: a preimage of each new generator
  };
  NormalForm normal_form() const;
};

/// A homomorphism given by the images of the domain's generators (columns).
class AbHom {
 public:
  AbHom() = default;
  AbHom(AbGroup dom, AbGroup cod, IntMatrix m);

  static AbHom identity(const AbGroup& g);
  static AbHom zero(const AbGroup& dom, const AbGroup& cod);
  /// Throws ShapeMismatch if some column has the wrong order.
  static AbHom from_images(const AbGroup& dom, const AbGroup& cod, const std::vector<std::vector<Int>>& images);

  const AbGroup& dom() const noexcept { return dom_; }
  const AbGroup& cod() const noexcept { return cod_; }
  const IntMatrix& matrix() const noexcept { return m_; }
  std::vector<Int> image(int j) const;
  std::vector<Int> apply(const std::vector<Int>& x) const;

  friend bool operator==(const AbHom&, const AbHom&) = default;

 private:
  AbGroup dom_, cod_;
  IntMatrix m_;
};

/// g ∘ f.
AbHom compose(const AbHom& g, const AbHom& f);
AbHom add(const AbHom& f, const AbHom& g);
AbHom negate(const AbHom& f);
bool well_defined(const AbGroup& dom, const AbGroup& cod, const IntMatrix& m);

/// Every homomorphism dom → cod of finite groups, in lexicographic order of images.
std::vector<AbHom> enumerate_homs(const AbGroup& dom, const AbGroup& cod, Budget& budget);

/// G ⊗ H presented on generators g_i ⊗ h_j of order gcd(d_i, e_j).
struct TensorGroup {
  AbGroup left, right;
  PresentedAbGroup::NormalForm form;
  std::vector<Int> pair(const std::vector<Int>& x, const std::vector<Int>& y) const;
};
TensorGroup tensor(const AbGroup& g, const AbGroup& h);

/// Hom(G, H) presented on the maps g_i ↦ (e_j / gcd(d_i, e_j)) h_j.
struct HomGroup {
  AbGroup dom, cod;
  PresentedAbGroup::NormalForm form;
  AbHom to_hom(const std::vector<Int>& element) const;
  std::vector<Int> from_hom(const AbHom& f) const;
};
HomGroup hom_group(const AbGroup& g, const AbGroup& h);

/// A finite abelian group given by an addition table on {0..size-1}.
struct CarrierGroup {
  int size = 0;
  std::vector<std::vector<int>> add;
  int zero = 0;
};

Report check_carrier_group(const CarrierGroup& c);

/// Explicit isomorphism between a carrier table and its invariant-factor form.
struct CarrierIso {
  AbGroup group;
  std::vector<std::vector<Int>> coords;  ///< per carrier element
  std::vector<int> carrier_of;           ///< per group.index_of
  int element(const std::vector<Int>& x) const { return carrier_of.at(group.index_of(group.reduce(x))); }
  /// Carrier element representing the j-th generator.
  int generator(int j) const { return element(group.unit(j)); }
};

/// Throws InvalidInput if the table is not an abelian group.
CarrierIso decompose(const CarrierGroup& c);

struct AbTarget {
  using Obj = AbGroup;
  using Map = AbHom;

  Map identity(const Obj& x) const { return AbHom::identity(x); }
  Map compose(const Map& g, const Map& f) const { return duplex::compose(g, f); }
  bool has_shape(const Map& f, const Obj& dom, const Obj& cod) const { return f.dom() == dom && f.cod() == cod; }
  std::optional<Map> inverse(const Map& f) const;
  std::string describe_obj(const Obj& x) const { return x.describe(); }

  friend bool operator==(const AbTarget&, const AbTarget&) { return true; }
};

/// Ab^op: a map dom → cod here is a homomorphism cod → dom. Cosimplicial
/// groups are simplicial objects in this target.
struct AbOpTarget {
  using Obj = AbGroup;
  using Map = AbHom;

  Map identity(const Obj& x) const { return AbHom::identity(x); }
  Map compose(const Map& g, const Map& f) const { return duplex::compose(f, g); }
  bool has_shape(const Map& f, const Obj& dom, const Obj& cod) const { return f.dom() == cod && f.cod() == dom; }
  std::optional<Map> inverse(const Map& f) const { return AbTarget{}.inverse(f); }
  std::string describe_obj(const Obj& x) const { return x.describe(); }

  friend bool operator==(const AbOpTarget&, const AbOpTarget&) { return true; }
};

}  // namespace duplex
