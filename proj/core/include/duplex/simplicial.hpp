#pragma once

// Truncated, optionally augmented, simplicial objects in a target category,
// the two decalage comonads, reversal, and bar resolutions of comonads.

#include <functional>
#include <string>
#include <vector>

#include "duplex/error.hpp"
#include "duplex/fincat.hpp"
#include "duplex/target.hpp"

namespace duplex {

enum class Side { Right, Left };

/// Levels X_n for bottom() <= n <= trunc, where bottom() is -1 when augmented.
/// face(n, i): X_n -> X_{n-1} for 0 <= i <= n; degen(n, j): X_n -> X_{n+1} for
/// 0 <= j <= n < trunc.
template <class T>
class TruncAugSimplicial {
 public:
  using Target = T;
  using Obj = typename T::Obj;
  using Map = typename T::Map;

  TruncAugSimplicial() = default;
  TruncAugSimplicial(T target, int trunc, bool augmented)
      : target_(std::move(target)), trunc_(trunc), augmented_(augmented) {
    if (trunc < 0) throw Error(ErrorKind::ShapeMismatch, "truncation must be non-negative");
    const int count = trunc - bottom() + 1;
    levels_.resize(count);
    faces_.resize(count);
    degens_.resize(count);
    for (int n = bottom(); n <= trunc; ++n) {
      faces_[idx(n)].resize(n >= 0 && (n > 0 || augmented) ? n + 1 : 0);
      degens_[idx(n)].resize(n >= 0 && n < trunc ? n + 1 : 0);
    }
  }

  /// Fills every level and map from callbacks.
  static TruncAugSimplicial build(T target, int trunc, bool augmented, const std::function<Obj(int)>& level,
                                  const std::function<Map(int, int)>& face,
                                  const std::function<Map(int, int)>& degen) {
    TruncAugSimplicial x(std::move(target), trunc, augmented);
    for (int n = x.bottom(); n <= trunc; ++n) x.levels_[x.idx(n)] = level(n);
    for (int n = x.bottom(); n <= trunc; ++n) {
      for (int i = 0; i < x.num_faces(n); ++i) x.faces_[x.idx(n)][i] = face(n, i);
      for (int j = 0; j < x.num_degens(n); ++j) x.degens_[x.idx(n)][j] = degen(n, j);
    }
    return x;
  }

  const T& target() const noexcept { return target_; }
  int trunc() const noexcept { return trunc_; }
  bool augmented() const noexcept { return augmented_; }
  int bottom() const noexcept { return augmented_ ? -1 : 0; }
  bool has_level(int n) const noexcept { return n >= bottom() && n <= trunc_; }

  const Obj& level(int n) const { return levels_.at(checked(n)); }
  const Map& face(int n, int i) const { return faces_.at(checked(n)).at(i); }
  const Map& degen(int n, int j) const { return degens_.at(checked(n)).at(j); }
  int num_faces(int n) const { return static_cast<int>(faces_.at(checked(n)).size()); }
  int num_degens(int n) const { return static_cast<int>(degens_.at(checked(n)).size()); }

  void set_level(int n, Obj x) { levels_.at(checked(n)) = std::move(x); }
  void set_face(int n, int i, Map m) { faces_.at(checked(n)).at(i) = std::move(m); }
  void set_degen(int n, int j, Map m) { degens_.at(checked(n)).at(j) = std::move(m); }

  friend bool operator==(const TruncAugSimplicial&, const TruncAugSimplicial&) = default;

 private:
  int idx(int n) const { return n - bottom(); }
  int checked(int n) const {
    if (!has_level(n)) {
      throw Error(ErrorKind::OutOfTruncation, "level " + std::to_string(n) + " outside the truncation");
    }
    return idx(n);
  }

  T target_{};
  int trunc_ = 0;
  bool augmented_ = false;
  std::vector<Obj> levels_;
  std::vector<std::vector<Map>> faces_;
  std::vector<std::vector<Map>> degens_;
};

/// Levelwise maps between simplicial objects over the same levels range.
template <class T>
struct SimplicialMap {
  int bottom = 0;
  std::vector<typename T::Map> components;

  const typename T::Map& at(int n) const { return components.at(n - bottom); }
  int top() const { return bottom + static_cast<int>(components.size()) - 1; }
  friend bool operator==(const SimplicialMap&, const SimplicialMap&) = default;
};

namespace detail {

inline std::string at_level(const std::string& what, int n) { return what + " at n=" + std::to_string(n); }

}  // namespace detail

/// Endpoints of every map and all simplicial identities in range.
template <class T>
Report check_simplicial(const TruncAugSimplicial<T>& X) {
  const T& tg = X.target();
  const int N = X.trunc();
  for (int n = X.bottom(); n <= N; ++n) {
    for (int i = 0; i < X.num_faces(n); ++i) {
      if (!tg.has_shape(X.face(n, i), X.level(n), X.level(n - 1))) {
        return Report::fail("FaceShape", detail::at_level("d_" + std::to_string(i), n));
      }
    }
    for (int j = 0; j < X.num_degens(n); ++j) {
      if (!tg.has_shape(X.degen(n, j), X.level(n), X.level(n + 1))) {
        return Report::fail("DegeneracyShape", detail::at_level("s_" + std::to_string(j), n));
      }
    }
  }
  for (int n = X.bottom(); n <= N; ++n) {
    // d_i d_j = d_{j-1} d_i on X_n, i < j.
    if (n - 2 >= X.bottom()) {
      for (int j = 1; j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          if (tg.compose(X.face(n - 1, i), X.face(n, j)) != tg.compose(X.face(n - 1, j - 1), X.face(n, i))) {
            return Report::fail("FaceFace", detail::at_level("d_" + std::to_string(i) + " d_" + std::to_string(j), n));
          }
        }
      }
    }
    // s_i s_j = s_{j+1} s_i on X_n, i <= j.
    if (n >= 0 && n + 2 <= N) {
      for (int j = 0; j <= n; ++j) {
        for (int i = 0; i <= j; ++i) {
          if (tg.compose(X.degen(n + 1, i), X.degen(n, j)) != tg.compose(X.degen(n + 1, j + 1), X.degen(n, i))) {
            return Report::fail("DegenDegen", detail::at_level("s_" + std::to_string(i) + " s_" + std::to_string(j), n));
          }
        }
      }
    }
    // d_i s_j on X_n.
    if (n >= 0 && n + 1 <= N) {
      for (int j = 0; j <= n; ++j) {
        for (int i = 0; i <= n + 1; ++i) {
          const auto lhs = tg.compose(X.face(n + 1, i), X.degen(n, j));
          typename T::Map rhs;
          if (i < j) {
            rhs = tg.compose(X.degen(n - 1, j - 1), X.face(n, i));
          } else if (i == j || i == j + 1) {
            rhs = tg.identity(X.level(n));
          } else {
            rhs = tg.compose(X.degen(n - 1, j), X.face(n, i - 1));
          }
          if (lhs != rhs) {
            return Report::fail("FaceDegen", detail::at_level("d_" + std::to_string(i) + " s_" + std::to_string(j), n));
          }
        }
      }
    }
  }
  return Report::pass();
}

/// Components commute with every face and degeneracy in range.
template <class T>
Report check_simplicial_map(const TruncAugSimplicial<T>& X, const TruncAugSimplicial<T>& Y,
                            const SimplicialMap<T>& m) {
  if (X.bottom() != Y.bottom() || X.trunc() != Y.trunc() || m.bottom != X.bottom() || m.top() != X.trunc()) {
    throw Error(ErrorKind::ShapeMismatch, "simplicial map between objects of different range");
  }
  const T& tg = X.target();
  for (int n = X.bottom(); n <= X.trunc(); ++n) {
    if (!tg.has_shape(m.at(n), X.level(n), Y.level(n))) return Report::fail("ComponentShape", detail::at_level("m", n));
  }
  for (int n = X.bottom(); n <= X.trunc(); ++n) {
    for (int i = 0; i < X.num_faces(n); ++i) {
      if (tg.compose(Y.face(n, i), m.at(n)) != tg.compose(m.at(n - 1), X.face(n, i))) {
        return Report::fail("FaceNaturality", detail::at_level("d_" + std::to_string(i), n));
      }
    }
    for (int j = 0; j < X.num_degens(n); ++j) {
      if (tg.compose(Y.degen(n, j), m.at(n)) != tg.compose(m.at(n + 1), X.degen(n, j))) {
        return Report::fail("DegenNaturality", detail::at_level("s_" + std::to_string(j), n));
      }
    }
  }
  return Report::pass();
}

template <class T>
SimplicialMap<T> identity_map(const TruncAugSimplicial<T>& X) {
  SimplicialMap<T> m{X.bottom(), {}};
  for (int n = X.bottom(); n <= X.trunc(); ++n) m.components.push_back(X.target().identity(X.level(n)));
  return m;
}

/// Drops the levels above `trunc`.
template <class T>
TruncAugSimplicial<T> truncate(const TruncAugSimplicial<T>& X, int trunc) {
  if (trunc > X.trunc()) throw Error(ErrorKind::OutOfTruncation, "cannot extend a truncation");
  return TruncAugSimplicial<T>::build(
      X.target(), trunc, X.augmented(), [&](int n) { return X.level(n); },
      [&](int n, int i) { return X.face(n, i); }, [&](int n, int j) { return X.degen(n, j); });
}

/// Right decalage discards the last face and degeneracy in each degree, left
/// decalage the first ones. The result has truncation N-1 and is augmented
/// (by X_0) exactly when X is.
template <class T>
TruncAugSimplicial<T> decalage(const TruncAugSimplicial<T>& X, Side side) {
  if (X.trunc() < 1) throw Error(ErrorKind::TruncationTooShallow, "decalage needs truncation at least 1");
  const int shift = side == Side::Left ? 1 : 0;
  return TruncAugSimplicial<T>::build(
      X.target(), X.trunc() - 1, X.augmented(), [&](int n) { return X.level(n + 1); },
      [&](int n, int i) { return X.face(n + 1, i + shift); },
      [&](int n, int j) { return X.degen(n + 1, j + shift); });
}

/// The decalage comonad at X: counit Dec X -> X (truncated to N-1) uses the
/// discarded faces, comultiplication Dec X -> Dec Dec X (on Dec X truncated to
/// N-2) the discarded degeneracies.
template <class T>
struct Decalage {
  TruncAugSimplicial<T> dec;
  SimplicialMap<T> counit;
  SimplicialMap<T> comult;
};

template <class T>
Decalage<T> dec(const TruncAugSimplicial<T>& X, Side side) {
  Decalage<T> out{decalage(X, side), {X.bottom(), {}}, {X.bottom(), {}}};
  for (int n = X.bottom(); n <= X.trunc() - 1; ++n) {
    out.counit.components.push_back(X.face(n + 1, side == Side::Right ? n + 1 : 0));
  }
  for (int n = X.bottom(); n <= X.trunc() - 2; ++n) {
    out.comult.components.push_back(X.degen(n + 1, side == Side::Right ? n + 1 : 0));
  }
  return out;
}

/// Verifies that the maps returned by dec are simplicial and satisfy the
/// comonad equations wherever the truncation reaches.
template <class T>
Report check_decalage_comonad(const TruncAugSimplicial<T>& X, Side side) {
  const T& tg = X.target();
  auto D = dec(X, side);
  const int N = X.trunc();
  if (auto r = check_simplicial_map(D.dec, truncate(X, N - 1), D.counit); !r) return Report::fail("counit." + r.rule, r.witness);
  if (N < 2) return Report::pass();
  auto DD = dec(D.dec, side);
  if (auto r = check_simplicial_map(truncate(D.dec, N - 2), DD.dec, D.comult); !r) {
    return Report::fail("comult." + r.rule, r.witness);
  }
  for (int n = X.bottom(); n <= N - 2; ++n) {
    const auto id = tg.identity(D.dec.level(n));
    // counit of Dec at Dec X, and Dec applied to counit, after comult.
    if (tg.compose(DD.counit.at(n), D.comult.at(n)) != id) return Report::fail("CounitLeft", detail::at_level("", n));
    if (tg.compose(D.counit.at(n + 1), D.comult.at(n)) != id) return Report::fail("CounitRight", detail::at_level("", n));
  }
  for (int n = X.bottom(); n <= N - 3; ++n) {
    if (tg.compose(DD.comult.at(n), D.comult.at(n)) != tg.compose(D.comult.at(n + 1), D.comult.at(n))) {
      return Report::fail("Coassociativity", detail::at_level("", n));
    }
  }
  return Report::pass();
}

/// Face i at level n becomes face n-i; degeneracy j becomes degeneracy n-j.
template <class T>
TruncAugSimplicial<T> reverse(const TruncAugSimplicial<T>& X) {
  return TruncAugSimplicial<T>::build(
      X.target(), X.trunc(), X.augmented(), [&](int n) { return X.level(n); },
      [&](int n, int i) { return X.face(n, n - i); }, [&](int n, int j) { return X.degen(n, n - j); });
}

/// Augmented bar resolution f g^{n+1} x with d_i = f g^i ε g^{n-i} x and
/// s_j = f g^j δ g^{n-j} x.
TruncAugSimplicial<CatTarget> bar_resolution(const Comonad& g, const FinFunctor& f, ObjId x, int trunc);

/// Same, reusing caller-owned functor powers of g.
TruncAugSimplicial<CatTarget> bar_resolution(const Comonad& g, FunctorPowers& powers, const FinFunctor& f,
                                             ObjId x, int trunc);

}  // namespace duplex
