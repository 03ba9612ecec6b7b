#pragma once

// Duplicial operators t_n on a truncated simplicial object, their
// classification, and the correspondence with maps Dec_r X -> Dec_l X.

#include <string>
#include <vector>

#include "duplex/simplicial.hpp"

namespace duplex {

template <class T>
struct DuplicialFamily {
  TruncAugSimplicial<T> base;
  /// t[n] is t_n: X_n -> X_n for 0 <= n <= trunc.
  std::vector<typename T::Map> t;

  const typename T::Map& at(int n) const { return t.at(n); }
  /// The extra degeneracy s_{-1} = t_{n+1} s_n: X_n -> X_{n+1}.
  typename T::Map extra_degeneracy(int n) const {
    return base.target().compose(t.at(n + 1), base.degen(n, n));
  }
  friend bool operator==(const DuplicialFamily&, const DuplicialFamily&) = default;
};

enum class DuplicialKind { Invalid, Duplicial, Paracyclic, Cyclic };

std::string_view to_string(DuplicialKind k);

struct Classification {
  DuplicialKind kind = DuplicialKind::Invalid;
  int trunc = 0;
  Report report;

  /// "cyclic@N=4" style label.
  std::string verdict() const { return std::string(to_string(kind)) + "@N=" + std::to_string(trunc); }
};

namespace detail {

inline std::string eq_witness(const std::string& rel, int n, int i) {
  return rel + " (n=" + std::to_string(n) + ", i=" + std::to_string(i) + ")";
}

}  // namespace detail

/// First failing instance of the duplicial relations, in increasing (n, i).
template <class T>
Report check_duplicial_relations(const DuplicialFamily<T>& F) {
  const auto& X = F.base;
  const T& tg = X.target();
  const int N = X.trunc();
  if (static_cast<int>(F.t.size()) != N + 1) throw Error(ErrorKind::ShapeMismatch, "need one t_n per level 0..N");
  for (int n = 0; n <= N; ++n) {
    if (!tg.has_shape(F.t[n], X.level(n), X.level(n))) return Report::fail("TShape", detail::eq_witness("t", n, 0));
  }
  for (int n = -1; n <= N; ++n) {
    // Face relations between t_{n+1} and t_n.
    if (n + 1 <= N && n + 1 >= 0 && (n >= 0 || X.augmented())) {
      if (tg.compose(X.face(n + 1, 0), F.t[n + 1]) != X.face(n + 1, n + 1)) {
        return Report::fail("d_0 t = d_last", detail::eq_witness("d_0 t_{n+1}", n, 0));
      }
      for (int i = 1; i <= n + 1; ++i) {
        if (tg.compose(X.face(n + 1, i), F.t[n + 1]) != tg.compose(F.t[n], X.face(n + 1, i - 1))) {
          return Report::fail("d_i t = t d_{i-1}", detail::eq_witness("d_i t_{n+1}", n, i));
        }
      }
    }
    // Degeneracy relations.
    if (n >= 0 && n + 1 <= N) {
      const auto tt = tg.compose(F.t[n + 1], F.t[n + 1]);
      if (tg.compose(X.degen(n, 0), F.t[n]) != tg.compose(tt, X.degen(n, n))) {
        return Report::fail("s_0 t = t^2 s_last", detail::eq_witness("s_0 t_n", n, 0));
      }
      for (int i = 1; i <= n; ++i) {
        if (tg.compose(X.degen(n, i), F.t[n]) != tg.compose(F.t[n + 1], X.degen(n, i - 1))) {
          return Report::fail("s_i t = t s_{i-1}", detail::eq_witness("s_i t_n", n, i));
        }
      }
    }
  }
  return Report::pass();
}

template <class T>
Classification classify_duplicial(const DuplicialFamily<T>& F) {
  Classification c;
  c.trunc = F.base.trunc();
  if (auto r = check_simplicial(F.base); !r) {
    c.report = Report::fail("base." + r.rule, r.witness);
    return c;
  }
  c.report = check_duplicial_relations(F);
  if (!c.report) return c;
  c.kind = DuplicialKind::Duplicial;
  const T& tg = F.base.target();
  for (int n = 0; n <= c.trunc; ++n) {
    if (!tg.inverse(F.t[n])) return c;
  }
  c.kind = DuplicialKind::Paracyclic;
  for (int n = 0; n <= c.trunc; ++n) {
    auto p = F.t[n];
    for (int k = 1; k <= n; ++k) p = tg.compose(F.t[n], p);
    if (p != tg.identity(F.base.level(n))) return c;
  }
  c.kind = DuplicialKind::Cyclic;
  return c;
}

/// The simplicial map Dec_r X -> Dec_l X with component t_{n+1} at level n,
/// after checking the counit triangle and the comultiplication square.
template <class T>
SimplicialMap<T> family_to_decalage_map(const DuplicialFamily<T>& F) {
  if (auto r = check_duplicial_relations(F); !r) throw Error(ErrorKind::NotDuplicial, r.describe());
  const auto& X = F.base;
  SimplicialMap<T> m{X.bottom(), {}};
  for (int n = X.bottom(); n <= X.trunc() - 1; ++n) m.components.push_back(F.t[n + 1]);
  return m;
}

/// Counit triangle and comultiplication square for a candidate map
/// Dec_r X -> Dec_l X, plus its simpliciality.
template <class T>
Report check_decalage_map(const TruncAugSimplicial<T>& X, const SimplicialMap<T>& m) {
  const T& tg = X.target();
  auto R = dec(X, Side::Right);
  auto L = dec(X, Side::Left);
  if (auto r = check_simplicial_map(R.dec, L.dec, m); !r) return r;
  for (int n = X.bottom(); n <= X.trunc() - 1; ++n) {
    if (tg.compose(L.counit.at(n), m.at(n)) != R.counit.at(n)) return Report::fail("CounitTriangle", detail::at_level("", n));
  }
  // Dec_l(m) and Dec_r(m) at level n are both m at level n+1.
  for (int n = X.bottom(); n <= X.trunc() - 2; ++n) {
    auto rhs = tg.compose(m.at(n + 1), tg.compose(m.at(n + 1), R.comult.at(n)));
    if (tg.compose(L.comult.at(n), m.at(n)) != rhs) return Report::fail("ComultSquare", detail::at_level("", n));
  }
  return Report::pass();
}

/// Inverse direction: t_n = m_{n-1} for n >= 1 and t_0 = d_1 t_1 s_0.
template <class T>
DuplicialFamily<T> decalage_map_to_family(const TruncAugSimplicial<T>& X, const SimplicialMap<T>& m) {
  if (X.trunc() < 2) throw Error(ErrorKind::TruncationTooShallow, "recovering t_0 needs truncation at least 2");
  if (auto r = check_decalage_map(X, m); !r) throw Error(ErrorKind::DiagramsFail, r.describe());
  const T& tg = X.target();
  DuplicialFamily<T> F{X, {}};
  F.t.resize(X.trunc() + 1);
  for (int n = 1; n <= X.trunc(); ++n) F.t[n] = m.at(n - 1);
  F.t[0] = tg.compose(X.face(1, 1), tg.compose(F.t[1], X.degen(0, 0)));
  return F;
}

/// m is simplicial and commutes with the t operators.
template <class T>
Report check_duplicial_map(const DuplicialFamily<T>& F, const DuplicialFamily<T>& G, const SimplicialMap<T>& m) {
  if (F.base.trunc() != G.base.trunc()) throw Error(ErrorKind::ShapeMismatch, "duplicial map across truncations");
  if (auto r = check_simplicial_map(F.base, G.base, m); !r) return r;
  const T& tg = F.base.target();
  for (int n = 0; n <= F.base.trunc(); ++n) {
    if (tg.compose(m.at(n), F.t[n]) != tg.compose(G.t[n], m.at(n))) return Report::fail("TCommutes", detail::at_level("t", n));
  }
  return Report::pass();
}

}  // namespace duplex
