#pragma once

// Simplicial operators (monotone maps) and the duplicial category K^op as a
// rewriting system on normal forms t^k ∘ φ.

#include <cstdint>
#include <string>
#include <vector>

#include "duplex/duplicial.hpp"

namespace duplex {

/// Acts X_n -> X_m. `values` is the monotone map [m] -> [n], of length m+1;
/// degree -1 is the empty ordinal.
struct SimplicialOperator {
  int n = 0;
  int m = 0;
  std::vector<int> values;

  friend bool operator==(const SimplicialOperator&, const SimplicialOperator&) = default;
  friend auto operator<=>(const SimplicialOperator&, const SimplicialOperator&) = default;
};

bool is_valid(const SimplicialOperator& op);

SimplicialOperator identity_op(int n);
/// d_i: X_n -> X_{n-1}, the injection [n-1] -> [n] missing i.
SimplicialOperator face_op(int n, int i);
/// s_j: X_n -> X_{n+1}, the surjection [n+1] -> [n] repeating j.
SimplicialOperator degen_op(int n, int j);

/// `a` after `b`: b acts X_n -> X_m, a acts X_m -> X_k. Throws DegreeMismatch.
SimplicialOperator compose_op(const SimplicialOperator& a, const SimplicialOperator& b);

/// Ordinal sum on the underlying maps of ordinals (sizes m+1, n+1).
SimplicialOperator ordinal_sum(const SimplicialOperator& a, const SimplicialOperator& b);
/// f^rev(i) = |cod| - 1 - f(|dom| - 1 - i).
SimplicialOperator rev_op(const SimplicialOperator& a);

/// All monotone maps [m] -> [n], lexicographic.
std::vector<SimplicialOperator> all_operators(int n, int m);

struct Generator {
  char kind = 'd';  ///< 'd' or 's'
  int index = 0;
  int level = 0;    ///< degree acted on
  int out_level() const { return kind == 'd' ? level - 1 : level + 1; }
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Epi-mono factorization, in application order: faces with decreasing
/// index, then degeneracies with increasing index.
std::vector<Generator> factor(const SimplicialOperator& op);
/// Composite of a word given in application order, starting at level n.
SimplicialOperator from_word(int n, const std::vector<Generator>& word);

/// t^k ∘ φ: act by φ, then t^k at degree m. k = 0 when m = -1.
struct DuplicialOperator {
  int k = 0;
  SimplicialOperator simp;

  int n() const { return simp.n; }
  int m() const { return simp.m; }
  friend bool operator==(const DuplicialOperator&, const DuplicialOperator&) = default;
  friend auto operator<=>(const DuplicialOperator&, const DuplicialOperator&) = default;
};

DuplicialOperator t_op(int n, int k = 1);

struct RewriteStats {
  std::int64_t steps = 0;
  int max_tpow = 0;  ///< largest t-power produced by pushing one generator
};

/// gen ∘ t^k = t^{k'} ∘ gen', one rule application per power of t.
std::pair<int, Generator> push_generator(const Generator& gen, int k, RewriteStats* stats = nullptr);

/// Normal form of `a` after `b`. Throws DegreeMismatch.
DuplicialOperator compose_duplicial(const DuplicialOperator& a, const DuplicialOperator& b,
                                    RewriteStats* stats = nullptr);

/// "t^k . s_{j1}...s_{jr} d_{i1}...d_{iq} @ n->m", rightmost generator first;
/// an empty word prints as "id".
std::string to_string(const DuplicialOperator& op);
/// Inverse of to_string; also accepts a missing "t^k ." prefix and "t" for
/// t^1. Throws InvalidInput or DegreeMismatch.
DuplicialOperator parse_duplicial(const std::string& text);

template <class T>
typename T::Map eval_word(const TruncAugSimplicial<T>& X, const std::vector<Generator>& word, int n) {
  const T& tg = X.target();
  auto acc = tg.identity(X.level(n));
  for (const auto& g : word) acc = tg.compose(g.kind == 'd' ? X.face(g.level, g.index) : X.degen(g.level, g.index), acc);
  return acc;
}

/// The map X_n -> X_m. Throws OutOfTruncation.
template <class T>
typename T::Map eval_op(const DuplicialOperator& o, const DuplicialFamily<T>& F) {
  const auto& X = F.base;
  if (!X.has_level(o.n()) || !X.has_level(o.m())) throw Error(ErrorKind::OutOfTruncation, to_string(o));
  for (const auto& g : factor(o.simp)) {
    if (!X.has_level(g.out_level()) || (g.kind == 's' && g.level >= X.trunc())) {
      throw Error(ErrorKind::OutOfTruncation, to_string(o));
    }
  }
  auto acc = eval_word(X, factor(o.simp), o.n());
  for (int i = 0; i < o.k; ++i) acc = X.target().compose(F.t.at(o.m()), acc);
  return acc;
}

/// Periodic monotone maps f: Z -> Z with f(i + n + 1) = f(i) + p + 1, taken
/// modulo shifts by r(p+1), with t acting by precomposition with i ↦ i - 1.
/// Paracyclic, and t_n has order r(n+1).
struct PeriodicFamily {
  int p = 0;
  int r = 1;
  std::vector<std::vector<std::vector<int>>> elements;  ///< f(0..n) per level
  DuplicialFamily<SetTarget> family;
};

PeriodicFamily periodic_family(int p, int r, int trunc);

}  // namespace duplex
