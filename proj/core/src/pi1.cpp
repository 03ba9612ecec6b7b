#include "duplex/pi1.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <string>

namespace duplex {

namespace {

// Hasse–Lowe–Todd coset enumeration over the trivial subgroup. Column 2g is
// generator g, column 2g+1 its inverse.
class CosetEnumeration {
 public:
  CosetEnumeration(int gens, std::int64_t limit) : cols_(2 * gens), limit_(limit) { new_coset(); }

  void run(const std::vector<std::vector<int>>& relators) {
    for (int c = 0; c < static_cast<int>(fwd_.size()); ++c) {
      if (fwd_[c] != c) continue;
      for (const auto& r : relators) {
        scan_and_fill(c, r);
        if (fwd_[c] != c) break;
      }
      if (fwd_[c] != c) continue;
      for (int x = 0; x < cols_; ++x) {
        if (entry(c, x) == -1) define(c, x);
      }
    }
  }

  /// Live cosets renumbered densely; table[c][x].
  std::vector<std::vector<int>> compact() {
    std::vector<int> id(fwd_.size(), -1);
    int n = 0;
    for (int c = 0; c < static_cast<int>(fwd_.size()); ++c) {
      if (fwd_[c] == c) id[c] = n++;
    }
    std::vector<std::vector<int>> out(n, std::vector<int>(cols_));
    for (int c = 0; c < static_cast<int>(fwd_.size()); ++c) {
      if (id[c] < 0) continue;
      for (int x = 0; x < cols_; ++x) out[id[c]][x] = id[rep(entry(c, x))];
    }
    return out;
  }

 private:
  static int inv(int x) { return x ^ 1; }
  int& entry(int c, int x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }

  int new_coset() {
    if (static_cast<std::int64_t>(fwd_.size()) >= limit_) {
      throw Error(ErrorKind::GroupoidTooLarge,
                  "coset enumeration exceeded " + std::to_string(limit_) + " cosets");
    }
    int c = static_cast<int>(fwd_.size());
    fwd_.push_back(c);
    table_.resize(table_.size() + cols_, -1);
    return c;
  }

  void define(int c, int x) {
    int d = new_coset();
    entry(c, x) = d;
    entry(d, inv(x)) = c;
  }

  int rep(int c) {
    int r = c;
    while (fwd_[r] != r) r = fwd_[r];
    while (fwd_[c] != r) {
      int next = fwd_[c];
      fwd_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::queue<int>& q) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    fwd_[l] = k;
    q.push(l);
  }

  void coincidence(int a, int b) {
    std::queue<int> q;
    merge(a, b, q);
    while (!q.empty()) {
      int e = q.front();
      q.pop();
      for (int x = 0; x < cols_; ++x) {
        int f = entry(e, x);
        if (f == -1) continue;
        if (entry(f, inv(x)) == e) entry(f, inv(x)) = -1;
        int e1 = rep(e);
        int f1 = rep(f);
        if (entry(e1, x) != -1) {
          merge(f1, entry(e1, x), q);
        } else if (entry(f1, inv(x)) != -1) {
          merge(e1, entry(f1, inv(x)), q);
        } else {
          entry(e1, x) = f1;
          entry(f1, inv(x)) = e1;
        }
      }
    }
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && entry(f, w[i]) != -1) f = entry(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, inv(w[j])) != -1) b = entry(b, inv(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        entry(f, w[i]) = b;
        entry(b, inv(w[i])) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  int cols_;
  std::int64_t limit_;
  std::vector<int> fwd_;
  std::vector<int> table_;
};

}  // namespace

MorId Pi1::arrow(ObjId a, ObjId b, int e) const {
  const int n = source->num_objects();
  MorId off = arrow_offset[static_cast<std::size_t>(a) * n + b];
  if (off < 0) throw Error(ErrorKind::ShapeMismatch, "objects lie in different components");
  return off + e;
}

std::array<int, 3> Pi1::decode(MorId m) const {
  ObjId a = groupoid->src(m);
  ObjId b = groupoid->tgt(m);
  return {a, b, m - arrow_offset[static_cast<std::size_t>(a) * source->num_objects() + b]};
}

Pi1 pi1(const CatPtr& c, std::int64_t cap) {
  const auto& C = *c;
  const int no = C.num_objects();
  const int nm = C.num_morphisms();
  Pi1 out;
  out.source = c;

  std::vector<int> uf(no);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (MorId f = 0; f < nm; ++f) uf[find(C.src(f))] = find(C.tgt(f));
  out.component.assign(no, -1);
  for (ObjId x = 0; x < no; ++x) {
    // Components are numbered in order of their smallest object.
    int r = find(x);
    bool seen = false;
    for (ObjId y = 0; y < x; ++y) {
      if (find(y) == r) {
        out.component[x] = out.component[y];
        seen = true;
        break;
      }
    }
    if (!seen) {
      out.component[x] = static_cast<int>(out.base.size());
      out.base.push_back(x);
    }
  }
  const int ncomp = static_cast<int>(out.base.size());

  // Spanning forest by breadth-first search in morphism id order.
  out.tree_path.assign(no, {});
  std::vector<bool> tree_edge(nm, false);
  std::vector<bool> reached(no, false);
  for (int k = 0; k < ncomp; ++k) {
    std::deque<ObjId> queue{out.base[k]};
    reached[out.base[k]] = true;
    while (!queue.empty()) {
      ObjId x = queue.front();
      queue.pop_front();
      for (MorId f = 0; f < nm; ++f) {
        if (C.is_identity(f)) continue;
        ObjId y = kUndefined;
        bool forward = true;
        if (C.src(f) == x && !reached[C.tgt(f)]) {
          y = C.tgt(f);
        } else if (C.tgt(f) == x && !reached[C.src(f)]) {
          y = C.src(f);
          forward = false;
        }
        if (y == kUndefined) continue;
        reached[y] = true;
        tree_edge[f] = true;
        out.tree_path[y] = out.tree_path[x];
        out.tree_path[y].push_back({f, forward});
        queue.push_back(y);
      }
    }
  }

  // Generators: non-identity morphisms, numbered within their component.
  std::vector<int> gen(nm, -1);
  std::vector<std::vector<MorId>> gen_mor(ncomp);
  for (MorId f = 0; f < nm; ++f) {
    if (C.is_identity(f)) continue;
    int k = out.component[C.src(f)];
    gen[f] = static_cast<int>(gen_mor[k].size());
    gen_mor[k].push_back(f);
  }
  std::vector<std::vector<std::vector<int>>> relators(ncomp);
  for (MorId f = 0; f < nm; ++f) {
    if (tree_edge[f]) relators[out.component[C.src(f)]].push_back({2 * gen[f]});
  }
  for (MorId f = 0; f < nm; ++f) {
    if (C.is_identity(f)) continue;
    for (MorId g = 0; g < nm; ++g) {
      if (C.is_identity(g) || C.src(g) != C.tgt(f)) continue;
      MorId k = C.compose(g, f);
      std::vector<int> w{2 * gen[f], 2 * gen[g]};
      if (!C.is_identity(k)) w.push_back(2 * gen[k] + 1);
      relators[out.component[C.src(f)]].push_back(std::move(w));
    }
  }

  out.groups.resize(ncomp);
  out.element_word.resize(ncomp);
  out.generator_element.assign(nm, 0);
  std::int64_t total = 0;
  std::vector<std::int64_t> comp_size(ncomp, 0);
  for (ObjId x = 0; x < no; ++x) ++comp_size[out.component[x]];
  for (int k = 0; k < ncomp; ++k) {
    const int gens = static_cast<int>(gen_mor[k].size());
    const std::int64_t cols = std::max(1, 2 * gens);
    const std::int64_t limit = std::min<std::int64_t>(4 * cap + 1000, 20'000'000 / cols);
    CosetEnumeration te(gens, limit);
    te.run(relators[k]);
    auto table = te.compact();
    const int order = static_cast<int>(table.size());
    total += comp_size[k] * comp_size[k] * order;
    if (total > cap) {
      throw Error(ErrorKind::GroupoidTooLarge, "fundamental groupoid exceeds " + std::to_string(cap) + " morphisms");
    }
    // Words for each element, breadth first from the identity coset.
    std::vector<std::vector<int>> word(order);
    std::vector<bool> seen(order, false);
    seen[0] = true;
    std::deque<int> q{0};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int x = 0; x < 2 * gens; ++x) {
        int v = table[u][x];
        if (seen[v]) continue;
        seen[v] = true;
        word[v] = word[u];
        word[v].push_back(x);
        q.push_back(v);
      }
    }
    auto act = [&](int u, const std::vector<int>& w) {
      for (int x : w) u = table[u][x];
      return u;
    };
    FiniteGroup grp;
    grp.mul.assign(order, std::vector<int>(order));
    grp.inv.assign(order, 0);
    for (int u = 0; u < order; ++u) {
      for (int v = 0; v < order; ++v) {
        grp.mul[u][v] = act(u, word[v]);
        if (grp.mul[u][v] == 0) grp.inv[u] = v;
      }
    }
    out.groups[k] = std::move(grp);
    for (int u = 0; u < order; ++u) {
      std::vector<EdgeStep> steps;
      for (int x : word[u]) steps.push_back({gen_mor[k][x / 2], (x % 2) == 0});
      out.element_word[k].push_back(std::move(steps));
    }
    for (int g = 0; g < gens; ++g) out.generator_element[gen_mor[k][g]] = table[0][2 * g];
  }

  RawCategory raw;
  raw.objects.reserve(no);
  for (ObjId x = 0; x < no; ++x) raw.objects.push_back(C.object_name(x));
  out.arrow_offset.assign(static_cast<std::size_t>(no) * no, -1);
  for (ObjId a = 0; a < no; ++a) {
    for (ObjId b = 0; b < no; ++b) {
      int k = out.component[a];
      if (out.component[b] != k) continue;
      out.arrow_offset[static_cast<std::size_t>(a) * no + b] = static_cast<MorId>(raw.morphisms.size());
      const int order = out.groups[k].order();
      for (int e = 0; e < order; ++e) {
        std::string name = C.object_name(a) + "->" + C.object_name(b);
        if (order > 1) name += "#" + std::to_string(e);
        raw.morphisms.push_back({a, b, std::move(name)});
      }
    }
  }
  for (ObjId a = 0; a < no; ++a) raw.identity.push_back(out.arrow(a, a, 0));
  for (ObjId a = 0; a < no; ++a) {
    for (ObjId b = 0; b < no; ++b) {
      if (out.component[a] != out.component[b]) continue;
      for (ObjId d = 0; d < no; ++d) {
        if (out.component[d] != out.component[a]) continue;
        const auto& grp = out.groups[out.component[a]];
        for (int e1 = 0; e1 < grp.order(); ++e1) {
          for (int e2 = 0; e2 < grp.order(); ++e2) {
            raw.comp.push_back({out.arrow(b, d, e2), out.arrow(a, b, e1), out.arrow(a, d, grp.mul[e1][e2])});
          }
        }
      }
    }
  }
  out.groupoid = share(FinCategory::from_raw(raw));
  std::vector<ObjId> obj(no);
  std::iota(obj.begin(), obj.end(), 0);
  std::vector<MorId> mor(nm);
  for (MorId f = 0; f < nm; ++f) mor[f] = out.arrow(C.src(f), C.tgt(f), out.generator_element[f]);
  out.p = FinFunctor(c, out.groupoid, std::move(obj), std::move(mor));
  return out;
}

FinFunctor induce_from_pi1(const Pi1& pi, const FinFunctor& f) {
  const auto& C = *pi.source;
  const auto& D = *f.cod();
  auto image = [&](const EdgeStep& s) {
    MorId m = f.mor(s.mor);
    if (s.forward) return m;
    auto inv = D.inverse(m);
    if (!inv) throw Error(ErrorKind::InversionFails, "image of " + C.morphism_name(s.mor) + " is not invertible");
    return *inv;
  };
  auto invert = [&](MorId m) {
    auto inv = D.inverse(m);
    if (!inv) throw Error(ErrorKind::InversionFails, "image morphism is not invertible");
    return *inv;
  };
  const int no = C.num_objects();
  std::vector<MorId> tree(no);
  for (ObjId a = 0; a < no; ++a) {
    MorId acc = D.id(f.obj(pi.base[pi.component[a]]));
    for (const auto& s : pi.tree_path[a]) acc = D.compose(image(s), acc);
    tree[a] = acc;
  }
  // Loop at the base for one step of an element word.
  auto loop = [&](const EdgeStep& s) {
    ObjId from = s.forward ? C.src(s.mor) : C.tgt(s.mor);
    ObjId to = s.forward ? C.tgt(s.mor) : C.src(s.mor);
    return D.compose_chain({invert(tree[to]), image(s), tree[from]});
  };
  std::vector<std::vector<MorId>> loops(pi.groups.size());
  for (std::size_t k = 0; k < pi.groups.size(); ++k) {
    for (const auto& w : pi.element_word[k]) {
      MorId acc = D.id(f.obj(pi.base[k]));
      for (const auto& s : w) acc = D.compose(loop(s), acc);
      loops[k].push_back(acc);
    }
  }
  std::vector<MorId> mor(pi.groupoid->num_morphisms());
  for (MorId m = 0; m < pi.groupoid->num_morphisms(); ++m) {
    auto [a, b, e] = pi.decode(m);
    mor[m] = D.compose_chain({tree[b], loops[pi.component[a]][e], invert(tree[a])});
  }
  FinFunctor induced(pi.groupoid, f.cod(), f.obj_map(), std::move(mor));
  if (auto r = check_functor(induced); !r) throw Error(ErrorKind::InversionFails, "induced functor: " + r.describe());
  if (!(compose(induced, pi.p) == f)) throw Error(ErrorKind::InversionFails, "induced functor does not factor f");
  return induced;
}

}  // namespace duplex
