#include "duplex/hochschild.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace duplex {

namespace {

std::string pair_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

void check_table(const std::vector<std::vector<int>>& t, int rows, int cols, int range, const char* what) {
  if (static_cast<int>(t.size()) != rows) throw Error(ErrorKind::ShapeMismatch, std::string(what) + " has the wrong shape");
  for (const auto& r : t) {
    if (static_cast<int>(r.size()) != cols) throw Error(ErrorKind::ShapeMismatch, std::string(what) + " has the wrong shape");
    for (int v : r) {
      if (v < 0 || v >= range) throw Error(ErrorKind::ShapeMismatch, std::string(what) + " entry out of range");
    }
  }
}

Int mod(Int x, Int d) {
  if (d == 0) return x;
  Int r = x % d;
  return r < 0 ? r + d : r;
}

std::vector<Int> add_vec(const AbGroup& g, const std::vector<Int>& x, const std::vector<Int>& y, Int c = 1) {
  std::vector<Int> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + c * y[i];
  return g.reduce(std::move(out));
}

// Multilinear expansion of a tuple of coordinate vectors into the structural
// generators of the iterated tensor product, indexed in mixed radix.
void expand(const std::vector<const std::vector<Int>*>& parts, Int coef, std::vector<Int>& out) {
  std::function<void(std::size_t, Int, Int)> go = [&](std::size_t p, Int idx, Int c) {
    if (p == parts.size()) {
      out[idx] += c;
      return;
    }
    const auto& v = *parts[p];
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) go(p + 1, idx * static_cast<Int>(v.size()) + static_cast<Int>(i), c * v[i]);
    }
  };
  go(0, 0, coef);
}

struct Level {
  int n = 0;
  std::vector<Int> orders;  // structural
  PresentedAbGroup::NormalForm form;
  Int tuples = 1;  // rank(A)^n
};

Int int_pow(Int b, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<int> digits(Int idx, int len, int base) {
  std::vector<int> out(len);
  for (int i = len - 1; i >= 0; --i) {
    out[i] = static_cast<int>(idx % base);
    idx /= base;
  }
  return out;
}

Int tuple_order(const AbGroup& a, const std::vector<int>& ks) {
  Int g = 0;
  for (int k : ks) g = std::gcd(g, a.factors[k]);
  return g;
}

Level make_level(const HochschildData& d, int n, int max_generators) {
  const auto& A = d.ring_iso.group;
  const auto& X = d.module_iso.group;
  Level lv;
  lv.n = n;
  lv.tuples = int_pow(A.rank(), n);
  const Int count = lv.tuples * X.rank();
  if (count > max_generators) {
    throw Error(ErrorKind::BudgetExceeded, "level " + std::to_string(n) + " needs " + std::to_string(count) + " generators");
  }
  for (Int t = 0; t < lv.tuples; ++t) {
    Int o = tuple_order(A, digits(t, n, A.rank()));
    for (int l = 0; l < X.rank(); ++l) lv.orders.push_back(std::gcd(o, X.factors[l]));
  }
  lv.form = PresentedAbGroup{lv.orders, {}}.normal_form();
  return lv;
}

std::vector<Int> project(const Level& lv, const std::vector<Int>& s) {
  std::vector<Int> y(lv.form.group.rank(), 0);
  for (int i = 0; i < lv.form.group.rank(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s[j] != 0 && lv.form.proj.at(i, static_cast<int>(j)) != 0) {
        acc = mod(acc + mod(s[j], lv.form.group.factors[i]) * lv.form.proj.at(i, static_cast<int>(j)), lv.form.group.factors[i]);
      }
    }
    y[i] = acc;
  }
  return y;
}

std::vector<Int> lift_column(const Level& lv, int c) {
  std::vector<Int> s(lv.orders.size());
  for (std::size_t t = 0; t < s.size(); ++t) s[t] = mod(lv.form.lift.at(static_cast<int>(t), c), lv.orders[t]);
  return s;
}

}  // namespace

Report check_ring(const FinRing& a) {
  const int n = a.size;
  if (n <= 0) throw Error(ErrorKind::ShapeMismatch, "empty ring");
  check_table(a.add, n, n, n, "add");
  check_table(a.mul, n, n, n, "mul");
  if (a.one < 0 || a.one >= n || a.zero < 0 || a.zero >= n) throw Error(ErrorKind::ShapeMismatch, "constants out of range");
  if (auto r = check_carrier_group(a.additive()); !r) return r;
  for (int x = 0; x < n; ++x) {
    if (a.mul[a.one][x] != x || a.mul[x][a.one] != x) return Report::fail("MulUnit", std::to_string(x));
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (a.mul[a.mul[x][y]][z] != a.mul[x][a.mul[y][z]]) return Report::fail("MulAssociative", pair_str(x, y) + "," + std::to_string(z));
        if (a.mul[x][a.add[y][z]] != a.add[a.mul[x][y]][a.mul[x][z]]) return Report::fail("LeftDistributive", pair_str(x, y) + "," + std::to_string(z));
        if (a.mul[a.add[x][y]][z] != a.add[a.mul[x][z]][a.mul[y][z]]) return Report::fail("RightDistributive", pair_str(x, y) + "," + std::to_string(z));
      }
    }
  }
  return Report::pass();
}

Report check_bimodule(const FinBimoduleAb& x) {
  if (!x.ring) throw Error(ErrorKind::ShapeMismatch, "bimodule without a ring");
  const auto& A = *x.ring;
  const int n = x.size, m = A.size;
  if (n <= 0) throw Error(ErrorKind::ShapeMismatch, "empty bimodule");
  check_table(x.add, n, n, n, "add");
  check_table(x.left, m, n, n, "left action");
  check_table(x.right, n, m, n, "right action");
  if (auto r = check_carrier_group(x.additive()); !r) return r;
  for (int a = 0; a < m; ++a) {
    for (int v = 0; v < n; ++v) {
      const std::string w = pair_str(a, v);
      for (int u = 0; u < n; ++u) {
        if (x.left[a][x.add[v][u]] != x.add[x.left[a][v]][x.left[a][u]]) return Report::fail("LeftAdditive", w);
        if (x.right[x.add[v][u]][a] != x.add[x.right[v][a]][x.right[u][a]]) return Report::fail("RightAdditive", w);
      }
      for (int b = 0; b < m; ++b) {
        if (x.left[A.add[a][b]][v] != x.add[x.left[a][v]][x.left[b][v]]) return Report::fail("LeftAdditive", w);
        if (x.right[v][A.add[a][b]] != x.add[x.right[v][a]][x.right[v][b]]) return Report::fail("RightAdditive", w);
        if (x.left[a][x.left[b][v]] != x.left[A.mul[a][b]][v]) return Report::fail("LeftAssociative", w);
        if (x.right[x.right[v][a]][b] != x.right[v][A.mul[a][b]]) return Report::fail("RightAssociative", w);
        if (x.right[x.left[a][v]][b] != x.left[a][x.right[v][b]]) return Report::fail("ActionsCommute", w);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (x.left[A.one][v] != v) return Report::fail("LeftUnit", std::to_string(v));
    if (x.right[v][A.one] != v) return Report::fail("RightUnit", std::to_string(v));
  }
  return Report::pass();
}

FinRing zmod_ring(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "Z/n needs n >= 1");
  FinRing r{n, std::vector<std::vector<int>>(n, std::vector<int>(n)), std::vector<std::vector<int>>(n, std::vector<int>(n)),
            0, 1 % n};
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      r.add[x][y] = (x + y) % n;
      r.mul[x][y] = (x * y) % n;
    }
  }
  return r;
}

namespace {

FinRing from_ops(int n, int zero, int one, const std::function<int(int, int)>& add, const std::function<int(int, int)>& mul) {
  FinRing r{n, std::vector<std::vector<int>>(n, std::vector<int>(n)), std::vector<std::vector<int>>(n, std::vector<int>(n)),
            zero, one};
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      r.add[x][y] = add(x, y);
      r.mul[x][y] = mul(x, y);
    }
  }
  return r;
}

}  // namespace

FinRing matrix_ring_f2() {
  auto bit = [](int x, int k) { return (x >> k) & 1; };
  return from_ops(16, 0, 0b1001, [](int x, int y) { return x ^ y; }, [&](int x, int y) {
    int a = bit(x, 3), b = bit(x, 2), c = bit(x, 1), d = bit(x, 0);
    int e = bit(y, 3), f = bit(y, 2), g = bit(y, 1), h = bit(y, 0);
    int p = (a * e + b * g) & 1, q = (a * f + b * h) & 1, r = (c * e + d * g) & 1, s = (c * f + d * h) & 1;
    return 8 * p + 4 * q + 2 * r + s;
  });
}

FinRing upper_triangular_f2() {
  // [[a,b],[0,d]] as 4a+2b+d
  auto bit = [](int x, int k) { return (x >> k) & 1; };
  return from_ops(8, 0, 0b101, [](int x, int y) { return x ^ y; }, [&](int x, int y) {
    int a = bit(x, 2), b = bit(x, 1), d = bit(x, 0);
    int e = bit(y, 2), f = bit(y, 1), h = bit(y, 0);
    return 4 * (a * e & 1) + 2 * ((a * f + b * h) & 1) + (d * h & 1);
  });
}

FinRing dual_numbers_f2() {
  // a + b e as a + 2b
  return from_ops(4, 0, 1, [](int x, int y) { return x ^ y; }, [](int x, int y) {
    int a = x & 1, b = x >> 1, c = y & 1, d = y >> 1;
    return (a * c & 1) + 2 * ((a * d + b * c) & 1);
  });
}

FinBimoduleAb regular_bimodule(std::shared_ptr<const FinRing> a) {
  FinBimoduleAb x{a, a->size, a->add, a->zero, a->mul, a->mul};
  return x;
}

FinBimoduleAb zero_bimodule(std::shared_ptr<const FinRing> a) {
  return {a, 1, {{0}}, 0, std::vector<std::vector<int>>(a->size, {0}), {std::vector<int>(a->size, 0)}};
}

FinBimoduleAb restrict_bimodule(std::shared_ptr<const FinRing> a, const std::vector<int>& hom, const FinBimoduleAb& x) {
  if (static_cast<int>(hom.size()) != a->size) throw Error(ErrorKind::ShapeMismatch, "ring map must cover the carrier");
  FinBimoduleAb out{a, x.size, x.add, x.zero, {}, std::vector<std::vector<int>>(x.size, std::vector<int>(a->size))};
  for (int r = 0; r < a->size; ++r) {
    out.left.push_back(x.left.at(hom[r]));
    for (int v = 0; v < x.size; ++v) out.right[v][r] = x.right[v].at(hom[r]);
  }
  return out;
}

LinearBimodule linearize(const FinBimoduleAb& x, const CarrierIso& ring_iso, const CarrierIso& module_iso) {
  (void)ring_iso;
  LinearBimodule lin{module_iso.group, {}, {}};
  const auto& G = module_iso.group;
  for (int a = 0; a < x.ring->size; ++a) {
    std::vector<std::vector<Int>> li, ri;
    for (int j = 0; j < G.rank(); ++j) {
      int g = module_iso.generator(j);
      li.push_back(module_iso.coords[x.left[a][g]]);
      ri.push_back(module_iso.coords[x.right[g][a]]);
    }
    lin.left.push_back(AbHom::from_images(G, G, li));
    lin.right.push_back(AbHom::from_images(G, G, ri));
  }
  return lin;
}

HochschildData prepare(const FinBimoduleAb& x) {
  if (auto r = check_ring(*x.ring); !r) throw Error(ErrorKind::InvalidInput, "not a ring: " + r.describe());
  if (auto r = check_bimodule(x); !r) throw Error(ErrorKind::InvalidInput, "not a bimodule: " + r.describe());
  HochschildData d{*x.ring, x, decompose(x.ring->additive()), decompose(x.additive()), {}};
  d.linear = linearize(x, d.ring_iso, d.module_iso);
  return d;
}

bool is_bimodule_map(const LinearBimodule& x, const LinearBimodule& y, const AbHom& f) {
  for (std::size_t a = 0; a < x.left.size(); ++a) {
    if (!(compose(f, x.left[a]) == compose(y.left[a], f))) return false;
    if (!(compose(f, x.right[a]) == compose(y.right[a], f))) return false;
  }
  return true;
}

std::vector<AbHom> enumerate_bimodule_maps(const LinearBimodule& x, const LinearBimodule& y, Budget& budget) {
  std::vector<AbHom> out;
  for (auto& f : enumerate_homs(x.group, y.group, budget)) {
    if (is_bimodule_map(x, y, f)) out.push_back(std::move(f));
  }
  return out;
}

TruncAugSimplicial<AbTarget> hochschild_complex(const HochschildData& d, int trunc, int max_generators) {
  const auto& R = d.ring;
  const auto& M = d.module;
  const auto& A = d.ring_iso.group;
  std::vector<Level> levels;
  for (int n = 0; n <= trunc; ++n) levels.push_back(make_level(d, n, max_generators));

  // Structural image of a generator tuple under an operation on carrier
  // elements (ring elements, then one module element).
  using Op = std::function<std::pair<std::vector<int>, int>(std::vector<int>, int)>;
  auto build = [&](const Level& from, const Level& to, const Op& op) {
    std::map<Int, std::vector<Int>> cache;
    auto image = [&](Int t) -> const std::vector<Int>& {
      auto it = cache.find(t);
      if (it != cache.end()) return it->second;
      const int rx = d.module_iso.group.rank();
      auto ks = digits(t / rx, from.n, A.rank());
      std::vector<int> as;
      for (int k : ks) as.push_back(d.ring_iso.generator(k));
      auto [bs, y] = op(as, d.module_iso.generator(static_cast<int>(t % rx)));
      std::vector<const std::vector<Int>*> parts;
      for (int b : bs) parts.push_back(&d.ring_iso.coords[b]);
      parts.push_back(&d.module_iso.coords[y]);
      std::vector<Int> s(to.orders.size(), 0);
      expand(parts, 1, s);
      return cache.emplace(t, std::move(s)).first->second;
    };
    std::vector<std::vector<Int>> images;
    for (int c = 0; c < from.form.group.rank(); ++c) {
      auto lc = lift_column(from, c);
      std::vector<Int> s(to.orders.size(), 0);
      for (std::size_t t = 0; t < lc.size(); ++t) {
        if (lc[t] == 0) continue;
        const auto& im = image(static_cast<Int>(t));
        for (std::size_t u = 0; u < s.size(); ++u) s[u] = mod(s[u] + lc[t] * im[u], to.orders[u]);
      }
      images.push_back(project(to, s));
    }
    return AbHom::from_images(from.form.group, to.form.group, images);
  };

  return TruncAugSimplicial<AbTarget>::build(
      AbTarget{}, trunc, false, [&](int n) { return levels[n].form.group; },
      [&](int n, int i) {
        return build(levels[n], levels[n - 1], [&, n, i](std::vector<int> as, int x) {
          if (i == 0) {
            x = M.right[x][as.front()];
            as.erase(as.begin());
          } else if (i == n) {
            x = M.left[as.back()][x];
            as.pop_back();
          } else {
            as[i - 1] = R.mul[as[i - 1]][as[i]];
            as.erase(as.begin() + i);
          }
          return std::pair{as, x};
        });
      },
      [&](int n, int j) {
        return build(levels[n], levels[n + 1], [&, j](std::vector<int> as, int x) {
          as.insert(as.begin() + j, R.one);
          return std::pair{as, x};
        });
      });
}

TruncAugSimplicial<AbOpTarget> hochschild_cocomplex(const HochschildData& d, int trunc, int max_generators) {
  const auto& R = d.ring;
  const auto& M = d.module;
  const auto& A = d.ring_iso.group;
  const auto& X = d.module_iso.group;
  std::vector<Level> levels;
  for (int n = 0; n <= trunc; ++n) levels.push_back(make_level(d, n, max_generators));

  // A cochain as its values on generator tuples, in coordinates of X.
  auto values_of = [&](const Level& lv, const std::vector<Int>& s) {
    std::vector<std::vector<Int>> vals(lv.tuples, X.zero());
    for (Int t = 0; t < lv.tuples; ++t) {
      for (int l = 0; l < X.rank(); ++l) {
        Int o = lv.orders[t * X.rank() + l];
        vals[t][l] = mod(s[t * X.rank() + l] * (X.factors[l] / o), X.factors[l]);
      }
    }
    return vals;
  };
  auto eval = [&](const std::vector<std::vector<Int>>& vals, const std::vector<int>& as) {
    std::vector<const std::vector<Int>*> parts;
    for (int a : as) parts.push_back(&d.ring_iso.coords[a]);
    std::vector<Int> coef(vals.size(), 0);
    expand(parts, 1, coef);
    std::vector<Int> x = X.zero();
    for (std::size_t t = 0; t < vals.size(); ++t) {
      if (coef[t] != 0) x = add_vec(X, x, vals[t], coef[t]);
    }
    return x;
  };
  auto act = [&](const std::vector<Int>& x, int a, bool on_right) {
    int e = d.module_iso.element(x);
    return d.module_iso.coords[on_right ? M.right[e][a] : M.left[a][e]];
  };
  using Op = std::function<std::vector<Int>(const std::vector<std::vector<Int>>&, const std::vector<int>&)>;
  auto build = [&](const Level& from, const Level& to, const Op& op) {
    std::vector<std::vector<Int>> images;
    for (int c = 0; c < from.form.group.rank(); ++c) {
      auto vals = values_of(from, lift_column(from, c));
      std::vector<Int> s(to.orders.size(), 0);
      for (Int t = 0; t < to.tuples; ++t) {
        std::vector<int> as;
        for (int k : digits(t, to.n, A.rank())) as.push_back(d.ring_iso.generator(k));
        auto v = op(vals, as);
        for (int l = 0; l < X.rank(); ++l) {
          Int step = X.factors[l] / to.orders[t * X.rank() + l];
          if (v[l] % step != 0) throw Error(ErrorKind::VerificationFailed, "coface value outside the cochain group");
          s[t * X.rank() + l] = v[l] / step;
        }
      }
      images.push_back(project(to, s));
    }
    return AbHom::from_images(from.form.group, to.form.group, images);
  };

  return TruncAugSimplicial<AbOpTarget>::build(
      AbOpTarget{}, trunc, false, [&](int n) { return levels[n].form.group; },
      [&](int n, int i) {
        // δ_i: C^{n-1} → C^n
        return build(levels[n - 1], levels[n], [&, n, i](const auto& vals, std::vector<int> as) {
          if (i == 0) {
            int last = as.back();
            as.pop_back();
            return act(eval(vals, as), last, true);
          }
          if (i == n) {
            int first = as.front();
            as.erase(as.begin());
            return act(eval(vals, as), first, false);
          }
          // mirror image of the usual indexing, matching δ_0 on the right
          const int p = n - i - 1;
          as[p] = R.mul[as[p]][as[p + 1]];
          as.erase(as.begin() + p + 1);
          return eval(vals, as);
        });
      },
      [&](int n, int j) {
        // σ_j: C^{n+1} → C^n
        return build(levels[n + 1], levels[n], [&, n, j](const auto& vals, std::vector<int> as) {
          as.insert(as.begin() + (n - j), R.one);
          return eval(vals, as);
        });
      });
}

PresentedAbGroup zeroth_homology(const HochschildData& d) {
  const auto& M = d.module;
  const auto& X = d.module_iso.group;
  PresentedAbGroup p{X.factors, {}};
  std::set<std::vector<Int>> seen;
  for (int a = 0; a < d.ring.size; ++a) {
    for (int x = 0; x < M.size; ++x) {
      auto r = add_vec(X, d.module_iso.coords[M.left[a][x]], d.module_iso.coords[M.right[x][a]], -1);
      if (r != X.zero() && seen.insert(r).second) p.relations.push_back(std::move(r));
    }
  }
  return p;
}

PresentedAbGroup coequalizer(const AbHom& f, const AbHom& g) {
  auto diff = add(f, negate(g));
  PresentedAbGroup p{f.cod().factors, {}};
  for (int j = 0; j < diff.dom().rank(); ++j) p.relations.push_back(diff.image(j));
  return p;
}

Subgroup zeroth_cohomology(const HochschildData& d) {
  const auto& M = d.module;
  Subgroup out;
  for (int x = 0; x < M.size; ++x) {
    bool central = true;
    for (int a = 0; a < d.ring.size && central; ++a) central = M.left[a][x] == M.right[x][a];
    if (central) out.elements.push_back(x);
  }
  std::map<int, int> index;
  for (std::size_t i = 0; i < out.elements.size(); ++i) index[out.elements[i]] = static_cast<int>(i);
  CarrierGroup sub{static_cast<int>(out.elements.size()), {}, index.at(M.zero)};
  for (int x : out.elements) {
    std::vector<int> row;
    for (int y : out.elements) row.push_back(index.at(M.add[x][y]));
    sub.add.push_back(std::move(row));
  }
  out.group = decompose(sub).group;
  return out;
}

std::vector<std::vector<Int>> equalizer(const AbHom& f, const AbHom& g) {
  std::vector<std::vector<Int>> out;
  for (const auto& x : f.dom().elements()) {
    if (f.apply(x) == g.apply(x)) out.push_back(x);
  }
  return out;
}

LinearBimodule hom_bimodule(const HochschildData& d, const AbGroup& p, HomGroup* out) {
  const auto& A = d.ring_iso.group;
  auto hg = hom_group(A, p);
  const auto& G = hg.form.group;
  LinearBimodule lin{G, {}, {}};
  for (int a = 0; a < d.ring.size; ++a) {
    std::vector<std::vector<Int>> li, ri;
    for (int c = 0; c < G.rank(); ++c) {
      auto f = hg.to_hom(G.unit(c));
      std::vector<std::vector<Int>> fl, fr;
      for (int k = 0; k < A.rank(); ++k) {
        int ak = d.ring_iso.generator(k);
        fl.push_back(f.apply(d.ring_iso.coords[d.ring.mul[ak][a]]));  // (af)(a') = f(a'a)
        fr.push_back(f.apply(d.ring_iso.coords[d.ring.mul[a][ak]]));  // (fa)(a') = f(aa')
      }
      li.push_back(hg.from_hom(AbHom::from_images(A, p, fl)));
      ri.push_back(hg.from_hom(AbHom::from_images(A, p, fr)));
    }
    lin.left.push_back(AbHom::from_images(G, G, li));
    lin.right.push_back(AbHom::from_images(G, G, ri));
  }
  if (out) *out = std::move(hg);
  return lin;
}

LinearBimodule tensor_bimodule(const HochschildData& d, const AbGroup& p, TensorGroup* out) {
  const auto& A = d.ring_iso.group;
  auto tg = tensor(A, p);
  const auto& G = tg.form.group;
  LinearBimodule lin{G, {}, {}};
  for (int a = 0; a < d.ring.size; ++a) {
    std::vector<std::vector<Int>> li, ri;
    for (int c = 0; c < G.rank(); ++c) {
      std::vector<Int> yl = G.zero(), yr = G.zero();
      for (int k = 0; k < A.rank(); ++k) {
        for (int l = 0; l < p.rank(); ++l) {
          Int coef = tg.form.lift.at(k * p.rank() + l, c);
          if (coef == 0) continue;
          int ak = d.ring_iso.generator(k);
          yl = add_vec(G, yl, tg.pair(d.ring_iso.coords[d.ring.mul[a][ak]], p.unit(l)), coef);
          yr = add_vec(G, yr, tg.pair(d.ring_iso.coords[d.ring.mul[ak][a]], p.unit(l)), coef);
        }
      }
      li.push_back(yl);
      ri.push_back(yr);
    }
    lin.left.push_back(AbHom::from_images(G, G, li));
    lin.right.push_back(AbHom::from_images(G, G, ri));
  }
  if (out) *out = std::move(tg);
  return lin;
}

Report verify_adjunctions(const HochschildData& d, const AbGroup& p, Budget& budget, AdjunctionCounts* counts) {
  const auto& A = d.ring_iso.group;
  const auto& X = d.linear;
  const auto& one = d.ring_iso.coords[d.ring.one];

  // H_0 ⊣ [A, -]: u ↦ (x ↦ (a ↦ u[xa])), inverse v ↦ ([x] ↦ v(x)(1)).
  HomGroup hg;
  auto H = hom_bimodule(d, p, &hg);
  auto h0 = zeroth_homology(d).normal_form();
  const AbHom q(X.group, h0.group, h0.proj);
  auto left_maps = enumerate_bimodule_maps(X, H, budget);
  auto group_maps = enumerate_homs(h0.group, p, budget);
  auto psi = [&](const AbHom& u) {
    std::vector<std::vector<Int>> images;
    for (int j = 0; j < X.group.rank(); ++j) {
      int xj = d.module_iso.generator(j);
      std::vector<std::vector<Int>> vals;
      for (int k = 0; k < A.rank(); ++k) {
        vals.push_back(u.apply(q.apply(d.module_iso.coords[d.module.right[xj][d.ring_iso.generator(k)]])));
      }
      images.push_back(hg.from_hom(AbHom::from_images(A, p, vals)));
    }
    return AbHom::from_images(X.group, H.group, images);
  };
  auto theta = [&](const AbHom& v) {
    std::vector<std::vector<Int>> images;
    for (int c = 0; c < h0.group.rank(); ++c) {
      std::vector<Int> x(X.group.rank());
      for (int j = 0; j < X.group.rank(); ++j) x[j] = h0.lift.at(j, c);
      images.push_back(hg.to_hom(v.apply(X.group.reduce(x))).apply(one));
    }
    return AbHom::from_images(h0.group, p, images);
  };
  if (counts) {
    counts->bimodule_to_hom = static_cast<int>(left_maps.size());
    counts->h0_to_p = static_cast<int>(group_maps.size());
  }
  if (left_maps.size() != group_maps.size()) {
    return Report::fail("LeftCardinality", std::to_string(left_maps.size()) + " vs " + std::to_string(group_maps.size()));
  }
  for (std::size_t i = 0; i < group_maps.size(); ++i) {
    const auto& u = group_maps[i];
    AbHom v;
    try {
      v = psi(u);
    } catch (const Error&) {
      return Report::fail("LeftNotWellDefined", "u#" + std::to_string(i));
    }
    if (!is_bimodule_map(X, H, v)) return Report::fail("LeftNotBimoduleMap", "u#" + std::to_string(i));
    if (!(theta(v) == u)) return Report::fail("LeftRoundTrip", "u#" + std::to_string(i));
  }
  for (std::size_t i = 0; i < left_maps.size(); ++i) {
    AbHom u;
    try {
      u = theta(left_maps[i]);
    } catch (const Error&) {
      return Report::fail("LeftNotWellDefined", "v#" + std::to_string(i));
    }
    if (!(psi(u) == left_maps[i])) return Report::fail("LeftRoundTrip", "v#" + std::to_string(i));
  }

  // A ⊗ - ⊣ H^0: w ↦ (b ⊗ p ↦ b w(p)), inverse v ↦ (p ↦ v(1 ⊗ p)).
  TensorGroup tg;
  auto T = tensor_bimodule(d, p, &tg);
  auto h0co = zeroth_cohomology(d);
  std::set<int> central(h0co.elements.begin(), h0co.elements.end());
  auto right_maps = enumerate_bimodule_maps(T, X, budget);
  std::vector<AbHom> into_h0co;
  for (auto& w : enumerate_homs(p, X.group, budget)) {
    bool ok = true;
    for (int l = 0; l < p.rank() && ok; ++l) ok = central.count(d.module_iso.element(w.image(l))) > 0;
    if (ok) into_h0co.push_back(std::move(w));
  }
  auto psi2 = [&](const AbHom& w) {
    std::vector<std::vector<Int>> images;
    for (int c = 0; c < T.group.rank(); ++c) {
      std::vector<Int> y = X.group.zero();
      for (int k = 0; k < A.rank(); ++k) {
        for (int l = 0; l < p.rank(); ++l) {
          Int coef = tg.form.lift.at(k * p.rank() + l, c);
          if (coef != 0) y = add_vec(X.group, y, X.left[d.ring_iso.generator(k)].apply(w.image(l)), coef);
        }
      }
      images.push_back(y);
    }
    return AbHom::from_images(T.group, X.group, images);
  };
  auto theta2 = [&](const AbHom& v) {
    std::vector<std::vector<Int>> images;
    for (int l = 0; l < p.rank(); ++l) images.push_back(v.apply(tg.pair(one, p.unit(l))));
    return AbHom::from_images(p, X.group, images);
  };
  if (counts) {
    counts->tensor_to_bimodule = static_cast<int>(right_maps.size());
    counts->p_to_h0co = static_cast<int>(into_h0co.size());
  }
  if (right_maps.size() != into_h0co.size()) {
    return Report::fail("RightCardinality", std::to_string(right_maps.size()) + " vs " + std::to_string(into_h0co.size()));
  }
  for (std::size_t i = 0; i < into_h0co.size(); ++i) {
    AbHom v;
    try {
      v = psi2(into_h0co[i]);
    } catch (const Error&) {
      return Report::fail("RightNotWellDefined", "w#" + std::to_string(i));
    }
    if (!is_bimodule_map(T, X, v)) return Report::fail("RightNotBimoduleMap", "w#" + std::to_string(i));
    if (!(theta2(v) == into_h0co[i])) return Report::fail("RightRoundTrip", "w#" + std::to_string(i));
  }
  for (std::size_t i = 0; i < right_maps.size(); ++i) {
    auto w = theta2(right_maps[i]);
    for (int l = 0; l < p.rank(); ++l) {
      if (!central.count(d.module_iso.element(w.image(l)))) return Report::fail("RightNotCentral", "v#" + std::to_string(i));
    }
    if (!(psi2(w) == right_maps[i])) return Report::fail("RightRoundTrip", "v#" + std::to_string(i));
  }
  return Report::pass();
}

}  // namespace duplex
