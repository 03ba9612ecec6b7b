// Acceptance run: one line per criterion. Criteria listed after
// --expect-fail are reported as XFAIL when they fail and XPASS (an error)
// when they pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "duplex/bohmstefan.hpp"
#include "duplex/catalog.hpp"
#include "duplex/dupcat.hpp"
#include "duplex/hochschild.hpp"
#include "duplex/laxmod.hpp"
#include "duplex/nerve.hpp"

using namespace duplex;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string num(long long v) { return std::to_string(v); }

// ---------------------------------------------------------------------------
// Coalgebra instances shared by criteria 1 and 9.

struct LawInstances {
  DistributiveLaw law;
  std::vector<LeftCoalgebra> lefts;
  std::vector<RightCoalgebra> rights;
};

const std::vector<std::vector<LawInstances>>& coalgebra_instances() {
  static const auto all = [] {
    std::vector<std::vector<LawInstances>> out;
    for (const auto& c : catalog::small_fixtures(8)) {
      auto cp = share(c);
      Budget budget;
      std::vector<LawInstances> per;
      auto comonads = enumerate_comonads(cp, budget);
      for (const auto& g : comonads) {
        for (const auto& h : comonads) {
          for (auto& law : enumerate_distributive_laws(g, h, budget)) {
            LawInstances li{law, enumerate_left_coalgebras(law, cp, budget), enumerate_right_coalgebras(law, budget)};
            per.push_back(std::move(li));
          }
        }
      }
      out.push_back(std::move(per));
    }
    return out;
  }();
  return all;
}

Outcome soundness_sweep() {
  long pairs = 0, invalid = 0;
  std::string first;
  for (const auto& per : coalgebra_instances()) {
    for (const auto& li : per) {
      for (const auto& l : li.lefts) {
        for (const auto& r : li.rights) {
          ++pairs;
          auto c = classify_duplicial(bs_operator(l, r, 4));
          if (c.kind == DuplicialKind::Invalid) {
            if (!invalid++) first = c.report.describe();
          }
        }
      }
    }
  }
  return {invalid == 0 && pairs > 0,
          num(pairs) + " coalgebra pairs on " + num(static_cast<long>(coalgebra_instances().size())) +
              " fixtures, " + num(invalid) + " invalid at N=4" + (first.empty() ? "" : " (" + first + ")")};
}

// ---------------------------------------------------------------------------

Outcome rewriting() {
  const int D = 6;
  auto z2c = share(catalog::cyclic_group(2));
  auto z2 = nerve_family(nerve(z2c, D + 1), canonical_groupoid(*z2c));
  auto per = periodic_family(2, 2, D + 1).family;
  const SetTarget tg;
  long generator_pairs = 0, full_pairs = 0, failures = 0;
  std::string first;
  auto fail = [&](const std::string& w) {
    if (!failures++) first = w;
  };

  for (const DuplicialFamily<SetTarget>* F : {&z2, &per}) {
    const int lo = F->base.bottom();
    std::map<DuplicialOperator, std::vector<int>> cache;
    auto ev = [&](const DuplicialOperator& o) -> const std::vector<int>& {
      auto it = cache.find(o);
      if (it == cache.end()) it = cache.emplace(o, eval_op(o, *F)).first;
      return it->second;
    };
    auto normal_forms = [](int n, int m, int kmax) {
      std::vector<DuplicialOperator> out;
      for (const auto& s : all_operators(n, m)) {
        for (int k = 0; k <= (m >= 0 ? kmax : 0); ++k) out.push_back({k, s});
      }
      return out;
    };
    // Every generator after every normal form up to degree D, t-powers up to m+1.
    for (int m = lo; m <= D; ++m) {
      std::vector<DuplicialOperator> gens;
      for (int i = 0; i <= m && m - 1 >= lo; ++i) gens.push_back({0, face_op(m, i)});
      for (int j = 0; j <= m; ++j) gens.push_back({0, degen_op(m, j)});
      if (m >= 0) gens.push_back(t_op(m));
      for (int n = lo; n <= D; ++n) {
        for (const auto& b : normal_forms(n, m, m + 1)) {
          for (const auto& g : gens) {
            ++generator_pairs;
            auto c = compose_duplicial(g, b);
            if (c.n() != n || c.m() != g.m() || ev(c) != tg.compose(ev(g), ev(b))) {
              fail(to_string(g) + " after " + to_string(b));
            }
          }
        }
      }
      cache.clear();
    }
    // Every composable pair of normal forms up to degree 3.
    for (int n = lo; n <= 3; ++n) {
      for (int m = lo; m <= 3; ++m) {
        for (int l = lo; l <= 3; ++l) {
          for (const auto& b : normal_forms(n, m, m + 1)) {
            for (const auto& a : normal_forms(m, l, l + 1)) {
              ++full_pairs;
              auto ab = compose_duplicial(a, b);
              if (ab.n() != n || ab.m() != l || ev(ab) != tg.compose(ev(a), ev(b))) fail(to_string(a) + " after " + to_string(b));
            }
          }
        }
      }
    }
  }

  std::mt19937_64 rng(0);
  auto pick = [&](int n, int m) {
    auto all = all_operators(n, m);
    int k = m >= 0 ? static_cast<int>(rng() % static_cast<unsigned>(2 * (m + 1) + 1)) : 0;
    return DuplicialOperator{k, all[rng() % all.size()]};
  };
  std::uniform_int_distribution<int> deg(0, D);
  const int triples = 1000;
  for (int i = 0; i < triples; ++i) {
    int n = deg(rng), m = deg(rng), l = deg(rng), q = rng() % 8 == 0 ? -1 : deg(rng);
    auto c = pick(n, m), b = pick(m, l), a = pick(l, q);
    if (!(compose_duplicial(a, compose_duplicial(b, c)) == compose_duplicial(compose_duplicial(a, b), c))) {
      fail("associativity " + to_string(a) + " | " + to_string(b) + " | " + to_string(c));
    }
    if (!(compose_duplicial({0, identity_op(q)}, a) == a) || !(compose_duplicial(a, {0, identity_op(l)}) == a)) {
      fail("identity " + to_string(a));
    }
  }
  return {failures == 0, num(generator_pairs) + " generator pairs to degree " + num(D) + ", " + num(full_pairs) +
                             " full pairs to degree 3, " + num(triples) + " seeded triples; " + num(failures) +
                             " failures" + (first.empty() ? "" : " (" + first + ")")};
}

// ---------------------------------------------------------------------------

template <class T>
bool round_trip(const DuplicialFamily<T>& F, std::string& why) {
  const auto& X = F.base;
  const T& tg = X.target();
  auto m = family_to_decalage_map(F);
  if (auto r = check_decalage_map(X, m); !r) {
    why = "map: " + r.describe();
    return false;
  }
  if (!(decalage_map_to_family(X, m) == F)) {
    why = "family not recovered";
    return false;
  }
  if (F.t[0] != tg.compose(X.face(1, 1), tg.compose(F.t[1], X.degen(0, 0)))) {
    why = "t_0 != d_1 t_1 s_0";
    return false;
  }
  return true;
}

template <class T>
bool dec_commute(const TruncAugSimplicial<T>& X) {
  return decalage(decalage(X, Side::Left), Side::Right) == decalage(decalage(X, Side::Right), Side::Left);
}

Outcome decalage_round_trips() {
  long families = 0, objects = 0, failures = 0;
  std::string first;
  auto note = [&](bool ok, const std::string& w) {
    if (!ok && !failures++) first = w;
  };
  for (const auto& c : catalog::small_fixtures(6)) {
    auto cp = share(c);
    Budget budget;
    auto data = enumerate_nerve_data(c, budget);
    for (int N = 2; N <= 4; ++N) {
      auto nv = nerve(cp, N);
      ++objects;
      note(dec_commute(nv.sset), "Dec_r Dec_l on a nerve");
      for (const auto& d : data) {
        std::string why;
        ++families;
        note(round_trip(nerve_family(nv, d), why), "nerve family: " + why);
      }
    }
  }
  for (const auto& c : catalog::small_fixtures(4)) {
    auto cp = share(c);
    Budget budget;
    auto comonads = enumerate_comonads(cp, budget);
    for (const auto& g : comonads) {
      for (const auto& h : comonads) {
        for (const auto& law : enumerate_distributive_laws(g, h, budget)) {
          auto rights = enumerate_right_coalgebras(law, budget);
          for (const auto& l : enumerate_left_coalgebras(law, cp, budget)) {
            for (const auto& r : rights) {
              for (int N = 2; N <= 3; ++N) {
                auto F = bs_operator(l, r, N);
                std::string why;
                ++families;
                ++objects;
                note(round_trip(F, why), "bar family: " + why);
                note(dec_commute(F.base), "Dec_r Dec_l on a bar resolution");
              }
            }
          }
        }
      }
    }
  }
  for (int p = 0; p <= 2; ++p) {
    for (int r = 1; r <= 3; ++r) {
      for (int N = 2; N <= 4; ++N) {
        auto F = periodic_family(p, r, N).family;
        std::string why;
        ++families;
        ++objects;
        note(round_trip(F, why), "periodic family: " + why);
        note(dec_commute(F.base), "Dec_r Dec_l on a periodic family");
      }
    }
  }
  return {failures == 0, num(families) + " families round-tripped (N=2..4), " + num(objects) +
                             " simplicial objects with Dec_r Dec_l = Dec_l Dec_r; " + num(failures) + " failures" +
                             (first.empty() ? "" : " (" + first + ")")};
}

// ---------------------------------------------------------------------------

// Histogram of element orders; finite abelian groups with equal histograms are isomorphic.
std::map<long, int> order_histogram(const CarrierGroup& g) {
  std::map<long, int> h;
  for (int x = 0; x < g.size; ++x) {
    long k = 1;
    for (int y = x; y != g.zero; y = g.add[y][x]) ++k;
    ++h[x == g.zero ? 1 : k];
  }
  return h;
}

std::map<long, int> order_histogram(const AbGroup& g) {
  std::map<long, int> h;
  for (const auto& e : g.elements()) {
    long k = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      long d = static_cast<long>(g.factors[i]);
      long o = d / std::gcd(d, static_cast<long>(e[i]));
      k = std::lcm(k, o);
    }
    ++h[k];
  }
  return h;
}

// Brute-force H^0 and H_0 orders from the carrier tables.
std::pair<int, int> h_orders(const FinBimoduleAb& x) {
  const auto& A = *x.ring;
  int centre = 0;
  for (int m = 0; m < x.size; ++m) {
    bool ok = true;
    for (int a = 0; a < A.size && ok; ++a) ok = x.left[a][m] == x.right[m][a];
    centre += ok;
  }
  // Subgroup generated by ax - xa, closed under addition.
  std::vector<int> neg(x.size);
  for (int m = 0; m < x.size; ++m) {
    for (int k = 0; k < x.size; ++k) {
      if (x.add[m][k] == x.zero) neg[m] = k;
    }
  }
  std::vector<bool> in(x.size, false);
  in[x.zero] = true;
  std::vector<int> gens;
  for (int a = 0; a < A.size; ++a) {
    for (int m = 0; m < x.size; ++m) gens.push_back(x.add[x.left[a][m]][neg[x.right[m][a]]]);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int s = 0; s < x.size; ++s) {
      if (!in[s]) continue;
      for (int g : gens) {
        int t = x.add[s][g];
        if (!in[t]) in[t] = grew = true;
      }
    }
  }
  int span = static_cast<int>(std::count(in.begin(), in.end(), true));
  return {centre, x.size / span};
}

FinRing f2_squared() {
  FinRing r{4, std::vector<std::vector<int>>(4, std::vector<int>(4)), std::vector<std::vector<int>>(4, std::vector<int>(4)), 0, 3};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      r.add[a][b] = a ^ b;
      r.mul[a][b] = a & b;
    }
  }
  return r;
}

FinRing f4() {
  // F_2[w]/(w^2 + w + 1), element bits (c1, c0) of c1 w + c0.
  FinRing r{4, std::vector<std::vector<int>>(4, std::vector<int>(4)), std::vector<std::vector<int>>(4, std::vector<int>(4)), 0, 1};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      r.add[a][b] = a ^ b;
      int a1 = a >> 1, a0 = a & 1, b1 = b >> 1, b0 = b & 1;
      int w2 = a1 & b1;  // w^2 = w + 1
      int c1 = ((a1 & b0) ^ (a0 & b1) ^ w2) & 1;
      int c0 = ((a0 & b0) ^ w2) & 1;
      r.mul[a][b] = c1 << 1 | c0;
    }
  }
  return r;
}

Outcome hochschild_golden() {
  std::vector<std::string> bad;
  auto m2 = std::make_shared<const FinRing>(matrix_ring_f2());
  auto reg = regular_bimodule(m2);
  auto d = prepare(reg);
  auto h0 = zeroth_homology(d).normal_form().group;
  auto hc = zeroth_cohomology(d);
  auto [centre, quotient] = h_orders(reg);
  if (h0.factors != std::vector<Int>{2} || quotient != 2) bad.push_back("H_0(M2(F2)) = " + h0.describe());
  if (hc.group.factors != std::vector<Int>{2} || centre != 2 || static_cast<int>(hc.elements.size()) != 2) {
    bad.push_back("H^0(M2(F2)) = " + hc.group.describe());
  }
  int commutative = 0;
  std::vector<FinRing> rings;
  for (int n = 1; n <= 12; ++n) rings.push_back(zmod_ring(n));
  rings.push_back(dual_numbers_f2());
  rings.push_back(f2_squared());
  rings.push_back(f4());
  for (const auto& r : rings) {
    auto a = std::make_shared<const FinRing>(r);
    if (!check_ring(*a)) {
      bad.push_back("fixture ring invalid");
      continue;
    }
    ++commutative;
    auto x = regular_bimodule(a);
    auto dd = prepare(x);
    auto ho = zeroth_homology(dd).normal_form().group;
    auto hco = zeroth_cohomology(dd).group;
    auto target = order_histogram(a->additive());
    auto [c, q] = h_orders(x);
    if (order_histogram(ho) != target || q != a->size) bad.push_back("H_0 of a ring of order " + num(a->size));
    if (order_histogram(hco) != target || c != a->size) bad.push_back("H^0 of a ring of order " + num(a->size));
  }
  std::string detail = "H_0 = H^0 = Z/2 for M2(F2) (16x16 oracle agrees); " + num(commutative) +
                       " commutative rings with H_0 = H^0 = A";
  if (!bad.empty()) detail += "; " + num(static_cast<long>(bad.size())) + " mismatches, first: " + bad.front();
  return {bad.empty(), detail};
}

// ---------------------------------------------------------------------------

Outcome adjunctions() {
  std::vector<std::string> bad;
  long checks = 0, skipped = 0;
  for (int n : {2, 4}) {
    auto a = std::make_shared<const FinRing>(zmod_ring(n));
    auto d = prepare(regular_bimodule(a));
    for (const auto& p : {AbGroup{{2}}, AbGroup{{4}}, AbGroup{{2, 2}}, AbGroup{{3}}}) {
      Budget budget;
      AdjunctionCounts counts;
      ++checks;
      if (auto r = verify_adjunctions(d, p, budget, &counts); !r) bad.push_back("Z/" + num(n) + ": " + r.describe());
    }
  }
  std::vector<std::pair<std::string, StrictMonCat>> mons = {{"Z/2", discrete_monoidal(catalog::cyclic_table(2))},
                                                            {"S3", discrete_monoidal(catalog::s3_table())}};
  std::vector<CatPtr> ps = {share(catalog::terminal()), share(catalog::discrete(2)), share(catalog::chain(2)),
                            share(catalog::cyclic_group(2))};
  for (const auto& [name, mon] : mons) {
    auto reg = regular_bimodule(mon);
    for (const auto& p : ps) {
      using Fn = BijectionReport (*)(const LaxBimodule&, const CatPtr&, Budget&);
      for (auto [label, fn] : {std::pair<const char*, Fn>{"uct", uct_bijection},
                               std::pair<const char*, Fn>{"cohomology", cohomology_adjunction},
                               std::pair<const char*, Fn>{"homology", homology_adjunction}}) {
        Budget budget;
        try {
          auto b = fn(reg, p, budget);
          ++checks;
          if (!b.report || b.left != b.right || b.morphisms_left != b.morphisms_right) {
            bad.push_back(name + " " + label + ": " + b.report.describe());
          }
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::BudgetExceeded) throw;
          ++skipped;
        }
      }
    }
  }
  std::string detail = num(checks) + " bijections (Z/2, Z/4 rings; discrete monoidal Z/2, S3), " + num(skipped) +
                       " over budget";
  if (!bad.empty()) detail += "; " + num(static_cast<long>(bad.size())) + " mismatches, first: " + bad.front();
  return {bad.empty(), detail};
}

// ---------------------------------------------------------------------------

// All monoid tables on {0..n-1} with identity 0, by brute force.
std::vector<std::vector<std::vector<int>>> monoid_tables(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) t[0][a] = t[a][0] = a;
  std::vector<std::pair<int, int>> cells;
  for (int a = 1; a < n; ++a) {
    for (int b = 1; b < n; ++b) cells.push_back({a, b});
  }
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == cells.size()) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          for (int c = 0; c < n; ++c) {
            if (t[t[a][b]][c] != t[a][t[b][c]]) return;
          }
        }
      }
      out.push_back(t);
      return;
    }
    for (int v = 0; v < n; ++v) {
      t[cells[k].first][cells[k].second] = v;
      go(k + 1);
    }
  };
  go(0);
  return out;
}

bool commutative(const std::vector<std::vector<int>>& t) {
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b) {
      if (t[a][b] != t[b][a]) return false;
    }
  }
  return true;
}

bool is_group(const std::vector<std::vector<int>>& t) {
  for (const auto& row : t) {
    if (std::find(row.begin(), row.end(), 0) == row.end()) return false;
  }
  return true;
}

std::vector<std::vector<std::vector<int>>> monoid_fixtures() {
  std::vector<std::vector<std::vector<int>>> out;
  for (int n = 1; n <= 4; ++n) {
    for (auto& t : monoid_tables(n)) out.push_back(std::move(t));
  }
  out.push_back(catalog::cyclic_table(5));
  out.push_back(catalog::cyclic_table(6));
  out.push_back(catalog::s3_table());
  return out;
}

Outcome lax_centre() {
  std::vector<std::string> bad;
  Budget budget;
  auto s3 = lax_h0(regular_bimodule(discrete_monoidal(catalog::s3_table())), budget);
  if (s3.objects.size() != 1) bad.push_back("S3 lax centre has " + num(static_cast<long>(s3.objects.size())) + " objects");
  int comm = 0;
  for (const auto& t : monoid_fixtures()) {
    if (!commutative(t)) continue;
    ++comm;
    Budget b;
    auto h = lax_h0(regular_bimodule(discrete_monoidal(t)), b);
    if (h.objects.size() != t.size()) bad.push_back("commutative monoid of order " + num(static_cast<long>(t.size())));
  }
  std::string detail = "S3 -> " + num(static_cast<long>(s3.objects.size())) + " object; " + num(comm) +
                       " commutative monoids -> all objects";
  if (!bad.empty()) detail += "; first mismatch: " + bad.front();
  return {bad.empty(), detail};
}

// ---------------------------------------------------------------------------

Outcome nerve_adjoints() {
  long cats = 0, within = 0, data_total = 0, failures = 0;
  std::string first;
  auto note = [&](bool ok, const std::string& w) {
    if (!ok && !failures++) first = w;
  };
  for (const auto& c : catalog::small_fixtures(6)) {
    auto cp = share(c);
    ++cats;
    Budget budget;
    auto data = enumerate_nerve_data(c, budget);
    data_total += static_cast<long>(data.size());
    std::optional<Pi1> pi;
    try {
      pi = pi1(cp, 100000);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::GroupoidTooLarge) throw;
    }
    const std::string tag = num(c.num_objects()) + " objects, " + num(c.num_morphisms()) + " morphisms";
    if (!pi) {
      // An infinite localization admits no left adjoint into a finite category.
      note(data.empty(), "data without a finite localization: " + tag);
    } else {
      ++within;
      auto adjs = enumerate_left_adjoints(*pi, budget);
      note(data.empty() == adjs.empty() && data.size() == adjs.size(), "data vs left adjoints: " + tag);
      for (const auto& d : data) {
        auto adj = duplicial_to_adjoint(*pi, d);
        note(static_cast<bool>(check_adjunction(adj)), "constructed adjunction invalid: " + tag);
        note(adjoint_to_duplicial(*pi, adj) == d, "data round trip: " + tag);
      }
      for (const auto& a : adjs) {
        auto d = adjoint_to_duplicial(*pi, a);
        note(static_cast<bool>(check_nerve_conditions(c, d)), "constructed data invalid: " + tag);
        auto back = duplicial_to_adjoint(*pi, d);
        note(compose(back.left, pi->p) == compose(a.left, pi->p) && back.counit == a.counit, "adjoint round trip: " + tag);
      }
    }
    auto s = classify_category_structures(cp, 4, budget);
    if (c.is_groupoid()) {
      auto k = classify_duplicial(nerve_family(nerve(cp, 4), canonical_groupoid(c)));
      note(k.kind == DuplicialKind::Cyclic, "canonical structure not cyclic: " + tag);
      note(s.cyclic_count == count_natural_automorphisms(cp, budget), "cyclic count: " + tag);
    } else {
      note(s.paracyclic_count == 0, "paracyclic on a non-groupoid: " + tag);
    }
  }
  return {failures == 0, num(cats) + " categories (" + num(within) + " with finite localization), " + num(data_total) +
                             " duplicial data, both directions round-tripped; " + num(failures) + " failures" +
                             (first.empty() ? "" : " (" + first + ")")};
}

// ---------------------------------------------------------------------------

// Monotone unital associative tensors on a chain of n elements.
std::vector<StrictMonCat> chain_fixtures(int n) {
  std::vector<StrictMonCat> out;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  const int cells = n * n;
  std::vector<int> idx(cells, 0);
  for (int unit = 0; unit < n; ++unit) {
    long total = 1;
    for (int i = 0; i < cells; ++i) total *= n;
    for (long code = 0; code < total; ++code) {
      long c = code;
      for (int i = 0; i < cells; ++i) {
        t[i / n][i % n] = static_cast<int>(c % n);
        c /= n;
      }
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) ok = t[unit][a] == a && t[a][unit] == a;
      for (int a = 0; a < n && ok; ++a) {
        for (int b = 0; b + 1 < n && ok; ++b) ok = t[a][b] <= t[a][b + 1] && t[b][a] <= t[b + 1][a];
      }
      for (int a = 0; a < n && ok; ++a) {
        for (int b = 0; b < n && ok; ++b) {
          for (int e = 0; e < n && ok; ++e) ok = t[t[a][b]][e] == t[a][t[b][e]];
        }
      }
      if (ok) {
        auto tt = t;
        out.push_back(chain_monoidal(n, unit, [tt](ObjId a, ObjId b) { return tt[a][b]; }));
      }
    }
  }
  return out;
}

Outcome monoidal_implications() {
  long fixtures = 0, pairs = 0, groups = 0, failures = 0;
  std::string first;
  auto note = [&](bool ok, const std::string& w) {
    if (!ok && !failures++) first = w;
  };
  std::vector<std::pair<StrictMonCat, bool>> all;
  for (const auto& t : monoid_fixtures()) all.push_back({discrete_monoidal(t), is_group(t)});
  for (int n = 2; n <= 3; ++n) {
    for (auto& m : chain_fixtures(n)) all.push_back({std::move(m), false});
  }
  for (const auto& [m, group] : all) {
    if (!check_strict_monoidal(m)) {
      note(false, "fixture is not strict monoidal");
      continue;
    }
    ++fixtures;
    groups += group;
    for (ObjId d = 0; d < m.base->num_objects(); ++d) {
      ++pairs;
      auto r = check_monoidal_duplicial(m, d);
      const std::string tag = "fixture " + num(fixtures) + ", d=" + num(d);
      note(static_cast<bool>(r.implications), tag + ": " + r.implications.describe());
      note(!r.star_autonomous || r.duplicial, tag + ": star-autonomous but not duplicial");
      note(!r.paracyclic || r.star_autonomous, tag + ": paracyclic but not star-autonomous");
      if (group) note(r.duplicial, tag + ": group fixture not duplicial");
    }
  }
  return {failures == 0, num(fixtures) + " monoidal fixtures (" + num(groups) + " groups), " + num(pairs) +
                             " dualizing candidates; " + num(failures) + " counterexamples" +
                             (first.empty() ? "" : " (" + first + ")")};
}

// ---------------------------------------------------------------------------

Outcome cap_coincidence() {
  long pairs = 0, equal = 0, report_fail = 0;
  std::string first_report;
  for (const auto& per : coalgebra_instances()) {
    for (const auto& li : per) {
      for (const auto& l : li.lefts) {
        for (const auto& r : li.rights) {
          ++pairs;
          auto cap = bs_cap(l, single_family(r), 4);
          if (!cap.report && !report_fail++) first_report = cap.report.describe();
          equal += cap.families.front() == bs_operator(l, r, 4);
        }
      }
    }
  }
  std::string detail = num(equal) + " of " + num(pairs) + " instances table-equal to the explicit operator at N=4";
  if (report_fail) detail += "; " + num(report_fail) + " internal check failures (" + first_report + ")";
  return {equal == pairs && report_fail == 0 && pairs > 0, detail};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> expect_fail;
  std::vector<int> only;
  app.add_option("--expect-fail", expect_fail, "criteria known to fail");
  app.add_option("--only", only, "run just these criteria");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Bohm-Stefan soundness sweep", soundness_sweep},
      {"rewriting soundness", rewriting},
      {"family / decalage-map round trips", decalage_round_trips},
      {"Hochschild golden values", hochschild_golden},
      {"adjunction and UCT bijections", adjunctions},
      {"lax centre", lax_centre},
      {"nerve duplicial data vs left adjoints", nerve_adjoints},
      {"monoidal implications", monoidal_implications},
      {"cap-product coincidence", cap_coincidence},
  };
  const std::set<int> xf(expect_fail.begin(), expect_fail.end());
  const std::set<int> run(only.begin(), only.end());
  int bad = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    if (!run.empty() && !run.count(k)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool expected = xf.count(k) > 0;
    const char* tag = o.pass ? (expected ? "XPASS" : "PASS") : (expected ? "XFAIL" : "FAIL");
    if (o.pass == expected) ++bad;
    std::printf("%-5s criterion %d  %s: %s [%.1fs]\n", tag, k, criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return bad == 0 ? 0 : 1;
}
