#include <doctest.h>

#include <random>
#include <set>

#include "duplex/hochschild.hpp"

using namespace duplex;

namespace {

// Bareiss fraction-free determinant.
Int det(IntMatrix m) {
  const int n = m.rows;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m.at(k, k) == 0) {
      int r = k + 1;
      while (r < n && m.at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::vector<Int> nontrivial(const std::vector<Int>& fs) {
  std::vector<Int> out;
  for (Int d : fs) {
    if (d != 1) out.push_back(d);
  }
  return out;
}

// G ⊗ H presented by all |G||H| pairs and every bilinearity relation.
std::vector<Int> naive_tensor(const AbGroup& g, const AbGroup& h) {
  const auto ge = g.elements(), he = h.elements();
  const int ng = static_cast<int>(ge.size()), nh = static_cast<int>(he.size());
  auto add_g = [&](int x, int y) {
    std::vector<Int> s(g.rank());
    for (int i = 0; i < g.rank(); ++i) s[i] = ge[x][i] + ge[y][i];
    return static_cast<int>(g.index_of(g.reduce(s)));
  };
  auto add_h = [&](int x, int y) {
    std::vector<Int> s(h.rank());
    for (int i = 0; i < h.rank(); ++i) s[i] = he[x][i] + he[y][i];
    return static_cast<int>(h.index_of(h.reduce(s)));
  };
  std::vector<std::vector<Int>> rows;
  auto gen = [&](int x, int y) { return x * nh + y; };
  for (int x = 0; x < ng; ++x) {
    for (int x2 = 0; x2 < ng; ++x2) {
      for (int y = 0; y < nh; ++y) {
        std::vector<Int> r(ng * nh, 0);
        r[gen(add_g(x, x2), y)] += 1;
        r[gen(x, y)] -= 1;
        r[gen(x2, y)] -= 1;
        rows.push_back(r);
      }
    }
    for (int y = 0; y < nh; ++y) {
      for (int y2 = 0; y2 < nh; ++y2) {
        std::vector<Int> r(ng * nh, 0);
        r[gen(x, add_h(y, y2))] += 1;
        r[gen(x, y)] -= 1;
        r[gen(x, y2)] -= 1;
        rows.push_back(r);
      }
    }
  }
  auto s = smith_normal_form(IntMatrix::from_rows(rows, ng * nh));
  return nontrivial(s.invariant_factors());
}

std::shared_ptr<const FinRing> ring(FinRing r) { return std::make_shared<const FinRing>(std::move(r)); }

std::vector<HochschildData> fixtures() {
  std::vector<HochschildData> out;
  for (int n : {2, 3, 4, 6}) out.push_back(prepare(regular_bimodule(ring(zmod_ring(n)))));
  out.push_back(prepare(regular_bimodule(ring(matrix_ring_f2()))));
  out.push_back(prepare(regular_bimodule(ring(upper_triangular_f2()))));
  out.push_back(prepare(regular_bimodule(ring(dual_numbers_f2()))));
  auto z4 = ring(zmod_ring(4));
  auto z2 = ring(zmod_ring(2));
  out.push_back(prepare(restrict_bimodule(z4, {0, 1, 0, 1}, regular_bimodule(z2))));
  out.push_back(prepare(zero_bimodule(ring(matrix_ring_f2()))));
  return out;
}

}  // namespace

TEST_CASE("smith normal form") {
  auto zero = smith_normal_form(IntMatrix(2, 3));
  CHECK(zero.invariant_factors() == std::vector<Int>{0, 0, 0});
  CHECK(smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 4}}, 2)).invariant_factors() == std::vector<Int>{2, 4});
  const auto M = IntMatrix::from_rows({{2, 0}, {0, 3}}, 2);
  auto s = smith_normal_form(M);
  CHECK(s.invariant_factors() == std::vector<Int>{1, 6});
  CHECK(multiply(multiply(s.U, M), s.V) == s.D);

  std::mt19937 rng(0);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
    IntMatrix m(r, c);
    for (auto& v : m.a) v = static_cast<Int>(rng() % 13) - 6;
    auto res = smith_normal_form(m);
    CHECK(multiply(multiply(res.U, m), res.V) == res.D);
    CHECK(multiply(res.V, res.V_inv) == IntMatrix::identity(c));
    CHECK(std::abs(det(res.U)) == 1);
    CHECK(std::abs(det(res.V)) == 1);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) {
        if (i != j) CHECK(res.D.at(i, j) == 0);
      }
    }
    auto f = res.invariant_factors();
    for (std::size_t i = 0; i + 1 < std::min<std::size_t>(f.size(), r); ++i) {
      CHECK(f[i] >= 0);
      if (f[i] != 0) CHECK(f[i + 1] % f[i] == 0);
      if (f[i] == 0) CHECK(f[i + 1] == 0);
    }
  }
}

TEST_CASE("structural tensor agrees with the bilinear presentation") {
  const std::vector<AbGroup> groups{{{2}}, {{3}}, {{4}}, {{2, 2}}, {{6}}, {{2, 4}}, {}};
  for (const auto& g : groups) {
    for (const auto& h : groups) {
      INFO(g.describe(), " (x) ", h.describe());
      CHECK(tensor(g, h).form.group.factors == naive_tensor(g, h));
    }
  }
}

TEST_CASE("carrier decompositions") {
  CHECK(decompose(zmod_ring(6).additive()).group.factors == std::vector<Int>{6});
  CHECK(decompose(matrix_ring_f2().additive()).group.factors == std::vector<Int>{2, 2, 2, 2});
  CHECK(decompose(zmod_ring(1).additive()).group.factors.empty());
  auto iso = decompose(zmod_ring(12).additive());
  CHECK(iso.group.factors == std::vector<Int>{12});
  for (int x = 0; x < 12; ++x) CHECK(iso.element(iso.coords[x]) == x);
}

TEST_CASE("ring and bimodule checks") {
  for (auto r : {zmod_ring(5), matrix_ring_f2(), upper_triangular_f2(), dual_numbers_f2()}) CHECK(check_ring(r));
  auto bad = zmod_ring(4);
  bad.mul[2][3] = 1;
  CHECK_FALSE(check_ring(bad));
  for (const auto& d : fixtures()) CHECK(check_bimodule(d.module));
  // ax = x = xa is not additive in a: 0x must vanish.
  auto z2 = ring(zmod_ring(2));
  FinBimoduleAb trivial{z2, 2, z2->add, 0, {{0, 1}, {0, 1}}, {{0, 0}, {1, 1}}};
  auto r = check_bimodule(trivial);
  CHECK_FALSE(r);
  CHECK(r.rule == "LeftAdditive");
}

TEST_CASE("Hochschild complex levels and identities") {
  auto z2 = prepare(regular_bimodule(ring(zmod_ring(2))));
  auto C = hochschild_complex(z2, 2);
  CHECK(C.level(1).factors == std::vector<Int>{2});
  CHECK(C.face(1, 0) == C.face(1, 1));

  auto z4 = prepare(regular_bimodule(ring(zmod_ring(4))));
  CHECK(check_simplicial(hochschild_complex(z4, 3)));
  CHECK(check_simplicial(hochschild_cocomplex(z4, 3)));
  for (const auto& d : fixtures()) {
    INFO(d.ring.size, " ", d.module.size);
    CHECK(check_simplicial(hochschild_complex(d, 2)));
    auto rep = check_simplicial(hochschild_cocomplex(d, 2));
    INFO(rep.describe());
    CHECK(rep);
  }
  auto ut = prepare(regular_bimodule(ring(upper_triangular_f2())));
  CHECK(check_simplicial(hochschild_complex(ut, 3)));
  CHECK(check_simplicial(hochschild_cocomplex(ut, 3)));
  CHECK_THROWS_AS((void)hochschild_complex(ut, 3, 20), Error);

  // s_0(x) = 1 ⊗ x
  for (const auto& d : fixtures()) {
    auto C2 = hochschild_complex(d, 1);
    auto tg = tensor(d.ring_iso.group, d.module_iso.group);
    REQUIRE(tg.form.group == C2.level(1));
    for (int x = 0; x < d.module.size; ++x) {
      CHECK(C2.degen(0, 0).apply(d.module_iso.coords[x]) == tg.pair(d.ring_iso.coords[d.ring.one], d.module_iso.coords[x]));
    }
  }
}

TEST_CASE("zeroth homology") {
  auto z6 = prepare(regular_bimodule(ring(zmod_ring(6))));
  CHECK(zeroth_homology(z6).normal_form().group.factors == std::vector<Int>{6});
  auto dn = prepare(regular_bimodule(ring(dual_numbers_f2())));
  CHECK(zeroth_homology(dn).normal_form().group == dn.ring_iso.group);
  auto zero = prepare(zero_bimodule(ring(matrix_ring_f2())));
  CHECK(zeroth_homology(zero).normal_form().group.factors.empty());

  // M_2(F_2): commutators span a subgroup of index 2, detected by the trace.
  auto m2 = matrix_ring_f2();
  std::set<int> span{0};
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; ++b) {
      int c = m2.mul[a][b] ^ m2.mul[b][a];
      std::set<int> next = span;
      for (int s : span) next.insert(s ^ c);
      span = next;
    }
  }
  CHECK(span.size() == 8);
  auto trace = [](int x) { return ((x >> 3) ^ x) & 1; };
  for (int s : span) CHECK(trace(s) == 0);
  auto d = prepare(regular_bimodule(ring(m2)));
  CHECK(zeroth_homology(d).normal_form().group.factors == std::vector<Int>{2});

  for (const auto& f : fixtures()) {
    auto C = hochschild_complex(f, 1);
    auto a = zeroth_homology(f).normal_form();
    auto b = coequalizer(C.face(1, 0), C.face(1, 1)).normal_form();
    CHECK(a.group == b.group);
    AbHom qa(f.module_iso.group, a.group, a.proj), qb(f.module_iso.group, b.group, b.proj);
    for (const auto& x : f.module_iso.group.elements()) CHECK((qa.apply(x) == a.group.zero()) == (qb.apply(x) == b.group.zero()));
  }
}

TEST_CASE("zeroth cohomology") {
  auto z6 = prepare(regular_bimodule(ring(zmod_ring(6))));
  CHECK(zeroth_cohomology(z6).elements.size() == 6);
  auto d = prepare(regular_bimodule(ring(matrix_ring_f2())));
  auto h = zeroth_cohomology(d);
  CHECK(h.elements == std::vector<int>{0, 0b1001});
  CHECK(h.group.factors == std::vector<Int>{2});
  // symmetric action through Z/4 -> Z/2
  auto sym = prepare(restrict_bimodule(ring(zmod_ring(4)), {0, 1, 0, 1}, regular_bimodule(ring(zmod_ring(2)))));
  CHECK(zeroth_cohomology(sym).elements.size() == 2);

  for (const auto& f : fixtures()) {
    auto C = hochschild_cocomplex(f, 1);
    auto eq = equalizer(C.face(1, 0), C.face(1, 1));
    std::set<int> from_eq;
    for (const auto& x : eq) from_eq.insert(f.module_iso.element(x));
    auto h0 = zeroth_cohomology(f);
    CHECK(from_eq == std::set<int>(h0.elements.begin(), h0.elements.end()));
  }
  for (auto r : {matrix_ring_f2(), upper_triangular_f2(), dual_numbers_f2(), zmod_ring(4)}) {
    auto f = prepare(regular_bimodule(ring(r)));
    auto z = zeroth_cohomology(f).elements;
    std::set<int> zs(z.begin(), z.end());
    for (int x : z) {
      for (int y : z) CHECK(zs.count(r.mul[x][y]) == 1);
    }
  }
}

TEST_CASE("functoriality of H_0 and H^0") {
  auto z4 = ring(zmod_ring(4));
  auto z2 = ring(zmod_ring(2));
  auto X = prepare(regular_bimodule(z4));
  auto Y = prepare(restrict_bimodule(z4, {0, 1, 0, 1}, regular_bimodule(z2)));
  auto ut = ring(upper_triangular_f2());
  auto U = prepare(regular_bimodule(ut));
  auto pairs = std::vector<std::pair<const HochschildData*, const HochschildData*>>{{&X, &Y}, {&Y, &X}, {&X, &X}, {&U, &U}};
  for (auto [x, y] : pairs) {
    Budget budget;
    auto maps = enumerate_bimodule_maps(x->linear, y->linear, budget);
    CHECK_FALSE(maps.empty());
    auto hx = zeroth_homology(*x).normal_form();
    auto hy = zeroth_homology(*y).normal_form();
    AbHom qx(x->module_iso.group, hx.group, hx.proj), qy(y->module_iso.group, hy.group, hy.proj);
    auto cx = zeroth_cohomology(*x).elements;
    auto cyv = zeroth_cohomology(*y).elements;
    std::set<int> cy(cyv.begin(), cyv.end());
    for (const auto& f : maps) {
      std::vector<std::vector<Int>> images;
      for (int c = 0; c < hx.group.rank(); ++c) {
        std::vector<Int> v(x->module_iso.group.rank());
        for (int j = 0; j < x->module_iso.group.rank(); ++j) v[j] = hx.lift.at(j, c);
        images.push_back(qy.apply(f.apply(x->module_iso.group.reduce(v))));
      }
      auto induced = AbHom::from_images(hx.group, hy.group, images);
      CHECK(compose(induced, qx) == compose(qy, f));
      for (int e : cx) CHECK(cy.count(y->module_iso.element(f.apply(x->module_iso.coords[e]))) == 1);
    }
  }
}

TEST_CASE("adjunctions for H_0 and H^0") {
  auto z2 = ring(zmod_ring(2));
  auto z4 = ring(zmod_ring(4));
  Budget budget;
  AdjunctionCounts n;
  auto d = prepare(regular_bimodule(z2));
  CHECK(verify_adjunctions(d, AbGroup{{2}}, budget, &n));
  CHECK(n.bimodule_to_hom == 2);
  CHECK(n.h0_to_p == 2);
  CHECK(n.tensor_to_bimodule == 2);
  CHECK(n.p_to_h0co == 2);

  CHECK(verify_adjunctions(d, AbGroup{}, budget, &n));
  CHECK(n.bimodule_to_hom == 1);
  CHECK(n.h0_to_p == 1);
  CHECK(n.tensor_to_bimodule == 1);
  CHECK(n.p_to_h0co == 1);

  auto r = prepare(restrict_bimodule(z4, {0, 1, 0, 1}, regular_bimodule(z2)));
  CHECK(verify_adjunctions(r, AbGroup{{4}}, budget, &n));
  CHECK(n.h0_to_p == 2);
  CHECK(n.p_to_h0co == 2);

  for (const auto& f : fixtures()) {
    for (const auto& p : {AbGroup{{2}}, AbGroup{{3}}, AbGroup{{4}}}) {
      Budget b;
      INFO(f.ring.size, " ", f.module.size, " ", p.describe());
      CHECK(verify_adjunctions(f, p, b));
    }
  }
}
