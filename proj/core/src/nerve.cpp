#include "duplex/nerve.hpp"

#include <functional>
#include <string>

namespace duplex {

namespace {

std::string mname(const FinCategory& c, MorId f) { return c.morphism_name(f); }

}  // namespace

// ---------------------------------------------------------------------------
// Nerve

int Nerve::find(int n, const std::vector<int>& simplex) const {
  auto it = index.at(n).find(simplex);
  if (it == index.at(n).end()) throw Error(ErrorKind::ShapeMismatch, "not a simplex of the nerve");
  return it->second;
}

std::vector<ObjId> Nerve::vertices(int n, int s) const {
  const auto& ch = simplices.at(n).at(s);
  if (n == 0) return {ch[0]};
  std::vector<ObjId> v{cat->src(ch[0])};
  for (MorId f : ch) v.push_back(cat->tgt(f));
  return v;
}

Nerve nerve(const CatPtr& c, int trunc) {
  const auto& C = *c;
  Nerve out;
  out.cat = c;
  out.simplices.resize(trunc + 1);
  out.index.resize(trunc + 1);
  for (ObjId x = 0; x < C.num_objects(); ++x) out.simplices[0].push_back({x});
  if (trunc >= 1) {
    for (MorId f = 0; f < C.num_morphisms(); ++f) out.simplices[1].push_back({f});
  }
  for (int n = 2; n <= trunc; ++n) {
    for (const auto& ch : out.simplices[n - 1]) {
      for (MorId g = 0; g < C.num_morphisms(); ++g) {
        if (C.src(g) != C.tgt(ch.back())) continue;
        auto next = ch;
        next.push_back(g);
        out.simplices[n].push_back(std::move(next));
      }
    }
  }
  for (int n = 0; n <= trunc; ++n) {
    for (int s = 0; s < static_cast<int>(out.simplices[n].size()); ++s) out.index[n][out.simplices[n][s]] = s;
  }
  auto face_of = [&](int n, int i, const std::vector<int>& ch) -> std::vector<int> {
    if (n == 1) return {i == 0 ? C.tgt(ch[0]) : C.src(ch[0])};
    std::vector<int> r;
    for (int k = 0; k < n; ++k) {
      if (i == 0 && k == 0) continue;
      if (i == n && k == n - 1) continue;
      if (i > 0 && i < n && k == i - 1) {
        r.push_back(C.compose(ch[i], ch[i - 1]));
        ++k;
        continue;
      }
      r.push_back(ch[k]);
    }
    return r;
  };
  auto degen_of = [&](int n, int j, const std::vector<int>& ch) -> std::vector<int> {
    if (n == 0) return {C.id(ch[0])};
    ObjId xj = j == 0 ? C.src(ch[0]) : C.tgt(ch[j - 1]);
    auto r = ch;
    r.insert(r.begin() + j, C.id(xj));
    return r;
  };
  out.sset = TruncAugSimplicial<SetTarget>::build(
      SetTarget{}, trunc, false, [&](int n) { return static_cast<int>(out.simplices[n].size()); },
      [&](int n, int i) {
        std::vector<int> m;
        for (const auto& ch : out.simplices[n]) m.push_back(out.index[n - 1].at(face_of(n, i, ch)));
        return m;
      },
      [&](int n, int j) {
        std::vector<int> m;
        for (const auto& ch : out.simplices[n]) m.push_back(out.index[n + 1].at(degen_of(n, j, ch)));
        return m;
      });
  return out;
}

Report check_dec_nerve_slices(const Nerve& nv) {
  const auto& C = *nv.cat;
  const int N = nv.sset.trunc();
  if (N < 1) throw Error(ErrorKind::TruncationTooShallow, "slice comparison needs truncation at least 1");
  // Coproduct of the slices C/x: objects are morphisms of C, a morphism
  // f -> f' is u with f' ∘ u = f.
  RawCategory raw;
  for (MorId f = 0; f < C.num_morphisms(); ++f) raw.objects.push_back(C.morphism_name(f));
  std::vector<std::array<int, 3>> arrows;  // (f, f', u)
  for (MorId f = 0; f < C.num_morphisms(); ++f) {
    for (MorId f2 = 0; f2 < C.num_morphisms(); ++f2) {
      if (C.tgt(f) != C.tgt(f2)) continue;
      for (MorId u : C.hom(C.src(f), C.src(f2))) {
        if (C.compose(f2, u) == f) arrows.push_back({f, f2, u});
      }
    }
  }
  std::map<std::array<int, 3>, int> arrow_id;
  for (int k = 0; k < static_cast<int>(arrows.size()); ++k) {
    arrow_id[arrows[k]] = k;
    raw.morphisms.push_back({arrows[k][0], arrows[k][1], ""});
  }
  for (MorId f = 0; f < C.num_morphisms(); ++f) raw.identity.push_back(arrow_id.at({f, f, C.id(C.src(f))}));
  for (const auto& a : arrows) {
    for (const auto& b : arrows) {
      if (b[0] != a[1]) continue;
      raw.comp.push_back({arrow_id.at(b), arrow_id.at(a), arrow_id.at({a[0], b[1], C.compose(b[2], a[2])})});
    }
  }
  auto slices = share(FinCategory::from_raw(raw));
  Nerve sn = nerve(slices, N - 1);
  auto D = decalage(nv.sset, Side::Right);
  // Slice chain (m_1..m_n) ending at object f ↦ C-chain (u_1, ..., u_n, f).
  auto to_c = [&](int n, int s) {
    const auto& ch = sn.simplices[n][s];
    if (n == 0) return nv.find(1, {ch[0]});
    std::vector<int> c;
    for (int m : ch) c.push_back(arrows[m][2]);
    c.push_back(arrows[ch.back()][1]);
    return nv.find(n + 1, c);
  };
  for (int n = 0; n <= N - 1; ++n) {
    if (sn.sset.level(n) != D.level(n)) return Report::fail("SliceLevelSize", "n=" + std::to_string(n));
    std::vector<int> phi(sn.sset.level(n));
    std::vector<bool> hit(D.level(n), false);
    for (int s = 0; s < sn.sset.level(n); ++s) {
      phi[s] = to_c(n, s);
      if (hit[phi[s]]) return Report::fail("SliceNotBijective", "n=" + std::to_string(n));
      hit[phi[s]] = true;
    }
    for (int i = 0; i < sn.sset.num_faces(n); ++i) {
      for (int s = 0; s < sn.sset.level(n); ++s) {
        if (to_c(n - 1, sn.sset.face(n, i)[s]) != D.face(n, i)[phi[s]]) {
          return Report::fail("SliceFace", "d_" + std::to_string(i) + " at n=" + std::to_string(n));
        }
      }
    }
    for (int j = 0; j < sn.sset.num_degens(n); ++j) {
      for (int s = 0; s < sn.sset.level(n); ++s) {
        if (to_c(n + 1, sn.sset.degen(n, j)[s]) != D.degen(n, j)[phi[s]]) {
          return Report::fail("SliceDegeneracy", "s_" + std::to_string(j) + " at n=" + std::to_string(n));
        }
      }
    }
  }
  return Report::pass();
}

// ---------------------------------------------------------------------------
// Duplicial data on nerves

Report check_nerve_conditions(const FinCategory& c, const NerveDuplicialData& d) {
  if (static_cast<int>(d.t_obj.size()) != c.num_objects() || static_cast<int>(d.t_mor.size()) != c.num_morphisms()) {
    return Report::fail("TShape", "table sizes");
  }
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    if (d.t_obj[x] < 0 || d.t_obj[x] >= c.num_objects()) return Report::fail("TShape", c.object_name(x));
  }
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    MorId tf = d.t_mor[f];
    if (tf < 0 || tf >= c.num_morphisms() || c.src(tf) != d.t_obj[c.tgt(f)] || c.tgt(tf) != c.src(f)) {
      return Report::fail("TShape", mname(c, f));
    }
  }
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    if (d.t_mor[d.t_mor[c.id(x)]] != c.id(d.t_obj[x])) return Report::fail("IdentityCondition", c.object_name(x));
  }
  for (MorId g = 0; g < c.num_morphisms(); ++g) {
    for (MorId f = 0; f < c.num_morphisms(); ++f) {
      if (c.src(f) != c.tgt(g)) continue;
      if (c.compose(g, d.t_mor[c.compose(f, g)]) != d.t_mor[f]) {
        return Report::fail("FunctorialityCondition", "(" + mname(c, f) + ", " + mname(c, g) + ")");
      }
    }
  }
  return Report::pass();
}

DuplicialFamily<SetTarget> nerve_family(const Nerve& nv, const NerveDuplicialData& d) {
  const auto& C = *nv.cat;
  DuplicialFamily<SetTarget> F{nv.sset, {}};
  const int N = nv.sset.trunc();
  for (int n = 0; n <= N; ++n) {
    std::vector<int> m;
    for (const auto& ch : nv.simplices[n]) {
      if (n == 0) {
        m.push_back(nv.find(0, {d.t_obj[ch[0]]}));
        continue;
      }
      MorId composite = ch[0];
      for (int k = 1; k < n; ++k) composite = C.compose(ch[k], composite);
      std::vector<int> next{d.t_mor[composite]};
      next.insert(next.end(), ch.begin(), ch.end() - 1);
      m.push_back(nv.find(n, next));
    }
    F.t.push_back(std::move(m));
  }
  return F;
}

NerveDataVerdict check_nerve_data(const CatPtr& c, const NerveDuplicialData& d, int trunc) {
  NerveDataVerdict v;
  v.conditions = check_nerve_conditions(*c, d);
  if (!v.conditions && v.conditions.rule == "TShape") return v;
  Nerve nv = nerve(c, trunc);
  v.classification = classify_duplicial(nerve_family(nv, d));
  v.routes_agree = v.conditions.ok == (v.classification->kind != DuplicialKind::Invalid);
  return v;
}

std::vector<NerveDuplicialData> enumerate_nerve_data(const FinCategory& c, Budget& budget) {
  const int no = c.num_objects();
  const int nm = c.num_morphisms();
  // Functoriality instances keyed by the largest morphism id involved.
  std::vector<std::vector<std::array<MorId, 3>>> checks(nm);
  for (MorId g = 0; g < nm; ++g) {
    for (MorId f = 0; f < nm; ++f) {
      if (c.src(f) != c.tgt(g)) continue;
      MorId fg = c.compose(f, g);
      checks[std::max({g, f, fg})].push_back({g, f, fg});
    }
  }
  NerveDuplicialData d{std::vector<ObjId>(no, 0), std::vector<MorId>(nm, 0)};
  std::vector<NerveDuplicialData> out;
  std::function<void(int)> assign_mor = [&](int k) {
    if (k == nm) {
      budget.charge();
      if (check_nerve_conditions(c, d)) out.push_back(d);
      return;
    }
    for (MorId cand : c.hom(d.t_obj[c.tgt(k)], c.src(k))) {
      budget.charge();
      d.t_mor[k] = cand;
      bool ok = true;
      for (const auto& [g, f, fg] : checks[k]) {
        if (c.compose(g, d.t_mor[fg]) != d.t_mor[f]) {
          ok = false;
          break;
        }
      }
      if (ok) assign_mor(k + 1);
    }
  };
  std::function<void(int)> assign_obj = [&](int x) {
    if (x == no) {
      assign_mor(0);
      return;
    }
    for (ObjId y = 0; y < no; ++y) {
      budget.charge();
      d.t_obj[x] = y;
      assign_obj(x + 1);
    }
  };
  assign_obj(0);
  return out;
}

NerveDuplicialData canonical_groupoid(const FinCategory& g) {
  NerveDuplicialData d;
  for (ObjId x = 0; x < g.num_objects(); ++x) d.t_obj.push_back(x);
  for (MorId f = 0; f < g.num_morphisms(); ++f) {
    auto inv = g.inverse(f);
    if (!inv) throw Error(ErrorKind::NotGroupoid, "morphism " + g.morphism_name(f) + " is not invertible");
    d.t_mor.push_back(*inv);
  }
  return d;
}

NerveDuplicialData adjoint_to_duplicial(const Pi1& pi, const Adjunction& adj) {
  if (!(adj.right == pi.p)) throw Error(ErrorKind::AdjunctionInvalid, "right adjoint must be the localization functor");
  if (auto r = check_adjunction(adj); !r) throw Error(ErrorKind::AdjunctionInvalid, r.describe());
  const auto& C = *pi.source;
  const auto& G = *pi.groupoid;
  NerveDuplicialData d;
  for (ObjId x = 0; x < C.num_objects(); ++x) d.t_obj.push_back(adj.left.obj(x));
  for (MorId f = 0; f < C.num_morphisms(); ++f) {
    MorId back = *G.inverse(pi.p.mor(f));
    d.t_mor.push_back(C.compose(adj.counit.at(C.src(f)), adj.left.mor(back)));
  }
  return d;
}

Adjunction duplicial_to_adjoint(const Pi1& pi, const NerveDuplicialData& d) {
  const auto& C = *pi.source;
  const auto& Pg = *pi.groupoid;
  if (auto r = check_nerve_conditions(C, d); !r) throw Error(ErrorKind::ConditionsFail, r.describe());
  const FinFunctor one = identity_functor(pi.source);
  std::vector<MorId> tt(C.num_morphisms());
  for (MorId f = 0; f < C.num_morphisms(); ++f) tt[f] = d.t_mor[d.t_mor[f]];
  FinFunctor G(pi.source, pi.source, d.t_obj, tt);
  if (auto r = check_functor(G); !r) throw Error(ErrorKind::VerificationFailed, "t squared is not a functor: " + r.describe());
  std::vector<MorId> eps(C.num_objects());
  for (ObjId x = 0; x < C.num_objects(); ++x) eps[x] = d.t_mor[C.id(x)];
  NatTrans counit(G, one, eps);
  if (auto r = check_nat_trans(counit); !r) throw Error(ErrorKind::VerificationFailed, "counit: " + r.describe());
  for (ObjId x = 0; x < C.num_objects(); ++x) {
    if (G.mor(eps[x]) != eps[G.obj(x)]) throw Error(ErrorKind::VerificationFailed, "not well copointed at " + C.object_name(x));
  }
  for (MorId f = 0; f < C.num_morphisms(); ++f) {
    auto inv = C.inverse(tt[f]);
    MorId stated = d.t_mor[C.compose(f, eps[C.src(f)])];
    if (!inv || *inv != stated) throw Error(ErrorKind::InversionFails, "t^2 of " + mname(C, f));
  }
  FinFunctor i = induce_from_pi1(pi, G);
  std::vector<MorId> eta(C.num_objects());
  for (ObjId x = 0; x < C.num_objects(); ++x) eta[x] = *Pg.inverse(pi.p.mor(eps[x]));
  Adjunction adj{i, pi.p, NatTrans(identity_functor(pi.groupoid), compose(pi.p, i), eta),
                 NatTrans(compose(i, pi.p), one, eps)};
  if (auto r = check_adjunction(adj); !r) throw Error(ErrorKind::VerificationFailed, "adjunction: " + r.describe());
  return adj;
}

std::vector<Adjunction> enumerate_left_adjoints(const Pi1& pi, Budget& budget) {
  std::vector<Adjunction> out;
  const FinFunctor oneC = identity_functor(pi.source);
  const FinFunctor oneP = identity_functor(pi.groupoid);
  for (const auto& i : enumerate_functors(pi.groupoid, pi.source, budget)) {
    auto ip = compose(i, pi.p);
    auto pi_ = compose(pi.p, i);
    auto counits = enumerate_nat_trans(ip, oneC, budget);
    if (counits.empty()) continue;
    auto units = enumerate_nat_trans(oneP, pi_, budget);
    for (const auto& e : counits) {
      for (const auto& u : units) {
        budget.charge();
        Adjunction a{i, pi.p, u, e};
        if (check_adjunction(a)) out.push_back(std::move(a));
      }
    }
  }
  return out;
}

NerveDuplicialData coreflection_duplicial(const Pi1& pi, const Adjunction& cr) {
  const auto& G = *cr.left.dom();
  if (!G.is_groupoid()) throw Error(ErrorKind::NotGroupoid, "coreflecting subcategory must be a groupoid");
  if (!same_category(cr.left.cod(), pi.source)) throw Error(ErrorKind::ShapeMismatch, "coreflection into another category");
  if (auto r = check_adjunction(cr); !r) throw Error(ErrorKind::AdjunctionInvalid, r.describe());
  const auto& C = *pi.source;
  FinFunctor q = induce_from_pi1(pi, cr.right);
  FinFunctor left = compose(cr.left, q);
  std::vector<MorId> eta(C.num_objects());
  for (ObjId x = 0; x < C.num_objects(); ++x) eta[x] = *pi.groupoid->inverse(pi.p.mor(cr.counit.at(x)));
  Adjunction adj{left, pi.p, NatTrans(identity_functor(pi.groupoid), compose(pi.p, left), eta),
                 NatTrans(compose(left, pi.p), identity_functor(pi.source), cr.counit.components())};
  if (auto r = check_adjunction(adj); !r) throw Error(ErrorKind::AdjunctionInvalid, "induced adjunction: " + r.describe());
  return adjoint_to_duplicial(pi, adj);
}

int count_natural_automorphisms(const CatPtr& c, Budget& budget) {
  auto one = identity_functor(c);
  int count = 0;
  for (const auto& a : enumerate_nat_trans(one, one, budget)) {
    bool iso = true;
    for (MorId m : a.components()) iso = iso && c->is_iso(m);
    count += iso;
  }
  return count;
}

CategoryStructures classify_category_structures(const CatPtr& c, int trunc, Budget& budget) {
  CategoryStructures s;
  s.trunc = trunc;
  s.is_groupoid = c->is_groupoid();
  Nerve nv = nerve(c, trunc);
  for (const auto& d : enumerate_nerve_data(*c, budget)) {
    ++s.data_count;
    auto cls = classify_duplicial(nerve_family(nv, d));
    if (cls.kind == DuplicialKind::Invalid) {
      s.report = Report::fail("RoutesDisagree", "valid data classified invalid: " + cls.report.describe());
      return s;
    }
    if (cls.kind == DuplicialKind::Paracyclic || cls.kind == DuplicialKind::Cyclic) ++s.paracyclic_count;
    if (cls.kind == DuplicialKind::Cyclic) ++s.cyclic_count;
  }
  if (s.paracyclic_count > 0 && !s.is_groupoid) {
    s.report = Report::fail("ParacyclicNonGroupoid", "paracyclic structure on a non-groupoid");
    return s;
  }
  if (s.is_groupoid) {
    s.natural_automorphisms = count_natural_automorphisms(c, budget);
    if (s.natural_automorphisms != s.cyclic_count) {
      s.report = Report::fail("CyclicCountMismatch", std::to_string(s.cyclic_count) + " cyclic structures vs " +
                                                         std::to_string(s.natural_automorphisms) + " automorphisms");
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// Monoidal categories

std::optional<InternalHom> find_internal_hom(const StrictMonCat& m, ObjId x, ObjId d) {
  const auto& C = *m.base;
  if (x == m.unit) return InternalHom{d, C.id(d)};
  for (ObjId h = 0; h < C.num_objects(); ++h) {
    for (MorId e : C.hom(m.obj(x, h), d)) {
      bool universal = true;
      for (ObjId y = 0; y < C.num_objects() && universal; ++y) {
        auto target = C.hom(m.obj(x, y), d);
        auto source = C.hom(y, h);
        if (source.size() != target.size()) {
          universal = false;
          break;
        }
        std::vector<bool> hit(C.num_morphisms(), false);
        for (MorId k : source) {
          MorId img = C.compose(e, m.mor(C.id(x), k));
          if (hit[img]) {
            universal = false;
            break;
          }
          hit[img] = true;
        }
      }
      if (universal) return InternalHom{h, e};
    }
  }
  return std::nullopt;
}

InternalHom internal_hom(const StrictMonCat& m, ObjId x, ObjId d) {
  auto h = find_internal_hom(m, x, d);
  if (!h) throw Error(ErrorKind::NoHom, "no internal hom [" + m.base->object_name(x) + "," + m.base->object_name(d) + "]");
  return *h;
}

namespace {

// The unique k: [x',d] -> [x,d] with e_x ∘ (x ⊗ k) = e_{x'} ∘ (u ⊗ [x',d]).
MorId hom_on_morphism(const StrictMonCat& m, const std::vector<InternalHom>& homs, MorId u) {
  const auto& C = *m.base;
  ObjId x = C.src(u);
  ObjId x2 = C.tgt(u);
  MorId rhs = C.compose(homs[x2].counit, m.mor(u, C.id(homs[x2].hom)));
  for (MorId k : C.hom(homs[x2].hom, homs[x].hom)) {
    if (C.compose(homs[x].counit, m.mor(C.id(x), k)) == rhs) return k;
  }
  throw Error(ErrorKind::VerificationFailed, "internal hom is not functorial");
}

}  // namespace

MonoidalDuplicialReport check_monoidal_duplicial(const StrictMonCat& m, ObjId d) {
  const auto& C = *m.base;
  MonoidalDuplicialReport rep;
  std::vector<InternalHom> homs;
  for (ObjId x = 0; x < C.num_objects(); ++x) {
    auto h = find_internal_hom(m, x, d);
    if (!h) {
      rep.reason = "missing [" + C.object_name(x) + "," + C.object_name(d) + "]";
      rep.implications = Report::pass();
      return rep;
    }
    homs.push_back(*h);
  }
  // Unit-induced i -> [d,d]: transpose of id_d.
  std::optional<MorId> k;
  for (MorId cand : C.hom(m.unit, homs[d].hom)) {
    if (C.compose(homs[d].counit, m.mor(C.id(d), cand)) == C.id(d)) k = cand;
  }
  rep.duplicial = k && C.is_iso(*k);
  if (!rep.duplicial) rep.reason = "unit-induced map i -> [d,d] is not invertible";

  std::vector<MorId> on_mor(C.num_morphisms());
  for (MorId u = 0; u < C.num_morphisms(); ++u) on_mor[u] = hom_on_morphism(m, homs, u);
  bool faithful_full = true;
  for (ObjId x = 0; x < C.num_objects() && faithful_full; ++x) {
    for (ObjId x2 = 0; x2 < C.num_objects() && faithful_full; ++x2) {
      auto src = C.hom(x, x2);
      auto tgt = C.hom(homs[x2].hom, homs[x].hom);
      if (src.size() != tgt.size()) {
        faithful_full = false;
        break;
      }
      std::vector<bool> hit(C.num_morphisms(), false);
      for (MorId u : src) {
        if (hit[on_mor[u]]) faithful_full = false;
        hit[on_mor[u]] = true;
      }
    }
  }
  bool ess_surj = true;
  for (ObjId z = 0; z < C.num_objects(); ++z) {
    bool found = false;
    for (ObjId x = 0; x < C.num_objects() && !found; ++x) {
      for (MorId f : C.hom(z, homs[x].hom)) found = found || C.is_iso(f);
    }
    ess_surj = ess_surj && found;
  }
  rep.star_autonomous = faithful_full && ess_surj;
  std::vector<bool> obj_hit(C.num_objects(), false), mor_hit(C.num_morphisms(), false);
  bool bijective = true;
  for (ObjId x = 0; x < C.num_objects(); ++x) {
    bijective = bijective && !obj_hit[homs[x].hom];
    obj_hit[homs[x].hom] = true;
  }
  for (MorId u = 0; u < C.num_morphisms(); ++u) {
    bijective = bijective && !mor_hit[on_mor[u]];
    mor_hit[on_mor[u]] = true;
  }
  rep.paracyclic = bijective;
  if (rep.star_autonomous && !rep.duplicial) {
    rep.implications = Report::fail("StarNotDuplicial", "d=" + C.object_name(d));
  } else if (rep.paracyclic && !rep.star_autonomous) {
    rep.implications = Report::fail("ParacyclicNotStar", "d=" + C.object_name(d));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Strict 2-categories

Strict2Cat one_object_2cat(const StrictMonCat& m) {
  const auto& C = *m.base;
  Strict2Cat b;
  b.objects = 1;
  b.cells1.assign(C.num_objects(), {0, 0});
  b.id1 = {m.unit};
  b.vertical = C;
  const int n1 = C.num_objects();
  const int n2 = C.num_morphisms();
  b.hc1.resize(static_cast<std::size_t>(n1) * n1);
  for (int g = 0; g < n1; ++g) {
    for (int f = 0; f < n1; ++f) b.hc1[g * n1 + f] = m.obj(g, f);
  }
  b.hc2.resize(static_cast<std::size_t>(n2) * n2);
  for (int be = 0; be < n2; ++be) {
    for (int al = 0; al < n2; ++al) b.hc2[be * n2 + al] = m.mor(be, al);
  }
  return b;
}

Strict2Cat locally_discrete_2cat(const FinCategory& c) {
  Strict2Cat b;
  b.objects = c.num_objects();
  const int n = c.num_morphisms();
  for (MorId f = 0; f < n; ++f) b.cells1.push_back({c.src(f), c.tgt(f)});
  for (ObjId x = 0; x < c.num_objects(); ++x) b.id1.push_back(c.id(x));
  CategoryBuilder vb;
  for (MorId f = 0; f < n; ++f) vb.add_object(c.morphism_name(f));
  b.vertical = vb.finish();
  b.hc1.assign(static_cast<std::size_t>(n) * n, -1);
  for (MorId g = 0; g < n; ++g) {
    for (MorId f = 0; f < n; ++f) b.hc1[g * n + f] = c.comp_or_undefined(g, f);
  }
  b.hc2 = b.hc1;
  return b;
}

Report check_strict_2cat(const Strict2Cat& b) {
  const auto& V = b.vertical;
  const int n1 = b.num1();
  const int n2 = V.num_morphisms();
  if (V.num_objects() != n1) return Report::fail("Shape", "vertical category objects must be the 1-cells");
  for (int g = 0; g < n1; ++g) {
    for (int f = 0; f < n1; ++f) {
      bool composable = b.cells1[f].second == b.cells1[g].first;
      int gf = b.comp1(g, f);
      if (composable != (gf >= 0)) return Report::fail("Composite1", std::to_string(g) + "," + std::to_string(f));
      if (gf >= 0 && (b.cells1[gf].first != b.cells1[f].first || b.cells1[gf].second != b.cells1[g].second)) {
        return Report::fail("Composite1", std::to_string(g) + "," + std::to_string(f));
      }
    }
  }
  for (int f = 0; f < n1; ++f) {
    if (b.comp1(b.id1[b.cells1[f].second], f) != f || b.comp1(f, b.id1[b.cells1[f].first]) != f) {
      return Report::fail("Identity1", std::to_string(f));
    }
    for (int g = 0; g < n1; ++g) {
      int gf = b.comp1(g, f);
      if (gf < 0) continue;
      for (int h = 0; h < n1; ++h) {
        int hg = b.comp1(h, g);
        if (hg < 0) continue;
        if (b.comp1(h, gf) != b.comp1(hg, f)) return Report::fail("Associativity1", std::to_string(f));
      }
    }
  }
  for (int be = 0; be < n2; ++be) {
    for (int al = 0; al < n2; ++al) {
      int ba = b.comp2(be, al);
      int g = V.src(be), f = V.src(al);
      if ((b.comp1(g, f) >= 0) != (ba >= 0)) return Report::fail("Composite2", std::to_string(be) + "," + std::to_string(al));
      if (ba < 0) continue;
      if (V.src(ba) != b.comp1(V.src(be), V.src(al)) || V.tgt(ba) != b.comp1(V.tgt(be), V.tgt(al))) {
        return Report::fail("Composite2", std::to_string(be) + "," + std::to_string(al));
      }
    }
  }
  for (int be2 = 0; be2 < n2; ++be2) {
    for (int be = 0; be < n2; ++be) {
      if (V.src(be2) != V.tgt(be)) continue;
      for (int al2 = 0; al2 < n2; ++al2) {
        for (int al = 0; al < n2; ++al) {
          if (V.src(al2) != V.tgt(al) || b.comp2(be, al) < 0) continue;
          int lhs = b.comp2(V.compose(be2, be), V.compose(al2, al));
          int rhs = V.compose(b.comp2(be2, al2), b.comp2(be, al));
          if (lhs != rhs) return Report::fail("Interchange", std::to_string(be) + "," + std::to_string(al));
        }
      }
    }
  }
  return Report::pass();
}

Report check_2cat_duplicial(const Strict2Cat& b, const TwoCatDuplicialData& d) {
  const auto& V = b.vertical;
  const int n1 = b.num1();
  auto tgt1 = [&](int f) { return b.cells1[f].second; };
  auto src1 = [&](int f) { return b.cells1[f].first; };
  if (static_cast<int>(d.t_obj.size()) != b.objects || static_cast<int>(d.eps_obj.size()) != b.objects ||
      static_cast<int>(d.t_mor.size()) != n1 || static_cast<int>(d.eps_mor.size()) != n1) {
    return Report::fail("ConditionsFail", "table sizes");
  }
  for (int x = 0; x < b.objects; ++x) {
    int e = d.eps_obj[x];
    if (e < 0 || src1(e) != d.t_obj[x] || tgt1(e) != x) return Report::fail("ConditionsFail", "epsilon shape at x=" + std::to_string(x));
  }
  for (int f = 0; f < n1; ++f) {
    int tf = d.t_mor[f];
    int x = tgt1(f);
    if (tf < 0 || src1(tf) != d.t_obj[x] || tgt1(tf) != src1(f)) return Report::fail("ConditionsFail", "t shape at f=" + std::to_string(f));
    int em = d.eps_mor[f];
    if (em < 0 || V.src(em) != b.comp1(f, tf) || V.tgt(em) != d.eps_obj[x]) {
      return Report::fail("ConditionsFail", "epsilon 2-cell shape at f=" + std::to_string(f));
    }
  }
  for (int x = 0; x < b.objects; ++x) {
    int t1 = d.t_mor[b.id1[x]];
    if (t1 != d.eps_obj[x]) return Report::fail("ConditionC", "x=" + std::to_string(x));
    if (d.t_mor[t1] != b.id1[d.t_obj[x]]) return Report::fail("ConditionD", "x=" + std::to_string(x));
    if (d.eps_mor[t1] != V.id(d.eps_obj[x])) return Report::fail("ConditionE", "x=" + std::to_string(x));
  }
  for (int f = 0; f < n1; ++f) {
    int x = tgt1(f);
    int a = src1(f);
    for (int k = 0; k < n1; ++k) {
      if (src1(k) != d.t_obj[x] || tgt1(k) != a) continue;
      for (MorId beta : V.hom(b.comp1(f, k), d.eps_obj[x])) {
        int factorizations = 0;
        for (MorId bar : V.hom(k, d.t_mor[f])) {
          if (V.compose(d.eps_mor[f], b.comp2(V.id(f), bar)) == beta) ++factorizations;
        }
        if (factorizations != 1) {
          return Report::fail("LiftingNotUniversal", "(f=" + std::to_string(f) + ", k=" + std::to_string(k) +
                                                         ", beta=" + std::to_string(beta) + ")");
        }
      }
    }
  }
  return Report::pass();
}

std::optional<TwoCatDuplicialData> monoidal_2cat_data(const StrictMonCat& m, ObjId d) {
  const auto& C = *m.base;
  auto rep = check_monoidal_duplicial(m, d);
  if (!rep.duplicial) return std::nullopt;
  TwoCatDuplicialData data;
  data.t_obj = {0};
  data.eps_obj = {d};
  for (ObjId x = 0; x < C.num_objects(); ++x) {
    auto h = internal_hom(m, x, d);
    if (x == d) {
      // Re-choose [d,d] := i, transporting the counit along i -> [d,d].
      MorId k = kUndefined;
      for (MorId cand : C.hom(m.unit, h.hom)) {
        if (C.compose(h.counit, m.mor(C.id(d), cand)) == C.id(d)) k = cand;
      }
      h = InternalHom{m.unit, C.compose(h.counit, m.mor(C.id(d), k))};
    }
    data.t_mor.push_back(h.hom);
    data.eps_mor.push_back(h.counit);
  }
  return data;
}

TwoCatDuplicialData nerve_2cat_data(const FinCategory& c, const NerveDuplicialData& d) {
  TwoCatDuplicialData data;
  data.t_obj = d.t_obj;
  for (ObjId x = 0; x < c.num_objects(); ++x) data.eps_obj.push_back(d.t_mor[c.id(x)]);
  data.t_mor = d.t_mor;
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    MorId ftf = c.comp_or_undefined(f, d.t_mor[f]);
    data.eps_mor.push_back(ftf == data.eps_obj[c.tgt(f)] ? ftf : -1);
  }
  return data;
}

}  // namespace duplex
