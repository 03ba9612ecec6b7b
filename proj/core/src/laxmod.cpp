#include "duplex/laxmod.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <tuple>

#include "duplex/catalog.hpp"
#include "duplex/nerve.hpp"

namespace duplex {

namespace {

std::string triple(const LaxBimodule& x, ObjId a, ObjId o, ObjId b) {
  return "a=" + x.A().object_name(a) + ",x=" + x.X().object_name(o) + ",b=" + x.A().object_name(b);
}

std::string pair_w(const FinCategory& a, ObjId u, const FinCategory& x, ObjId o) {
  return "a=" + a.object_name(u) + ",x=" + x.object_name(o);
}

// Builds a category whose morphisms are keyed concretely; the key of g∘f is
// given by `comp` and must already be in the list.
template <class Key, class Comp>
CatPtr build_keyed(const std::vector<std::string>& names, const std::vector<std::tuple<int, int, Key>>& mors,
                   const std::vector<Key>& id_keys, Comp comp, std::vector<MorId>* ids) {
  CategoryBuilder b;
  for (const auto& n : names) b.add_object(n);
  std::map<std::tuple<int, int, Key>, MorId> index;
  ids->assign(mors.size(), -1);
  for (std::size_t k = 0; k < mors.size(); ++k) {
    const auto& [s, t, key] = mors[k];
    MorId m = (s == t && key == id_keys[s]) ? b.identity(s) : b.add_morphism(s, t, "m" + std::to_string(k));
    (*ids)[k] = m;
    index.emplace(mors[k], m);
  }
  for (std::size_t i = 0; i < mors.size(); ++i) {
    const auto& [s1, t1, k1] = mors[i];
    if (s1 == t1 && k1 == id_keys[s1]) continue;
    for (std::size_t j = 0; j < mors.size(); ++j) {
      const auto& [s2, t2, k2] = mors[j];
      if (s2 != t1 || (s2 == t2 && k2 == id_keys[s2])) continue;
      auto it = index.find({s1, t2, comp(k2, k1)});
      if (it == index.end()) throw Error(ErrorKind::VerificationFailed, "composite missing from a concrete category");
      b.set_comp((*ids)[j], (*ids)[i], it->second);
    }
  }
  return share(b.finish());
}

int find_functor(const FunctorCategory& fc, const std::vector<ObjId>& obj, const std::vector<MorId>& mor) {
  for (std::size_t i = 0; i < fc.objects.size(); ++i) {
    if (fc.objects[i].obj_map() == obj && fc.objects[i].mor_map() == mor) return static_cast<int>(i);
  }
  return -1;
}

MorId find_nat(const FunctorCategory& fc, int s, int t, const std::vector<MorId>& comps) {
  for (MorId m : fc.cat->hom(s, t)) {
    if (fc.morphisms[m].components() == comps) return m;
  }
  return -1;
}

// Depth-first search over slots 0..n-1 with candidate lists; `ok(k)` sees
// slots 0..k filled.
template <class Cands, class Ok, class Emit>
void backtrack(int n, std::vector<MorId>& slot, Cands cands, Ok ok, Emit emit, Budget& budget) {
  std::function<void(int)> go = [&](int k) {
    if (k == n) {
      emit();
      return;
    }
    for (MorId c : cands(k)) {
      budget.charge();
      slot[k] = c;
      if (ok(k)) go(k + 1);
    }
    slot[k] = -1;
  };
  go(0);
}

}  // namespace

LaxBimodule make_lax_bimodule(const StrictMonCat& mon, const CatPtr& carrier,
                              const std::function<ObjId(ObjId, ObjId)>& l_obj,
                              const std::function<MorId(MorId, MorId)>& l_mor,
                              const std::function<ObjId(ObjId, ObjId)>& r_obj,
                              const std::function<MorId(MorId, MorId)>& r_mor,
                              const std::function<MorId(ObjId, ObjId, ObjId)>& lambda) {
  const auto& A = *mon.base;
  const auto& X = *carrier;
  LaxBimodule b;
  b.mon = mon;
  b.carrier = carrier;
  std::vector<ObjId> lo, ro;
  std::vector<MorId> lm, rm;
  for (ObjId a = 0; a < A.num_objects(); ++a) {
    for (ObjId x = 0; x < X.num_objects(); ++x) lo.push_back(l_obj(a, x));
  }
  for (MorId u = 0; u < A.num_morphisms(); ++u) {
    for (MorId w = 0; w < X.num_morphisms(); ++w) lm.push_back(l_mor(u, w));
  }
  for (ObjId x = 0; x < X.num_objects(); ++x) {
    for (ObjId a = 0; a < A.num_objects(); ++a) ro.push_back(r_obj(x, a));
  }
  for (MorId w = 0; w < X.num_morphisms(); ++w) {
    for (MorId v = 0; v < A.num_morphisms(); ++v) rm.push_back(r_mor(w, v));
  }
  b.left = FinFunctor(share(catalog::product(A, X)), carrier, std::move(lo), std::move(lm));
  b.right = FinFunctor(share(catalog::product(X, A)), carrier, std::move(ro), std::move(rm));
  for (ObjId a = 0; a < A.num_objects(); ++a) {
    for (ObjId x = 0; x < X.num_objects(); ++x) {
      for (ObjId c = 0; c < A.num_objects(); ++c) b.interchange.push_back(lambda(a, x, c));
    }
  }
  return b;
}

Report check_bimodule(const LaxBimodule& B) {
  const auto& A = B.A();
  const auto& X = B.X();
  const int nA = A.num_objects();
  const int nX = X.num_objects();
  if (B.left.dom()->num_objects() != nA * nX || B.right.dom()->num_objects() != nA * nX ||
      !same_category(B.left.cod(), B.carrier) || !same_category(B.right.cod(), B.carrier) ||
      static_cast<int>(B.interchange.size()) != nA * nX * nA) {
    throw Error(ErrorKind::ShapeMismatch, "bimodule actions do not match A and X");
  }
  for (ObjId a = 0; a < nA; ++a) {
    for (ObjId x = 0; x < nX; ++x) {
      for (ObjId b = 0; b < nA; ++b) {
        MorId l = B.lambda(a, x, b);
        if (X.src(l) != B.l_obj(a, B.r_obj(x, b)) || X.tgt(l) != B.r_obj(B.l_obj(a, x), b)) {
          throw Error(ErrorKind::ShapeMismatch, "interchange component has wrong endpoints at " + triple(B, a, x, b));
        }
      }
    }
  }
  if (auto r = check_functor(B.left); !r) return Report::fail("left." + r.rule, r.witness);
  if (auto r = check_functor(B.right); !r) return Report::fail("right." + r.rule, r.witness);

  const auto& m = B.mon;
  const MorId iu = A.id(m.unit);
  for (MorId w = 0; w < X.num_morphisms(); ++w) {
    if (B.l_mor(iu, w) != w) return Report::fail("LeftUnit", X.morphism_name(w));
    if (B.r_mor(w, iu) != w) return Report::fail("RightUnit", X.morphism_name(w));
    for (MorId u = 0; u < A.num_morphisms(); ++u) {
      for (MorId v = 0; v < A.num_morphisms(); ++v) {
        if (B.l_mor(m.mor(u, v), w) != B.l_mor(u, B.l_mor(v, w))) {
          return Report::fail("LeftAssociative", A.morphism_name(u) + "," + A.morphism_name(v) + "," + X.morphism_name(w));
        }
        if (B.r_mor(w, m.mor(u, v)) != B.r_mor(B.r_mor(w, u), v)) {
          return Report::fail("RightAssociative", X.morphism_name(w) + "," + A.morphism_name(u) + "," + A.morphism_name(v));
        }
      }
    }
  }

  // Naturality one variable at a time; with functorial actions this is
  // naturality in all three.
  for (ObjId a = 0; a < nA; ++a) {
    for (ObjId x = 0; x < nX; ++x) {
      for (ObjId b = 0; b < nA; ++b) {
        const MorId ia = A.id(a), ix = X.id(x), ib = A.id(b);
        for (MorId u = 0; u < A.num_morphisms(); ++u) {
          if (A.src(u) != a) continue;
          MorId lhs = X.compose(B.lambda(A.tgt(u), x, b), B.l_mor(u, B.r_mor(ix, ib)));
          MorId rhs = X.compose(B.r_mor(B.l_mor(u, ix), ib), B.lambda(a, x, b));
          if (lhs != rhs) return Report::fail("NaturalInA", triple(B, a, x, b) + ",u=" + A.morphism_name(u));
        }
        for (MorId w = 0; w < X.num_morphisms(); ++w) {
          if (X.src(w) != x) continue;
          MorId lhs = X.compose(B.lambda(a, X.tgt(w), b), B.l_mor(ia, B.r_mor(w, ib)));
          MorId rhs = X.compose(B.r_mor(B.l_mor(ia, w), ib), B.lambda(a, x, b));
          if (lhs != rhs) return Report::fail("NaturalInX", triple(B, a, x, b) + ",w=" + X.morphism_name(w));
        }
        for (MorId v = 0; v < A.num_morphisms(); ++v) {
          if (A.src(v) != b) continue;
          MorId lhs = X.compose(B.lambda(a, x, A.tgt(v)), B.l_mor(ia, B.r_mor(ix, v)));
          MorId rhs = X.compose(B.r_mor(B.l_mor(ia, ix), v), B.lambda(a, x, b));
          if (lhs != rhs) return Report::fail("NaturalInB", triple(B, a, x, b) + ",v=" + A.morphism_name(v));
        }
      }
    }
  }

  for (ObjId x = 0; x < nX; ++x) {
    for (ObjId b = 0; b < nA; ++b) {
      if (B.lambda(m.unit, x, b) != X.id(B.r_obj(x, b))) return Report::fail("L2", triple(B, m.unit, x, b));
    }
    for (ObjId a = 0; a < nA; ++a) {
      if (B.lambda(a, x, m.unit) != X.id(B.l_obj(a, x))) return Report::fail("R2", triple(B, a, x, m.unit));
    }
  }
  for (ObjId a = 0; a < nA; ++a) {
    for (ObjId a2 = 0; a2 < nA; ++a2) {
      for (ObjId x = 0; x < nX; ++x) {
        for (ObjId b = 0; b < nA; ++b) {
          MorId lhs = B.lambda(m.obj(a, a2), x, b);
          MorId rhs = X.compose(B.lambda(a, B.l_obj(a2, x), b), B.l_mor(A.id(a), B.lambda(a2, x, b)));
          if (lhs != rhs) return Report::fail("L1", triple(B, a, x, b) + ",a'=" + A.object_name(a2));
          // Same letters read as (a, x, b, b' = a2).
          lhs = B.lambda(a, x, m.obj(b, a2));
          rhs = X.compose(B.r_mor(B.lambda(a, x, b), A.id(a2)), B.lambda(a, B.r_obj(x, b), a2));
          if (lhs != rhs) return Report::fail("R1", triple(B, a, x, b) + ",b'=" + A.object_name(a2));
        }
      }
    }
  }
  return Report::pass();
}

LaxBimodule regular_bimodule(const StrictMonCat& mon) {
  const auto& A = *mon.base;
  return make_lax_bimodule(
      mon, mon.base, [&](ObjId a, ObjId x) { return mon.obj(a, x); }, [&](MorId u, MorId w) { return mon.mor(u, w); },
      [&](ObjId x, ObjId b) { return mon.obj(x, b); }, [&](MorId w, MorId v) { return mon.mor(w, v); },
      [&](ObjId a, ObjId x, ObjId b) { return A.id(mon.obj(mon.obj(a, x), b)); });
}

FunctorCategory functor_category(const CatPtr& x, const CatPtr& p, Budget& budget) {
  FunctorCategory fc;
  fc.objects = enumerate_functors(x, p, budget);
  const int n = static_cast<int>(fc.objects.size());
  std::vector<std::string> names;
  std::vector<std::vector<MorId>> id_keys;
  for (int i = 0; i < n; ++i) {
    names.push_back("F" + std::to_string(i));
    id_keys.push_back(identity_nat(fc.objects[i]).components());
  }
  std::vector<std::tuple<int, int, std::vector<MorId>>> mors;
  std::vector<NatTrans> nats;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (auto& t : enumerate_nat_trans(fc.objects[i], fc.objects[j], budget)) {
        mors.emplace_back(i, j, t.components());
        nats.push_back(std::move(t));
      }
    }
  }
  const auto& P = *p;
  auto comp = [&](const std::vector<MorId>& g, const std::vector<MorId>& f) {
    std::vector<MorId> out(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) out[k] = P.compose(g[k], f[k]);
    return out;
  };
  std::vector<MorId> ids;
  fc.cat = build_keyed(names, mors, id_keys, comp, &ids);
  fc.morphisms.resize(nats.size());
  for (std::size_t k = 0; k < nats.size(); ++k) fc.morphisms[ids[k]] = nats[k];
  return fc;
}

LaxBimodule hom_bimodule(const LaxBimodule& B, const CatPtr& p, Budget& budget, FunctorCategory* out) {
  FunctorCategory fc = functor_category(B.carrier, p, budget);
  const auto& A = B.A();
  const auto& X = B.X();
  const auto& P = *p;
  auto need = [](int v, const char* what) {
    if (v < 0) throw Error(ErrorKind::VerificationFailed, std::string("action leaves the functor category: ") + what);
    return v;
  };
  // (af)(x) = f(xa)
  auto l_obj = [&](ObjId a, ObjId f) {
    const auto& F = fc.objects[f];
    std::vector<ObjId> o(X.num_objects());
    std::vector<MorId> m(X.num_morphisms());
    for (ObjId x = 0; x < X.num_objects(); ++x) o[x] = F.obj(B.r_obj(x, a));
    for (MorId w = 0; w < X.num_morphisms(); ++w) m[w] = F.mor(B.r_mor(w, A.id(a)));
    return need(find_functor(fc, o, m), "left");
  };
  auto r_obj = [&](ObjId f, ObjId b) {
    const auto& F = fc.objects[f];
    std::vector<ObjId> o(X.num_objects());
    std::vector<MorId> m(X.num_morphisms());
    for (ObjId x = 0; x < X.num_objects(); ++x) o[x] = F.obj(B.l_obj(b, x));
    for (MorId w = 0; w < X.num_morphisms(); ++w) m[w] = F.mor(B.l_mor(A.id(b), w));
    return need(find_functor(fc, o, m), "right");
  };
  auto l_mor = [&](MorId u, MorId s) {
    const auto& sig = fc.morphisms[s];
    const auto& G = fc.objects[fc.cat->tgt(s)];
    std::vector<MorId> c(X.num_objects());
    for (ObjId x = 0; x < X.num_objects(); ++x) {
      c[x] = P.compose(G.mor(B.r_mor(X.id(x), u)), sig.at(B.r_obj(x, A.src(u))));
    }
    return need(find_nat(fc, l_obj(A.src(u), fc.cat->src(s)), l_obj(A.tgt(u), fc.cat->tgt(s)), c), "left on morphisms");
  };
  auto r_mor = [&](MorId s, MorId v) {
    const auto& sig = fc.morphisms[s];
    const auto& G = fc.objects[fc.cat->tgt(s)];
    std::vector<MorId> c(X.num_objects());
    for (ObjId x = 0; x < X.num_objects(); ++x) {
      c[x] = P.compose(G.mor(B.l_mor(v, X.id(x))), sig.at(B.l_obj(A.src(v), x)));
    }
    return need(find_nat(fc, r_obj(fc.cat->src(s), A.src(v)), r_obj(fc.cat->tgt(s), A.tgt(v)), c), "right on morphisms");
  };
  auto lambda = [&](ObjId a, ObjId f, ObjId b) {
    const auto& F = fc.objects[f];
    std::vector<MorId> c(X.num_objects());
    for (ObjId x = 0; x < X.num_objects(); ++x) c[x] = F.mor(B.lambda(b, x, a));
    return need(find_nat(fc, l_obj(a, r_obj(f, b)), r_obj(l_obj(a, f), b), c), "interchange");
  };
  auto H = make_lax_bimodule(B.mon, fc.cat, l_obj, l_mor, r_obj, r_mor, lambda);
  if (out) *out = std::move(fc);
  return H;
}

LaxBimodule product_bimodule(const CatPtr& p, const LaxBimodule& B) {
  const auto& X = B.X();
  const int nX = X.num_objects();
  const int mX = X.num_morphisms();
  auto carrier = share(catalog::product(*p, X));
  return make_lax_bimodule(
      B.mon, carrier, [&](ObjId a, ObjId o) { return (o / nX) * nX + B.l_obj(a, o % nX); },
      [&](MorId u, MorId w) { return (w / mX) * mX + B.l_mor(u, w % mX); },
      [&](ObjId o, ObjId b) { return (o / nX) * nX + B.r_obj(o % nX, b); },
      [&](MorId w, MorId v) { return (w / mX) * mX + B.r_mor(w % mX, v); },
      [&](ObjId a, ObjId o, ObjId b) { return p->id(o / nX) * mX + B.lambda(a, o % nX, b); });
}

Report check_bimodule_morphism(const LaxBimodule& X, const LaxBimodule& Y, const LaxBimoduleMorphism& m) {
  const auto& A = X.A();
  const auto& CX = X.X();
  const auto& CY = Y.X();
  const auto& p = m.p;
  const int nA = A.num_objects();
  if (!same_category(X.mon.base, Y.mon.base) || !same_category(p.dom(), X.carrier) || !same_category(p.cod(), Y.carrier) ||
      static_cast<int>(m.rho.size()) != nA * CX.num_objects()) {
    throw Error(ErrorKind::ShapeMismatch, "bimodule morphism shapes");
  }
  auto rho = [&](ObjId a, ObjId x) { return m.rho[a * CX.num_objects() + x]; };
  for (ObjId a = 0; a < nA; ++a) {
    for (ObjId x = 0; x < CX.num_objects(); ++x) {
      if (CY.src(rho(a, x)) != Y.l_obj(a, p.obj(x)) || CY.tgt(rho(a, x)) != p.obj(X.l_obj(a, x))) {
        throw Error(ErrorKind::ShapeMismatch, "rho has wrong endpoints at " + pair_w(A, a, CX, x));
      }
    }
  }
  if (auto r = check_functor(p); !r) return Report::fail("p." + r.rule, r.witness);
  for (MorId u = 0; u < A.num_morphisms(); ++u) {
    for (MorId w = 0; w < CX.num_morphisms(); ++w) {
      MorId lhs = CY.compose(rho(A.tgt(u), CX.tgt(w)), Y.l_mor(u, p.mor(w)));
      MorId rhs = CY.compose(p.mor(X.l_mor(u, w)), rho(A.src(u), CX.src(w)));
      if (lhs != rhs) return Report::fail("RhoNatural", "u=" + A.morphism_name(u) + ",w=" + CX.morphism_name(w));
    }
  }
  const auto& mon = X.mon;
  for (ObjId x = 0; x < CX.num_objects(); ++x) {
    if (rho(mon.unit, x) != CY.id(p.obj(x))) return Report::fail("RhoUnit", CX.object_name(x));
    for (ObjId a = 0; a < nA; ++a) {
      for (ObjId b = 0; b < nA; ++b) {
        MorId lhs = rho(mon.obj(a, b), x);
        MorId rhs = CY.compose(rho(a, X.l_obj(b, x)), Y.l_mor(A.id(a), rho(b, x)));
        if (lhs != rhs) return Report::fail("RhoMultiplicative", pair_w(A, a, CX, x) + ",b=" + A.object_name(b));
      }
    }
  }
  for (MorId w = 0; w < CX.num_morphisms(); ++w) {
    for (MorId v = 0; v < A.num_morphisms(); ++v) {
      if (p.mor(X.r_mor(w, v)) != Y.r_mor(p.mor(w), v)) {
        return Report::fail("StrictRight", "w=" + CX.morphism_name(w) + ",v=" + A.morphism_name(v));
      }
    }
  }
  for (ObjId a = 0; a < nA; ++a) {
    for (ObjId x = 0; x < CX.num_objects(); ++x) {
      for (ObjId b = 0; b < nA; ++b) {
        MorId lhs = CY.compose(Y.r_mor(rho(a, x), A.id(b)), Y.lambda(a, p.obj(x), b));
        MorId rhs = CY.compose(p.mor(X.lambda(a, x, b)), rho(a, X.r_obj(x, b)));
        if (lhs != rhs) return Report::fail("Hexagon", triple(X, a, x, b));
      }
    }
  }
  return Report::pass();
}

std::vector<LaxBimoduleMorphism> enumerate_bimodule_morphisms(const LaxBimodule& X, const LaxBimodule& Y,
                                                              Budget& budget) {
  const auto& A = X.A();
  const auto& CX = X.X();
  const auto& CY = Y.X();
  const int nA = A.num_objects();
  const int nX = CX.num_objects();
  const int mX = CX.num_morphisms();
  std::vector<LaxBimoduleMorphism> out;

  // Object maps respecting the strict right square.
  std::vector<ObjId> po(nX, -1);
  std::vector<std::vector<ObjId>> obj_maps;
  std::function<void(int)> go_obj = [&](int k) {
    if (k == nX) {
      obj_maps.push_back(po);
      return;
    }
    for (ObjId c = 0; c < CY.num_objects(); ++c) {
      budget.charge();
      po[k] = c;
      bool ok = true;
      for (ObjId x = 0; x <= k && ok; ++x) {
        for (ObjId b = 0; b < nA && ok; ++b) {
          ObjId xb = X.r_obj(x, b);
          if (xb <= k && (x == k || xb == k)) ok = po[xb] == Y.r_obj(po[x], b);
        }
      }
      if (ok) go_obj(k + 1);
    }
    po[k] = -1;
  };
  go_obj(0);

  for (const auto& om : obj_maps) {
    std::vector<MorId> pm(mX, -1);
    auto cands = [&](int u) {
      if (CX.is_identity(u)) return std::vector<MorId>{CY.id(om[CX.src(u)])};
      { auto h = CY.hom(om[CX.src(u)], om[CX.tgt(u)]); return std::vector<MorId>(h.begin(), h.end()); }
    };
    auto ok_mor = [&](int k) {
      for (MorId f = 0; f <= k; ++f) {
        for (MorId g = 0; g <= k; ++g) {
          if (CX.src(g) != CX.tgt(f)) continue;
          MorId gf = CX.compose(g, f);
          if (gf > k || (f != k && g != k && gf != k)) continue;
          if (CY.compose(pm[g], pm[f]) != pm[gf]) return false;
        }
      }
      for (MorId w = 0; w <= k; ++w) {
        for (MorId v = 0; v < A.num_morphisms(); ++v) {
          MorId wv = X.r_mor(w, v);
          if (wv > k || (w != k && wv != k)) continue;
          if (pm[wv] != Y.r_mor(pm[w], v)) return false;
        }
      }
      return true;
    };
    std::vector<FinFunctor> functors;
    backtrack(
        mX, pm, cands, ok_mor,
        [&] { functors.emplace_back(X.carrier, Y.carrier, om, pm); }, budget);

    for (const auto& p : functors) {
      const int n = nA * nX;
      std::vector<MorId> rho(n, -1);
      auto rc = [&](int k) {
        ObjId a = k / nX, x = k % nX;
        ObjId s = Y.l_obj(a, p.obj(x)), t = p.obj(X.l_obj(a, x));
        if (a == X.mon.unit) return s == t ? std::vector<MorId>{CY.id(s)} : std::vector<MorId>{};
        { auto h = CY.hom(s, t); return std::vector<MorId>(h.begin(), h.end()); }
      };
      auto ok_rho = [&](int k) {
        // Multiplicativity and the hexagon on filled slots.
        for (ObjId a = 0; a < nA; ++a) {
          for (ObjId b = 0; b < nA; ++b) {
            for (ObjId x = 0; x < nX; ++x) {
              int i1 = X.mon.obj(a, b) * nX + x, i2 = a * nX + X.l_obj(b, x), i3 = b * nX + x;
              if (std::max({i1, i2, i3}) != k) continue;
              if (rho[i1] != CY.compose(rho[i2], Y.l_mor(A.id(a), rho[i3]))) return false;
            }
          }
        }
        ObjId a = k / nX;
        for (ObjId x = 0; x < nX; ++x) {
          for (ObjId b = 0; b < nA; ++b) {
            int i1 = a * nX + x, i2 = a * nX + X.r_obj(x, b);
            if (std::max(i1, i2) != k) continue;
            MorId lhs = CY.compose(Y.r_mor(rho[i1], A.id(b)), Y.lambda(a, p.obj(x), b));
            if (lhs != CY.compose(p.mor(X.lambda(a, x, b)), rho[i2])) return false;
          }
        }
        return true;
      };
      backtrack(
          n, rho, rc, ok_rho,
          [&] {
            LaxBimoduleMorphism m{p, rho};
            if (check_bimodule_morphism(X, Y, m)) out.push_back(std::move(m));
          },
          budget);
    }
  }
  return out;
}

Report check_lax_h0_object(const LaxBimodule& B, const LaxH0Object& o) {
  const auto& A = B.A();
  const auto& X = B.X();
  const int nA = A.num_objects();
  if (static_cast<int>(o.xi.size()) != nA || o.x < 0 || o.x >= X.num_objects()) {
    throw Error(ErrorKind::ShapeMismatch, "need one xi per object of A");
  }
  const ObjId x = o.x;
  for (ObjId a = 0; a < nA; ++a) {
    if (X.src(o.xi[a]) != B.l_obj(a, x) || X.tgt(o.xi[a]) != B.r_obj(x, a)) {
      throw Error(ErrorKind::ShapeMismatch, "xi_a must be ax -> xa at " + pair_w(A, a, X, x));
    }
  }
  if (o.xi[B.mon.unit] != X.id(x)) return Report::fail("XiUnit", X.object_name(x));
  for (MorId u = 0; u < A.num_morphisms(); ++u) {
    MorId lhs = X.compose(o.xi[A.tgt(u)], B.l_mor(u, X.id(x)));
    MorId rhs = X.compose(B.r_mor(X.id(x), u), o.xi[A.src(u)]);
    if (lhs != rhs) return Report::fail("XiNatural", "u=" + A.morphism_name(u) + ",x=" + X.object_name(x));
  }
  for (ObjId a = 0; a < nA; ++a) {
    for (ObjId b = 0; b < nA; ++b) {
      MorId lhs = X.compose_chain({B.r_mor(o.xi[a], A.id(b)), B.lambda(a, x, b), B.l_mor(A.id(a), o.xi[b])});
      if (lhs != o.xi[B.mon.obj(a, b)]) return Report::fail("XiCocycle", triple(B, a, x, b));
    }
  }
  return Report::pass();
}

LaxH0 lax_h0(const LaxBimodule& B, Budget& budget) {
  const auto& A = B.A();
  const auto& X = B.X();
  const int nA = A.num_objects();
  LaxH0 h;
  for (ObjId x = 0; x < X.num_objects(); ++x) {
    std::vector<MorId> xi(nA, -1);
    auto cands = [&](int a) {
      ObjId s = B.l_obj(a, x), t = B.r_obj(x, a);
      if (a == B.mon.unit) return s == t ? std::vector<MorId>{X.id(s)} : std::vector<MorId>{};
      { auto h = X.hom(s, t); return std::vector<MorId>(h.begin(), h.end()); }
    };
    auto ok = [&](int k) {
      for (MorId u = 0; u < A.num_morphisms(); ++u) {
        ObjId a = A.src(u), a2 = A.tgt(u);
        if (std::max(a, a2) != k) continue;
        if (X.compose(xi[a2], B.l_mor(u, X.id(x))) != X.compose(B.r_mor(X.id(x), u), xi[a])) return false;
      }
      for (ObjId a = 0; a <= k; ++a) {
        for (ObjId b = 0; b <= k; ++b) {
          ObjId ab = B.mon.obj(a, b);
          if (ab > k || std::max({a, b, ab}) != k) continue;
          if (X.compose_chain({B.r_mor(xi[a], A.id(b)), B.lambda(a, x, b), B.l_mor(A.id(a), xi[b])}) != xi[ab]) {
            return false;
          }
        }
      }
      return true;
    };
    backtrack(
        nA, xi, cands, ok,
        [&] {
          LaxH0Object o{x, xi};
          if (check_lax_h0_object(B, o)) h.objects.push_back(std::move(o));
        },
        budget);
  }

  std::vector<std::string> names;
  std::vector<MorId> id_keys;
  for (const auto& o : h.objects) {
    std::string n = X.object_name(o.x) + "[";
    for (std::size_t a = 0; a < o.xi.size(); ++a) n += (a ? "," : "") + X.morphism_name(o.xi[a]);
    names.push_back(n + "]");
    id_keys.push_back(X.id(o.x));
  }
  std::vector<std::tuple<int, int, MorId>> mors;
  const int n = static_cast<int>(h.objects.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& s = h.objects[i];
      const auto& t = h.objects[j];
      for (MorId w : X.hom(s.x, t.x)) {
        budget.charge();
        bool ok = true;
        for (ObjId a = 0; a < nA && ok; ++a) {
          ok = X.compose(t.xi[a], B.l_mor(A.id(a), w)) == X.compose(B.r_mor(w, A.id(a)), s.xi[a]);
        }
        if (ok) mors.emplace_back(i, j, w);
      }
    }
  }
  std::vector<MorId> ids;
  h.cat = build_keyed(names, mors, id_keys, [&](MorId g, MorId f) { return X.compose(g, f); }, &ids);
  h.underlying.assign(mors.size(), -1);
  for (std::size_t k = 0; k < mors.size(); ++k) h.underlying[ids[k]] = std::get<2>(mors[k]);
  return h;
}

FinFunctor lax_h0_map(const LaxBimodule& X, const LaxBimodule& Y, const LaxBimoduleMorphism& m, const LaxH0& hx,
                      const LaxH0& hy) {
  const auto& CY = Y.X();
  const int nX = X.X().num_objects();
  std::map<LaxH0Object, ObjId> index;
  for (std::size_t i = 0; i < hy.objects.size(); ++i) index.emplace(hy.objects[i], static_cast<ObjId>(i));
  std::vector<ObjId> obj;
  for (const auto& o : hx.objects) {
    LaxH0Object t{m.p.obj(o.x), {}};
    for (std::size_t a = 0; a < o.xi.size(); ++a) {
      t.xi.push_back(CY.compose(m.p.mor(o.xi[a]), m.rho[a * nX + o.x]));
    }
    auto it = index.find(t);
    if (it == index.end()) throw Error(ErrorKind::VerificationFailed, "transported object is not in lax H0 of the target");
    obj.push_back(it->second);
  }
  std::vector<MorId> mor;
  for (MorId k = 0; k < hx.cat->num_morphisms(); ++k) {
    MorId w = m.p.mor(hx.underlying[k]);
    MorId found = -1;
    for (MorId c : hy.cat->hom(obj[hx.cat->src(k)], obj[hx.cat->tgt(k)])) {
      if (hy.underlying[c] == w) found = c;
    }
    if (found < 0) throw Error(ErrorKind::VerificationFailed, "transported morphism is not in lax H0 of the target");
    mor.push_back(found);
  }
  return FinFunctor(hx.cat, hy.cat, std::move(obj), std::move(mor));
}

Report check_codescent_cocycle(const LaxBimodule& B, const CodescentCocycle& c) {
  const auto& A = B.A();
  const auto& X = B.X();
  const auto& f = c.f;
  const int nA = A.num_objects();
  if (!same_category(f.dom(), B.carrier) || static_cast<int>(c.phi.size()) != X.num_objects() * nA) {
    throw Error(ErrorKind::ShapeMismatch, "cocycle shapes");
  }
  const auto& P = *f.cod();
  auto phi = [&](ObjId x, ObjId a) { return c.phi[x * nA + a]; };
  for (ObjId x = 0; x < X.num_objects(); ++x) {
    for (ObjId a = 0; a < nA; ++a) {
      if (P.src(phi(x, a)) != f.obj(B.r_obj(x, a)) || P.tgt(phi(x, a)) != f.obj(B.l_obj(a, x))) {
        throw Error(ErrorKind::ShapeMismatch, "phi must be f(xa) -> f(ax) at " + pair_w(A, a, X, x));
      }
    }
  }
  if (auto r = check_functor(f); !r) return Report::fail("f." + r.rule, r.witness);
  for (MorId w = 0; w < X.num_morphisms(); ++w) {
    for (ObjId a = 0; a < nA; ++a) {
      MorId lhs = P.compose(phi(X.tgt(w), a), f.mor(B.r_mor(w, A.id(a))));
      MorId rhs = P.compose(f.mor(B.l_mor(A.id(a), w)), phi(X.src(w), a));
      if (lhs != rhs) return Report::fail("PhiNaturalInX", "w=" + X.morphism_name(w) + ",a=" + A.object_name(a));
    }
  }
  for (MorId u = 0; u < A.num_morphisms(); ++u) {
    for (ObjId x = 0; x < X.num_objects(); ++x) {
      MorId lhs = P.compose(phi(x, A.tgt(u)), f.mor(B.r_mor(X.id(x), u)));
      MorId rhs = P.compose(f.mor(B.l_mor(u, X.id(x))), phi(x, A.src(u)));
      if (lhs != rhs) return Report::fail("PhiNaturalInA", "u=" + A.morphism_name(u) + ",x=" + X.object_name(x));
    }
  }
  for (ObjId x = 0; x < X.num_objects(); ++x) {
    if (phi(x, B.mon.unit) != P.id(f.obj(x))) return Report::fail("PhiUnit", X.object_name(x));
  }
  for (ObjId x = 0; x < X.num_objects(); ++x) {
    for (ObjId a = 0; a < nA; ++a) {
      for (ObjId b = 0; b < nA; ++b) {
        MorId lhs = P.compose_chain({phi(B.l_obj(b, x), a), f.mor(B.lambda(b, x, a)), phi(B.r_obj(x, a), b)});
        if (lhs != phi(x, B.mon.obj(a, b))) return Report::fail("PhiCocycle", triple(B, a, x, b));
      }
    }
  }
  return Report::pass();
}

std::vector<CodescentCocycle> enumerate_cocycles(const LaxBimodule& B, const CatPtr& p, Budget& budget) {
  const auto& A = B.A();
  const auto& X = B.X();
  const auto& P = *p;
  const int nA = A.num_objects();
  const int n = X.num_objects() * nA;
  std::vector<CodescentCocycle> out;
  for (const auto& f : enumerate_functors(B.carrier, p, budget)) {
    std::vector<MorId> phi(n, -1);
    auto cands = [&](int k) {
      ObjId x = k / nA, a = k % nA;
      ObjId s = f.obj(B.r_obj(x, a)), t = f.obj(B.l_obj(a, x));
      if (a == B.mon.unit) return s == t ? std::vector<MorId>{P.id(s)} : std::vector<MorId>{};
      { auto h = P.hom(s, t); return std::vector<MorId>(h.begin(), h.end()); }
    };
    auto ok = [&](int k) {
      ObjId x = k / nA, a = k % nA;
      for (MorId w = 0; w < X.num_morphisms(); ++w) {
        int i1 = X.tgt(w) * nA + a, i2 = X.src(w) * nA + a;
        if (std::max(i1, i2) != k) continue;
        if (P.compose(phi[i1], f.mor(B.r_mor(w, A.id(a)))) != P.compose(f.mor(B.l_mor(A.id(a), w)), phi[i2])) return false;
      }
      for (MorId u = 0; u < A.num_morphisms(); ++u) {
        int i1 = x * nA + A.tgt(u), i2 = x * nA + A.src(u);
        if (std::max(i1, i2) != k) continue;
        if (P.compose(phi[i1], f.mor(B.r_mor(X.id(x), u))) != P.compose(f.mor(B.l_mor(u, X.id(x))), phi[i2])) return false;
      }
      return true;
    };
    backtrack(
        n, phi, cands, ok,
        [&] {
          CodescentCocycle c{f, phi};
          if (check_codescent_cocycle(B, c)) out.push_back(std::move(c));
        },
        budget);
  }
  return out;
}

bool is_cocycle_morphism(const LaxBimodule& B, const CodescentCocycle& c, const CodescentCocycle& d,
                         const NatTrans& sigma) {
  const auto& P = *c.f.cod();
  const int nA = B.A().num_objects();
  for (ObjId x = 0; x < B.X().num_objects(); ++x) {
    for (ObjId a = 0; a < nA; ++a) {
      MorId lhs = P.compose(d.phi[x * nA + a], sigma.at(B.r_obj(x, a)));
      MorId rhs = P.compose(sigma.at(B.l_obj(a, x)), c.phi[x * nA + a]);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

BijectionReport uct_bijection(const LaxBimodule& B, const CatPtr& p, Budget& budget) {
  BijectionReport rep;
  const auto& X = B.X();
  const int nA = B.A().num_objects();
  const auto cocycles = enumerate_cocycles(B, p, budget);
  FunctorCategory fc;
  const auto H = hom_bimodule(B, p, budget, &fc);
  const auto hh = lax_h0(H, budget);
  rep.left = static_cast<int>(cocycles.size());
  rep.right = static_cast<int>(hh.objects.size());

  std::map<LaxH0Object, int> index;
  for (std::size_t i = 0; i < hh.objects.size(); ++i) index.emplace(hh.objects[i], static_cast<int>(i));
  std::vector<int> image;
  std::set<int> seen;
  for (std::size_t k = 0; k < cocycles.size(); ++k) {
    const auto& c = cocycles[k];
    LaxH0Object o{find_functor(fc, c.f.obj_map(), c.f.mor_map()), {}};
    for (ObjId a = 0; a < nA && o.x >= 0; ++a) {
      std::vector<MorId> comps(X.num_objects());
      for (ObjId x = 0; x < X.num_objects(); ++x) comps[x] = c.phi[x * nA + a];
      o.xi.push_back(find_nat(fc, H.l_obj(a, o.x), H.r_obj(o.x, a), comps));
    }
    auto it = index.find(o);
    if (it == index.end()) {
      rep.report = Report::fail("TransposeNotInH0", "cocycle " + std::to_string(k));
      return rep;
    }
    if (!seen.insert(it->second).second) {
      rep.report = Report::fail("TransposeNotInjective", "cocycle " + std::to_string(k));
      return rep;
    }
    image.push_back(it->second);
  }
  if (rep.left != rep.right) {
    rep.report = Report::fail("TransposeNotSurjective", std::to_string(rep.left) + " vs " + std::to_string(rep.right));
    return rep;
  }
  rep.morphisms_right = hh.cat->num_morphisms();
  for (std::size_t i = 0; i < cocycles.size(); ++i) {
    for (std::size_t j = 0; j < cocycles.size(); ++j) {
      std::set<std::vector<MorId>> lhs, rhs;
      for (const auto& s : enumerate_nat_trans(cocycles[i].f, cocycles[j].f, budget)) {
        if (is_cocycle_morphism(B, cocycles[i], cocycles[j], s)) lhs.insert(s.components());
      }
      for (MorId m : hh.cat->hom(image[i], image[j])) rhs.insert(fc.morphisms[hh.underlying[m]].components());
      rep.morphisms_left += static_cast<int>(lhs.size());
      if (lhs != rhs) {
        rep.report = Report::fail("MorphismsDiffer", "cocycles " + std::to_string(i) + "," + std::to_string(j));
        return rep;
      }
    }
  }
  return rep;
}

BijectionReport cohomology_adjunction(const LaxBimodule& B, const CatPtr& p, Budget& budget) {
  BijectionReport rep;
  const auto& A = B.A();
  const auto& X = B.X();
  const auto& P = *p;
  const int nA = A.num_objects();
  const auto PA = product_bimodule(p, regular_bimodule(B.mon));
  const auto maps = enumerate_bimodule_morphisms(PA, B, budget);
  const auto hh = lax_h0(B, budget);
  const auto functors = enumerate_functors(p, hh.cat, budget);
  rep.left = static_cast<int>(maps.size());
  rep.right = static_cast<int>(functors.size());
  std::map<LaxH0Object, ObjId> index;
  for (std::size_t i = 0; i < hh.objects.size(); ++i) index.emplace(hh.objects[i], static_cast<ObjId>(i));
  const ObjId i0 = B.mon.unit;
  const int mA = A.num_morphisms();

  // ψ: (p, ρ) ↦ y ↦ (p(y,i), ρ_{a,(y,i)}).
  auto psi = [&](const LaxBimoduleMorphism& m) -> std::optional<FinFunctor> {
    std::vector<ObjId> obj;
    std::vector<MorId> mor;
    for (ObjId y = 0; y < P.num_objects(); ++y) {
      ObjId yi = y * nA + i0;
      LaxH0Object o{m.p.obj(yi), {}};
      for (ObjId a = 0; a < nA; ++a) o.xi.push_back(m.rho[a * (P.num_objects() * nA) + yi]);
      auto it = index.find(o);
      if (it == index.end()) return std::nullopt;
      obj.push_back(it->second);
    }
    for (MorId q = 0; q < P.num_morphisms(); ++q) {
      MorId w = m.p.mor(q * mA + A.id(i0));
      MorId found = -1;
      for (MorId c : hh.cat->hom(obj[P.src(q)], obj[P.tgt(q)])) {
        if (hh.underlying[c] == w) found = c;
      }
      if (found < 0) return std::nullopt;
      mor.push_back(found);
    }
    return FinFunctor(p, hh.cat, obj, mor);
  };
  std::set<std::pair<std::vector<ObjId>, std::vector<MorId>>> hit;
  for (std::size_t k = 0; k < maps.size(); ++k) {
    auto F = psi(maps[k]);
    if (!F || std::find(functors.begin(), functors.end(), *F) == functors.end()) {
      rep.report = Report::fail("PsiNotAFunctor", "morphism " + std::to_string(k));
      return rep;
    }
    if (!hit.insert({F->obj_map(), F->mor_map()}).second) {
      rep.report = Report::fail("PsiNotInjective", "morphism " + std::to_string(k));
      return rep;
    }
  }
  // θ: F ↦ p(y,b) = x_y b, ρ_{a,(y,b)} = ξ_{a,y} b ∘ λ_{a,x_y,b}; then ψθ = 1 and θψ = 1.
  auto theta = [&](const FinFunctor& F) {
    const int nP = P.num_objects();
    std::vector<ObjId> obj(nP * nA);
    std::vector<MorId> mor(P.num_morphisms() * mA);
    for (ObjId y = 0; y < nP; ++y) {
      for (ObjId b = 0; b < nA; ++b) obj[y * nA + b] = B.r_obj(hh.objects[F.obj(y)].x, b);
    }
    for (MorId q = 0; q < P.num_morphisms(); ++q) {
      for (MorId v = 0; v < mA; ++v) mor[q * mA + v] = B.r_mor(hh.underlying[F.mor(q)], v);
    }
    LaxBimoduleMorphism m{FinFunctor(PA.carrier, B.carrier, obj, mor), std::vector<MorId>(nA * nP * nA)};
    for (ObjId a = 0; a < nA; ++a) {
      for (ObjId y = 0; y < nP; ++y) {
        const auto& o = hh.objects[F.obj(y)];
        for (ObjId b = 0; b < nA; ++b) {
          m.rho[a * (nP * nA) + y * nA + b] = X.compose(B.r_mor(o.xi[a], A.id(b)), B.lambda(a, o.x, b));
        }
      }
    }
    return m;
  };
  for (std::size_t k = 0; k < functors.size(); ++k) {
    auto m = theta(functors[k]);
    if (!check_bimodule_morphism(PA, B, m)) {
      rep.report = Report::fail("ThetaNotABimoduleMap", "functor " + std::to_string(k));
      return rep;
    }
    bool found = false;
    for (const auto& e : maps) found = found || (e.p == m.p && e.rho == m.rho);
    if (!found) {
      rep.report = Report::fail("ThetaNotEnumerated", "functor " + std::to_string(k));
      return rep;
    }
    auto back = psi(m);
    if (!back || !(*back == functors[k])) {
      rep.report = Report::fail("PsiTheta", "functor " + std::to_string(k));
      return rep;
    }
  }
  if (rep.left != rep.right) rep.report = Report::fail("Cardinality", std::to_string(rep.left) + " vs " + std::to_string(rep.right));
  return rep;
}

BijectionReport homology_adjunction(const LaxBimodule& B, const CatPtr& p, Budget& budget) {
  BijectionReport rep;
  const auto& A = B.A();
  const auto& X = B.X();
  const auto& P = *p;
  const int nA = A.num_objects();
  const ObjId i0 = B.mon.unit;
  FunctorCategory fc;
  const auto AP = hom_bimodule(regular_bimodule(B.mon), p, budget, &fc);
  const auto maps = enumerate_bimodule_morphisms(B, AP, budget);
  const auto cocycles = enumerate_cocycles(B, p, budget);
  rep.left = static_cast<int>(maps.size());
  rep.right = static_cast<int>(cocycles.size());

  auto psi = [&](const LaxBimoduleMorphism& m) {
    std::vector<ObjId> obj(X.num_objects());
    std::vector<MorId> mor(X.num_morphisms());
    for (ObjId x = 0; x < X.num_objects(); ++x) obj[x] = fc.objects[m.p.obj(x)].obj(i0);
    for (MorId w = 0; w < X.num_morphisms(); ++w) mor[w] = fc.morphisms[m.p.mor(w)].at(i0);
    CodescentCocycle c{FinFunctor(B.carrier, p, obj, mor), std::vector<MorId>(X.num_objects() * nA)};
    for (ObjId x = 0; x < X.num_objects(); ++x) {
      for (ObjId a = 0; a < nA; ++a) c.phi[x * nA + a] = fc.morphisms[m.rho[a * X.num_objects() + x]].at(i0);
    }
    return c;
  };
  auto theta = [&](const CodescentCocycle& c) -> std::optional<LaxBimoduleMorphism> {
    std::vector<ObjId> obj(X.num_objects());
    std::vector<MorId> mor(X.num_morphisms());
    for (ObjId x = 0; x < X.num_objects(); ++x) {
      std::vector<ObjId> o(nA);
      std::vector<MorId> mm(A.num_morphisms());
      for (ObjId b = 0; b < nA; ++b) o[b] = c.f.obj(B.r_obj(x, b));
      for (MorId v = 0; v < A.num_morphisms(); ++v) mm[v] = c.f.mor(B.r_mor(X.id(x), v));
      obj[x] = find_functor(fc, o, mm);
      if (obj[x] < 0) return std::nullopt;
    }
    for (MorId w = 0; w < X.num_morphisms(); ++w) {
      std::vector<MorId> comps(nA);
      for (ObjId b = 0; b < nA; ++b) comps[b] = c.f.mor(B.r_mor(w, A.id(b)));
      mor[w] = find_nat(fc, obj[X.src(w)], obj[X.tgt(w)], comps);
      if (mor[w] < 0) return std::nullopt;
    }
    LaxBimoduleMorphism m{FinFunctor(B.carrier, AP.carrier, obj, mor), std::vector<MorId>(nA * X.num_objects())};
    for (ObjId a = 0; a < nA; ++a) {
      for (ObjId x = 0; x < X.num_objects(); ++x) {
        std::vector<MorId> comps(nA);
        for (ObjId b = 0; b < nA; ++b) {
          comps[b] = P.compose(c.f.mor(B.lambda(a, x, b)), c.phi[B.r_obj(x, b) * nA + a]);
        }
        MorId r = find_nat(fc, AP.l_obj(a, obj[x]), obj[B.l_obj(a, x)], comps);
        if (r < 0) return std::nullopt;
        m.rho[a * X.num_objects() + x] = r;
      }
    }
    return m;
  };
  auto same_cocycle = [](const CodescentCocycle& u, const CodescentCocycle& v) { return u.f == v.f && u.phi == v.phi; };
  for (std::size_t k = 0; k < maps.size(); ++k) {
    auto c = psi(maps[k]);
    if (std::none_of(cocycles.begin(), cocycles.end(), [&](const auto& e) { return same_cocycle(e, c); })) {
      rep.report = Report::fail("PsiNotACocycle", "morphism " + std::to_string(k));
      return rep;
    }
    auto back = theta(c);
    if (!back || !(back->p == maps[k].p) || back->rho != maps[k].rho) {
      rep.report = Report::fail("ThetaPsi", "morphism " + std::to_string(k));
      return rep;
    }
  }
  for (std::size_t k = 0; k < cocycles.size(); ++k) {
    auto m = theta(cocycles[k]);
    if (!m || !check_bimodule_morphism(B, AP, *m)) {
      rep.report = Report::fail("ThetaNotABimoduleMap", "cocycle " + std::to_string(k));
      return rep;
    }
    if (!same_cocycle(psi(*m), cocycles[k])) {
      rep.report = Report::fail("PsiTheta", "cocycle " + std::to_string(k));
      return rep;
    }
  }
  if (rep.left != rep.right) rep.report = Report::fail("Cardinality", std::to_string(rep.left) + " vs " + std::to_string(rep.right));
  return rep;
}

// ---------------------------------------------------------------------------
// M^op

namespace {

// Component at x of a monotone-map action through a comonad: faces act by
// c^i ε c^{k-i}, degeneracies by c^i δ c^{k-i}.
MorId act_word(const Comonad& c, FunctorPowers& pw, const SimplicialOperator& op, ObjId x) {
  const auto& X = *c.base();
  MorId acc = X.id(pw.power(op.n + 1).obj(x));
  for (const auto& g : factor(op)) {
    const int k = g.level;
    const auto& outer = pw.power(g.index);
    ObjId inner = pw.power(k - g.index).obj(x);
    MorId gen = outer.mor(g.kind == 'd' ? c.counit.at(inner) : c.comult.at(inner));
    acc = X.compose(gen, acc);
  }
  return acc;
}

std::vector<SimplicialOperator> ops_between(int a, int b) { return all_operators(a - 1, b - 1); }

std::string sizes(int a, int b) { return "a=" + std::to_string(a) + ",b=" + std::to_string(b); }

}  // namespace

MopBimodule mop_convert(const DistributiveLaw& law, int max_size) {
  if (max_size < 2) throw Error(ErrorKind::TruncationTooShallow, "M^op data needs ordinals of size 2");
  MopBimodule m;
  m.carrier = law.base();
  m.max_size = max_size;
  const auto& X = *m.carrier;
  FunctorPowers G(law.g.endo), H(law.h.endo);
  for (int a = 0; a <= max_size; ++a) {
    m.left.push_back(G.power(a));
    m.right.push_back(H.power(a));
  }
  for (int a = 0; a <= max_size; ++a) {
    for (int b = 0; b <= max_size; ++b) {
      for (const auto& op : ops_between(a, b)) {
        std::vector<MorId> lc(X.num_objects()), rc(X.num_objects());
        const auto rev = rev_op(op);
        for (ObjId x = 0; x < X.num_objects(); ++x) {
          lc[x] = act_word(law.g, G, op, x);
          rc[x] = act_word(law.h, H, rev, x);
        }
        m.left_op.emplace(op, NatTrans(m.left[a], m.left[b], std::move(lc)));
        m.right_op.emplace(op, NatTrans(m.right[a], m.right[b], std::move(rc)));
      }
    }
  }
  // λ_{1,x,b+1} = h(λ_{1,x,b}) ∘ λ_{1,h^b x,1} and λ_{a+1,x,b} = λ_{1,g^a x,b} ∘ g(λ_{a,x,b}).
  m.interchange.assign(max_size + 1, {});
  for (int a = 0; a <= max_size; ++a) {
    for (int b = 0; b <= max_size; ++b) {
      std::vector<MorId> c(X.num_objects());
      for (ObjId x = 0; x < X.num_objects(); ++x) {
        if (a == 0 || b == 0) {
          c[x] = X.id(G.power(a).obj(H.power(b).obj(x)));
        } else if (a == 1) {
          c[x] = X.compose(H.base().mor(m.interchange[1][b - 1].at(x)), law.lambda.at(H.power(b - 1).obj(x)));
        } else {
          c[x] = X.compose(m.interchange[1][b].at(G.power(a - 1).obj(x)), G.base().mor(m.interchange[a - 1][b].at(x)));
        }
      }
      m.interchange[a].emplace_back(compose(G.power(a), H.power(b)), compose(H.power(b), G.power(a)), std::move(c));
    }
  }
  return m;
}

DistributiveLaw mop_convert(const MopBimodule& m) {
  if (m.max_size < 2) throw Error(ErrorKind::TruncationTooShallow, "M^op data needs ordinals of size 2");
  const auto eps = face_op(0, 0);
  const auto delta = degen_op(0, 0);
  DistributiveLaw law;
  law.g = Comonad{m.left[1], m.left_op.at(delta), m.left_op.at(eps)};
  law.h = Comonad{m.right[1], m.right_op.at(delta), m.right_op.at(eps)};
  law.lambda = m.interchange[1][1];
  return law;
}

Report check_mop_bimodule(const MopBimodule& m) {
  const auto& X = *m.carrier;
  const int S = m.max_size;
  const auto& A = m.left_op;
  const auto& B = m.right_op;
  auto fail = [&](const std::string& rule, const std::string& w) { return Report::fail(rule, w + " (" + m.stamp() + ")"); };
  for (const auto& [op, t] : A) {
    if (auto r = check_nat_trans(t); !r) return fail("left." + r.rule, to_string(DuplicialOperator{0, op}));
  }
  for (const auto& [op, t] : B) {
    if (auto r = check_nat_trans(t); !r) return fail("right." + r.rule, to_string(DuplicialOperator{0, op}));
  }
  for (int a = 0; a <= S; ++a) {
    if (!(A.at(identity_op(a - 1)) == identity_nat(m.left[a]))) return fail("LeftIdentity", std::to_string(a));
    if (!(B.at(identity_op(a - 1)) == identity_nat(m.right[a]))) return fail("RightIdentity", std::to_string(a));
  }
  // Composition of operators.
  for (int a = 0; a <= S; ++a) {
    for (int b = 0; b <= S; ++b) {
      for (int c = 0; c <= S; ++c) {
        for (const auto& f : ops_between(a, b)) {
          for (const auto& g : ops_between(b, c)) {
            auto gf = compose_op(g, f);
            if (!(A.at(gf) == vertical(A.at(g), A.at(f)))) return fail("LeftComposition", sizes(a, c));
            if (!(B.at(gf) == vertical(B.at(g), B.at(f)))) return fail("RightComposition", sizes(a, c));
          }
        }
      }
    }
  }
  // Strictness against ordinal sum: (θ ⊕ θ')x = θ(θ'x) and x(θ ⊕ θ') = (xθ)θ'.
  for (int a = 0; a <= S; ++a) {
    for (int a2 = 0; a + a2 <= S; ++a2) {
      for (int b = 0; b <= S; ++b) {
        for (int b2 = 0; b + b2 <= S; ++b2) {
          for (const auto& f : ops_between(a, b)) {
            for (const auto& f2 : ops_between(a2, b2)) {
              const auto sum = ordinal_sum(f, f2);
              for (ObjId x = 0; x < X.num_objects(); ++x) {
                MorId lhs = A.at(sum).at(x);
                MorId rhs = X.compose(A.at(f).at(m.l_obj(b2, x)), m.left[a].mor(A.at(f2).at(x)));
                if (lhs != rhs) return fail("LeftStrict", sizes(a, a2) + ",x=" + X.object_name(x));
                lhs = B.at(sum).at(x);
                rhs = X.compose(B.at(f2).at(m.r_obj(x, b)), m.right[a2].mor(B.at(f).at(x)));
                if (lhs != rhs) return fail("RightStrict", sizes(a, a2) + ",x=" + X.object_name(x));
              }
            }
          }
        }
      }
    }
  }
  for (int a = 0; a <= S; ++a) {
    for (int b = 0; b <= S; ++b) {
      if (auto r = check_nat_trans(m.interchange[a][b]); !r) return fail("lambda." + r.rule, sizes(a, b));
    }
  }
  for (int a = 0; a <= S; ++a) {
    for (int b = 0; b <= S; ++b) {
      for (ObjId x = 0; x < X.num_objects(); ++x) {
        for (int a2 = 0; a2 <= S; ++a2) {
          for (const auto& f : ops_between(a, a2)) {
            MorId lhs = X.compose(m.lambda(a2, x, b), A.at(f).at(m.r_obj(x, b)));
            MorId rhs = X.compose(m.right[b].mor(A.at(f).at(x)), m.lambda(a, x, b));
            if (lhs != rhs) return fail("NaturalInA", sizes(a, b) + ",x=" + X.object_name(x));
          }
        }
        for (int b2 = 0; b2 <= S; ++b2) {
          for (const auto& f : ops_between(b, b2)) {
            MorId lhs = X.compose(m.lambda(a, x, b2), m.left[a].mor(B.at(f).at(x)));
            MorId rhs = X.compose(B.at(f).at(m.l_obj(a, x)), m.lambda(a, x, b));
            if (lhs != rhs) return fail("NaturalInB", sizes(a, b) + ",x=" + X.object_name(x));
          }
        }
        if (m.lambda(0, x, b) != X.id(m.r_obj(x, b))) return fail("L2", sizes(0, b));
        if (m.lambda(a, x, 0) != X.id(m.l_obj(a, x))) return fail("R2", sizes(a, 0));
        for (int c = 0; a + c <= S; ++c) {
          MorId lhs = m.lambda(a + c, x, b);
          MorId rhs = X.compose(m.lambda(a, m.l_obj(c, x), b), m.left[a].mor(m.lambda(c, x, b)));
          if (lhs != rhs) return fail("L1", sizes(a, b) + ",a'=" + std::to_string(c));
        }
        for (int c = 0; b + c <= S; ++c) {
          MorId lhs = m.lambda(a, x, b + c);
          MorId rhs = X.compose(m.right[c].mor(m.lambda(a, x, b)), m.lambda(a, m.r_obj(x, b), c));
          if (lhs != rhs) return fail("R1", sizes(a, b) + ",b'=" + std::to_string(c));
        }
      }
    }
  }
  return Report::pass();
}

Report check_mop_h0_object(const MopBimodule& m, const LaxH0Object& o) {
  const auto& X = *m.carrier;
  const int S = m.max_size;
  const ObjId x = o.x;
  if (static_cast<int>(o.xi.size()) != S + 1 || x < 0 || x >= X.num_objects()) {
    throw Error(ErrorKind::ShapeMismatch, "need xi_a for sizes 0.." + std::to_string(S));
  }
  for (int a = 0; a <= S; ++a) {
    if (X.src(o.xi[a]) != m.l_obj(a, x) || X.tgt(o.xi[a]) != m.r_obj(x, a)) {
      throw Error(ErrorKind::ShapeMismatch, "xi_a must be g^a x -> h^a x");
    }
  }
  auto fail = [&](const std::string& rule, const std::string& w) { return Report::fail(rule, w + " (" + m.stamp() + ")"); };
  if (o.xi[0] != X.id(x)) return fail("XiUnit", X.object_name(x));
  for (int a = 0; a <= S; ++a) {
    for (int a2 = 0; a2 <= S; ++a2) {
      for (const auto& f : ops_between(a, a2)) {
        if (X.compose(o.xi[a2], m.left_op.at(f).at(x)) != X.compose(m.right_op.at(f).at(x), o.xi[a])) {
          return fail("XiNatural", to_string(DuplicialOperator{0, f}));
        }
      }
    }
  }
  for (int a = 0; a <= S; ++a) {
    for (int b = 0; a + b <= S; ++b) {
      MorId lhs = X.compose_chain({m.right[b].mor(o.xi[a]), m.lambda(a, x, b), m.left[a].mor(o.xi[b])});
      if (lhs != o.xi[a + b]) return fail("XiCocycle", sizes(a, b));
    }
  }
  return Report::pass();
}

namespace {

LaxH0Object extend_xi(const MopBimodule& m, ObjId x, MorId xi1) {
  const auto& X = *m.carrier;
  LaxH0Object o{x, {X.id(x), xi1}};
  for (int k = 2; k <= m.max_size; ++k) {
    o.xi.push_back(X.compose_chain({m.right[1].mor(o.xi[k - 1]), m.lambda(k - 1, x, 1), m.left[k - 1].mor(xi1)}));
  }
  return o;
}

MopCocycle extend_phi(const MopBimodule& m, const FinFunctor& f, const std::vector<MorId>& phi1) {
  const auto& X = *m.carrier;
  const auto& P = *f.cod();
  MopCocycle c{f, {std::vector<MorId>(X.num_objects()), phi1}};
  for (ObjId x = 0; x < X.num_objects(); ++x) c.phi[0][x] = P.id(f.obj(x));
  for (int k = 1; k < m.max_size; ++k) {
    std::vector<MorId> next(X.num_objects());
    for (ObjId x = 0; x < X.num_objects(); ++x) {
      next[x] = P.compose_chain({c.phi[k][m.l_obj(1, x)], f.mor(m.lambda(1, x, k)), phi1[m.r_obj(x, k)]});
    }
    c.phi.push_back(std::move(next));
  }
  return c;
}

}  // namespace

std::vector<LaxH0Object> enumerate_mop_h0(const MopBimodule& m, Budget& budget) {
  const auto& X = *m.carrier;
  std::vector<LaxH0Object> out;
  for (ObjId x = 0; x < X.num_objects(); ++x) {
    for (MorId xi : X.hom(m.l_obj(1, x), m.r_obj(x, 1))) {
      budget.charge();
      auto o = extend_xi(m, x, xi);
      if (check_mop_h0_object(m, o)) out.push_back(std::move(o));
    }
  }
  return out;
}

LaxH0Object mop_h0_object(const MopBimodule& m, const RightCoalgebra& r) { return extend_xi(m, r.x, r.xi); }

Report check_mop_cocycle(const MopBimodule& m, const MopCocycle& c) {
  const auto& X = *m.carrier;
  const auto& f = c.f;
  const int S = m.max_size;
  if (!same_category(f.dom(), m.carrier) || static_cast<int>(c.phi.size()) != S + 1) {
    throw Error(ErrorKind::ShapeMismatch, "cocycle needs phi_a for sizes 0.." + std::to_string(S));
  }
  const auto& P = *f.cod();
  for (int a = 0; a <= S; ++a) {
    for (ObjId x = 0; x < X.num_objects(); ++x) {
      if (P.src(c.phi[a][x]) != f.obj(m.r_obj(x, a)) || P.tgt(c.phi[a][x]) != f.obj(m.l_obj(a, x))) {
        throw Error(ErrorKind::ShapeMismatch, "phi_a must be f h^a -> f g^a");
      }
    }
  }
  auto fail = [&](const std::string& rule, const std::string& w) { return Report::fail(rule, w + " (" + m.stamp() + ")"); };
  if (auto r = check_functor(f); !r) return fail("f." + r.rule, r.witness);
  for (int a = 0; a <= S; ++a) {
    for (MorId w = 0; w < X.num_morphisms(); ++w) {
      MorId lhs = P.compose(c.phi[a][X.tgt(w)], f.mor(m.right[a].mor(w)));
      MorId rhs = P.compose(f.mor(m.left[a].mor(w)), c.phi[a][X.src(w)]);
      if (lhs != rhs) return fail("PhiNaturalInX", "a=" + std::to_string(a) + ",w=" + X.morphism_name(w));
    }
  }
  for (ObjId x = 0; x < X.num_objects(); ++x) {
    if (c.phi[0][x] != P.id(f.obj(x))) return fail("PhiUnit", X.object_name(x));
    for (int a = 0; a <= S; ++a) {
      for (int a2 = 0; a2 <= S; ++a2) {
        for (const auto& op : ops_between(a, a2)) {
          MorId lhs = P.compose(c.phi[a2][x], f.mor(m.right_op.at(op).at(x)));
          MorId rhs = P.compose(f.mor(m.left_op.at(op).at(x)), c.phi[a][x]);
          if (lhs != rhs) return fail("PhiNaturalInA", to_string(DuplicialOperator{0, op}) + ",x=" + X.object_name(x));
        }
      }
      for (int b = 0; a + b <= S; ++b) {
        MorId lhs = P.compose_chain({c.phi[a][m.l_obj(b, x)], f.mor(m.lambda(b, x, a)), c.phi[b][m.r_obj(x, a)]});
        if (lhs != c.phi[a + b][x]) return fail("PhiCocycle", sizes(a, b) + ",x=" + X.object_name(x));
      }
    }
  }
  return Report::pass();
}

std::vector<MopCocycle> enumerate_mop_cocycles(const MopBimodule& m, const CatPtr& p, Budget& budget) {
  std::vector<MopCocycle> out;
  for (const auto& f : enumerate_functors(m.carrier, p, budget)) {
    for (const auto& phi : enumerate_nat_trans(compose(f, m.right[1]), compose(f, m.left[1]), budget)) {
      auto c = extend_phi(m, f, phi.components());
      if (check_mop_cocycle(m, c)) out.push_back(std::move(c));
    }
  }
  return out;
}

MopCocycle mop_cocycle(const MopBimodule& m, const LeftCoalgebra& l) { return extend_phi(m, l.f, l.phi.components()); }

RightFamily single_family(const RightCoalgebra& r) {
  return {share(catalog::terminal()), {r}, {r.law.base()->id(r.x)}};
}

Report check_right_family(const RightFamily& y) {
  const auto& Y = *y.index;
  if (static_cast<int>(y.objects.size()) != Y.num_objects() || static_cast<int>(y.maps.size()) != Y.num_morphisms() ||
      y.objects.empty()) {
    throw Error(ErrorKind::ShapeMismatch, "family needs one coalgebra per object and one map per morphism");
  }
  const auto& law = y.objects.front().law;
  const auto& X = *law.base();
  for (const auto& r : y.objects) {
    if (!(r.law == law)) throw Error(ErrorKind::ShapeMismatch, "family over different laws");
    if (auto rep = check_right_coalgebra(r); !rep) return Report::fail("Coalgebra." + rep.rule, rep.witness);
  }
  for (MorId q = 0; q < Y.num_morphisms(); ++q) {
    const auto& s = y.objects[Y.src(q)];
    const auto& t = y.objects[Y.tgt(q)];
    MorId w = y.maps[q];
    if (X.src(w) != s.x || X.tgt(w) != t.x) throw Error(ErrorKind::ShapeMismatch, "family map endpoints");
    if (X.compose(t.xi, law.g.endo.mor(w)) != X.compose(law.h.endo.mor(w), s.xi)) {
      return Report::fail("MapCommutesWithXi", Y.morphism_name(q));
    }
    if (Y.is_identity(q) && w != X.id(s.x)) return Report::fail("FunctorIdentity", Y.morphism_name(q));
  }
  for (MorId q = 0; q < Y.num_morphisms(); ++q) {
    for (MorId r = 0; r < Y.num_morphisms(); ++r) {
      if (Y.src(r) != Y.tgt(q)) continue;
      if (y.maps[Y.compose(r, q)] != X.compose(y.maps[r], y.maps[q])) {
        return Report::fail("FunctorComposition", Y.morphism_name(r) + "," + Y.morphism_name(q));
      }
    }
  }
  return Report::pass();
}

CapResult bs_cap(const LeftCoalgebra& l, const RightFamily& y, int trunc) {
  if (trunc < 2) throw Error(ErrorKind::TruncationTooShallow, "reading off t_0 needs truncation at least 2");
  if (auto r = check_left_coalgebra(l); !r) throw Error(ErrorKind::CoalgebraInvalid, "left: " + r.describe());
  if (auto r = check_right_family(y); !r) throw Error(ErrorKind::CoalgebraInvalid, "right: " + r.describe());
  if (!(y.objects.front().law == l.law)) throw Error(ErrorKind::CoalgebraInvalid, "left and right over different laws");

  const int S = trunc + 1;
  const auto M = mop_convert(l.law, S);
  const auto c = mop_cocycle(M, l);
  if (auto r = check_mop_cocycle(M, c); !r) throw Error(ErrorKind::CoalgebraInvalid, "left as cocycle: " + r.describe());
  const auto& f = l.f;
  const auto& P = *f.cod();
  const CatTarget tg{f.cod()};

  CapResult out;
  auto note = [&](const std::string& rule, const std::string& w) {
    if (out.report) out.report = Report::fail(rule, w + " (" + M.stamp() + ")");
  };
  std::vector<LaxH0Object> objs;
  for (const auto& r : y.objects) {
    auto o = mop_h0_object(M, r);
    if (auto rep = check_mop_h0_object(M, o); !rep) throw Error(ErrorKind::CoalgebraInvalid, "right as H0 object: " + rep.describe());
    objs.push_back(std::move(o));
  }

  for (std::size_t k = 0; k < objs.size(); ++k) {
    const auto& o = objs[k];
    const ObjId x = o.x;
    // Unit of the homology adjunction composed with (f, φ): ρ_{a,x}(b) = f(λ_{a,x,b}) ∘ φ_{xb,a}.
    auto rho = [&](int a, int b) { return P.compose(f.mor(M.lambda(a, x, b)), c.phi[a][M.r_obj(x, b)]); };
    // H^0 applied: ξ'_a(b) = f(ξ_a b) ∘ ρ_{a,x}(b). Transposed, this is the
    // cocycle Φ_{b,a}: F(b ⊕ a) -> F(a ⊕ b) of F = f(x -) on the regular bimodule.
    auto Phi = [&](int b, int a) { return P.compose(f.mor(M.right[b].mor(o.xi[a])), rho(a, b)); };
    auto Fobj = [&](int s) { return f.obj(M.r_obj(x, s)); };
    auto Fmor = [&](const SimplicialOperator& op) { return f.mor(M.right_op.at(op).at(x)); };

    for (int a = 0; a <= S; ++a) {
      for (int b = 0; a + b <= S; ++b) {
        if (P.src(Phi(b, a)) != Fobj(a + b) || P.tgt(Phi(b, a)) != Fobj(a + b)) note("PhiShape", sizes(a, b));
      }
    }
    for (int b = 0; b <= S; ++b) {
      if (Phi(b, 0) != P.id(Fobj(b))) note("PhiUnit", "b=" + std::to_string(b));
    }
    for (int a = 0; a <= S; ++a) {
      for (int b = 0; b <= S; ++b) {
        for (int b2 = 0; b2 + a <= S && b + a <= S; ++b2) {
          for (const auto& op : ops_between(b, b2)) {
            const auto ia = identity_op(a - 1);
            MorId lhs = P.compose(Phi(b2, a), Fmor(ordinal_sum(op, ia)));
            MorId rhs = P.compose(Fmor(ordinal_sum(ia, op)), Phi(b, a));
            if (lhs != rhs) note("PhiNaturalInX", sizes(a, b) + "," + to_string(DuplicialOperator{0, op}));
          }
        }
        for (int a2 = 0; a2 + b <= S && a + b <= S; ++a2) {
          for (const auto& op : ops_between(a, a2)) {
            const auto ib = identity_op(b - 1);
            MorId lhs = P.compose(Phi(b, a2), Fmor(ordinal_sum(ib, op)));
            MorId rhs = P.compose(Fmor(ordinal_sum(op, ib)), Phi(b, a));
            if (lhs != rhs) note("PhiNaturalInA", sizes(a, b) + "," + to_string(DuplicialOperator{0, op}));
          }
        }
        for (int b2 = 0; a + b + b2 <= S; ++b2) {
          // Φ_{x, a ⊕ b2} = Φ_{b2 ⊕ x, a} ∘ Φ_{x ⊕ a, b2}, the interchange being strict.
          if (Phi(b, a + b2) != P.compose(Phi(b2 + b, a), Phi(b + a, b2))) note("PhiCocycle", sizes(a, b));
        }
      }
    }

    // Read off through the decalage correspondence: levels F(n+1), faces and
    // degeneracies from the right action, t from the map Dec_r -> Dec_l
    // whose component at level n is Φ_{n+1,1}.
    auto X = TruncAugSimplicial<CatTarget>::build(
        tg, trunc, true, [&](int n) { return Fobj(n + 1); }, [&](int n, int i) { return Fmor(face_op(n, i)); },
        [&](int n, int j) { return Fmor(degen_op(n, j)); });
    SimplicialMap<CatTarget> dm{-1, {}};
    for (int n = -1; n <= trunc - 1; ++n) dm.components.push_back(Phi(n + 1, 1));
    DuplicialFamily<CatTarget> F;
    try {
      F = decalage_map_to_family(X, dm);
    } catch (const Error& e) {
      note("DecalageMap", e.what());
      F = DuplicialFamily<CatTarget>{X, std::vector<MorId>(trunc + 1, P.id(Fobj(1)))};
    }
    if (F.t[0] != Phi(0, 1)) note("T0", "y=" + y.index->object_name(static_cast<ObjId>(k)));
    out.families.push_back(std::move(F));
  }

  const auto& Y = *y.index;
  for (MorId q = 0; q < Y.num_morphisms(); ++q) {
    SimplicialMap<CatTarget> sm{-1, {}};
    for (int n = -1; n <= trunc; ++n) sm.components.push_back(f.mor(M.right[n + 1].mor(y.maps[q])));
    if (auto r = check_duplicial_map(out.families[Y.src(q)], out.families[Y.tgt(q)], sm); !r) {
      note("NaturalInY." + r.rule, Y.morphism_name(q) + " " + r.witness);
    }
    out.maps.push_back(std::move(sm));
  }
  return out;
}

namespace {

template <class T>
Report index_check(const DuplicialFamily<T>& F, int N) {
  const T& tg = F.base.target();
  N = std::min({N, F.base.trunc(), 6});
  auto eval = [&](const DuplicialOperator& o) -> std::optional<typename T::Map> {
    try {
      return eval_op(o, F);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OutOfTruncation) throw;
      return std::nullopt;
    }
  };
  const int lo = F.base.bottom();
  std::vector<DuplicialOperator> ops;
  for (int n = lo; n <= N; ++n) {
    for (int m = lo; m <= N; ++m) {
      for (const auto& s : all_operators(n, m)) {
        for (int k = 0; k <= (m >= 0 ? m + 1 : 0); ++k) ops.push_back({k, s});
      }
    }
  }
  for (const auto& o : ops) {
    if (o.k == 0 && o.n() == o.m() && o.simp == identity_op(o.n())) {
      auto e = eval(o);
      if (e && *e != tg.identity(F.base.level(o.n()))) return Report::fail("IdentityOperator", to_string(o));
    }
  }
  for (const auto& a : ops) {
    for (const auto& b : ops) {
      if (a.n() != b.m()) continue;
      auto ea = eval(a), eb = eval(b);
      if (!ea || !eb) continue;
      auto ec = eval(compose_duplicial(a, b));
      if (!ec) continue;
      if (*ec != tg.compose(*ea, *eb)) return Report::fail("EvalFunctorial", to_string(a) + " after " + to_string(b));
    }
  }
  // φ_{x,a} = t^{|a|} in degree |x|+|a|-1 on the regular M^op bimodule.
  auto phi = [&](int x, int a) { return DuplicialOperator{x + a >= 1 ? a : 0, identity_op(x + a - 1)}; };
  auto simp = [](const SimplicialOperator& s) { return DuplicialOperator{0, s}; };
  const int S = N + 1;
  for (int x = 0; x <= S; ++x) {
    if (!(phi(x, 0) == simp(identity_op(x - 1)))) return Report::fail("PhiUnit", std::to_string(x));
    for (int a = 0; x + a <= S; ++a) {
      for (int x2 = 0; x2 + a <= S; ++x2) {
        for (const auto& op : all_operators(x - 1, x2 - 1)) {
          const auto ia = identity_op(a - 1);
          auto lhs = compose_duplicial(phi(x2, a), simp(ordinal_sum(op, ia)));
          auto rhs = compose_duplicial(simp(ordinal_sum(ia, op)), phi(x, a));
          if (!(lhs == rhs)) return Report::fail("PhiNaturalInX", to_string(lhs) + " vs " + to_string(rhs));
          auto el = eval(lhs), er = eval(rhs);
          if (el && er && *el != *er) return Report::fail("PhiNaturalInXEval", to_string(lhs));
        }
      }
      for (int a2 = 0; x + a2 <= S; ++a2) {
        for (const auto& op : all_operators(a - 1, a2 - 1)) {
          const auto ix = identity_op(x - 1);
          auto lhs = compose_duplicial(phi(x, a2), simp(ordinal_sum(ix, op)));
          auto rhs = compose_duplicial(simp(ordinal_sum(op, ix)), phi(x, a));
          if (!(lhs == rhs)) return Report::fail("PhiNaturalInA", to_string(lhs) + " vs " + to_string(rhs));
          auto el = eval(lhs), er = eval(rhs);
          if (el && er && *el != *er) return Report::fail("PhiNaturalInAEval", to_string(lhs));
        }
      }
      for (int b = 0; x + a + b <= S; ++b) {
        if (!(phi(x, a + b) == compose_duplicial(phi(b + x, a), phi(x + a, b)))) {
          return Report::fail("PhiCocycle", "x=" + std::to_string(x) + ",a=" + std::to_string(a) + ",b=" + std::to_string(b));
        }
      }
    }
  }
  for (int n = 0; n <= N; ++n) {
    auto e = eval(phi(n, 1));
    if (!e || *e != F.t[n]) return Report::fail("GeneratorIsT", "n=" + std::to_string(n));
  }
  return Report::pass();
}

}  // namespace

Report duplicial_index_check(const DuplicialFamily<SetTarget>& F, int N) { return index_check(F, N); }
Report duplicial_index_check(const DuplicialFamily<CatTarget>& F, int N) { return index_check(F, N); }

Report duplicial_index_check(int N) {
  auto c = share(catalog::cyclic_group(2));
  const int trunc = std::max(1, std::min(N, 6));
  auto F = nerve_family(nerve(c, trunc), canonical_groupoid(*c));
  return index_check(F, N);
}

}  // namespace duplex
