#include "duplex/catalog.hpp"

#include <string>

#include "duplex/moncat.hpp"

namespace duplex::catalog {

FinCategory terminal() { return discrete(1); }

FinCategory discrete(int n) {
  CategoryBuilder b;
  for (int i = 0; i < n; ++i) b.add_object(std::to_string(i));
  return b.finish();
}

FinCategory chain(int n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    for (int c = a; c < n; ++c) leq[a][c] = true;
  }
  return poset(leq);
}

FinCategory poset(const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  CategoryBuilder b;
  for (int i = 0; i < n; ++i) b.add_object(std::to_string(i));
  std::vector<std::vector<MorId>> arrow(n, std::vector<MorId>(n, kUndefined));
  for (int a = 0; a < n; ++a) {
    arrow[a][a] = b.identity(a);
    for (int c = 0; c < n; ++c) {
      if (a != c && leq[a][c]) arrow[a][c] = b.add_morphism(a, c, std::to_string(a) + "<" + std::to_string(c));
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int m = 0; m < n; ++m) {
      for (int c = 0; c < n; ++c) {
        if (a == m || m == c) continue;
        if (arrow[a][m] != kUndefined && arrow[m][c] != kUndefined) {
          b.set_comp(arrow[m][c], arrow[a][m], arrow[a][c]);
        }
      }
    }
  }
  return b.finish();
}

FinCategory monoid(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  CategoryBuilder b;
  b.add_object("*");
  std::vector<MorId> ids{b.identity(0)};
  for (int e = 1; e < n; ++e) ids.push_back(b.add_morphism(0, 0, "m" + std::to_string(e)));
  for (int g = 1; g < n; ++g) {
    for (int f = 1; f < n; ++f) b.set_comp(ids[g], ids[f], ids[table[g][f]]);
  }
  return b.finish();
}

FinCategory cyclic_group(int n) { return monoid(cyclic_table(n)); }

FinCategory s3() { return monoid(s3_table()); }

FinCategory contractible_groupoid(int n) {
  CategoryBuilder b;
  for (int i = 0; i < n; ++i) b.add_object(std::to_string(i));
  std::vector<std::vector<MorId>> arrow(n, std::vector<MorId>(n));
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      arrow[a][c] = a == c ? b.identity(a) : b.add_morphism(a, c, std::to_string(a) + "~" + std::to_string(c));
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int m = 0; m < n; ++m) {
      for (int c = 0; c < n; ++c) {
        if (a != m && m != c) b.set_comp(arrow[m][c], arrow[a][m], arrow[a][c]);
      }
    }
  }
  return b.finish();
}

FinCategory parallel_pair() {
  CategoryBuilder b;
  ObjId x = b.add_object("0");
  ObjId y = b.add_object("1");
  b.add_morphism(x, y, "u");
  b.add_morphism(x, y, "v");
  return b.finish();
}

FinCategory iso_with_cone() {
  CategoryBuilder b;
  ObjId o0 = b.add_object("0");
  ObjId o1 = b.add_object("1");
  ObjId o2 = b.add_object("2");
  MorId a = b.add_morphism(o0, o1, "a");
  MorId ai = b.add_morphism(o1, o0, "a'");
  MorId u = b.add_morphism(o0, o2, "u");
  MorId v = b.add_morphism(o1, o2, "v");
  b.set_comp(ai, a, b.identity(o0));
  b.set_comp(a, ai, b.identity(o1));
  b.set_comp(v, a, u);
  b.set_comp(u, ai, v);
  return b.finish();
}

FinCategory product(const FinCategory& c, const FinCategory& d) {
  RawCategory raw;
  for (int a = 0; a < c.num_objects(); ++a) {
    for (int x = 0; x < d.num_objects(); ++x) {
      raw.objects.push_back("(" + c.object_name(a) + "," + d.object_name(x) + ")");
    }
  }
  const int dm = d.num_morphisms();
  for (int u = 0; u < c.num_morphisms(); ++u) {
    for (int v = 0; v < dm; ++v) {
      raw.morphisms.push_back({pair_obj(d, c.src(u), d.src(v)), pair_obj(d, c.tgt(u), d.tgt(v)),
                               "(" + c.morphism_name(u) + "," + d.morphism_name(v) + ")"});
    }
  }
  for (int a = 0; a < c.num_objects(); ++a) {
    for (int x = 0; x < d.num_objects(); ++x) raw.identity.push_back(pair_mor(d, c.id(a), d.id(x)));
  }
  for (int u2 = 0; u2 < c.num_morphisms(); ++u2) {
    for (int u1 = 0; u1 < c.num_morphisms(); ++u1) {
      MorId u = c.comp_or_undefined(u2, u1);
      if (u == kUndefined) continue;
      for (int v2 = 0; v2 < dm; ++v2) {
        for (int v1 = 0; v1 < dm; ++v1) {
          MorId v = d.comp_or_undefined(v2, v1);
          if (v == kUndefined) continue;
          raw.comp.push_back({pair_mor(d, u2, v2), pair_mor(d, u1, v1), pair_mor(d, u, v)});
        }
      }
    }
  }
  return FinCategory::from_raw(raw);
}

FinCategory opposite(const FinCategory& c) {
  RawCategory raw = c.to_raw();
  for (auto& m : raw.morphisms) std::swap(m.src, m.tgt);
  for (auto& t : raw.comp) std::swap(t[0], t[1]);
  return FinCategory::from_raw(raw);
}

FinCategory coproduct(const FinCategory& c, const FinCategory& d) {
  RawCategory raw = c.to_raw();
  RawCategory rd = d.to_raw();
  const int no = c.num_objects();
  const int nm = c.num_morphisms();
  for (auto& o : rd.objects) raw.objects.push_back(o + "'");
  for (auto m : rd.morphisms) {
    raw.morphisms.push_back({m.src + no, m.tgt + no, m.name + "'"});
  }
  for (MorId i : rd.identity) raw.identity.push_back(i + nm);
  for (auto t : rd.comp) raw.comp.push_back({t[0] + nm, t[1] + nm, t[2] + nm});
  return FinCategory::from_raw(raw);
}

namespace {

// All monoid tables on {0..n-1} with identity 0, associativity checked.
void all_monoids(int n, std::vector<FinCategory>& out) {
  const int free_cells = (n - 1) * (n - 1);
  std::vector<int> cells(free_cells, 0);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    t[0][a] = a;
    t[a][0] = a;
  }
  while (true) {
    for (int i = 0; i < free_cells; ++i) t[1 + i / (n - 1)][1 + i % (n - 1)] = cells[i];
    bool assoc = true;
    for (int a = 0; a < n && assoc; ++a) {
      for (int b = 0; b < n && assoc; ++b) {
        for (int c = 0; c < n && assoc; ++c) assoc = t[t[a][b]][c] == t[a][t[b][c]];
      }
    }
    if (assoc) out.push_back(monoid(t));
    int i = 0;
    while (i < free_cells && ++cells[i] == n) cells[i++] = 0;
    if (i == free_cells) break;
  }
}

void all_posets(int n, std::vector<FinCategory>& out) {
  const int pairs = n * (n - 1);
  for (int mask = 0; mask < (1 << pairs); ++mask) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    int bit = 0;
    for (int a = 0; a < n; ++a) {
      leq[a][a] = true;
      for (int c = 0; c < n; ++c) {
        if (a != c) leq[a][c] = (mask >> bit++) & 1;
      }
    }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int c = 0; c < n && ok; ++c) {
        if (a != c && leq[a][c] && leq[c][a]) ok = false;
        for (int e = 0; e < n && ok; ++e) {
          if (leq[a][c] && leq[c][e] && !leq[a][e]) ok = false;
        }
      }
    }
    if (ok) out.push_back(poset(leq));
  }
}

}  // namespace

std::vector<FinCategory> small_fixtures(int max_morphisms) {
  std::vector<FinCategory> all;
  all.push_back(terminal());
  for (int n = 2; n <= 4; ++n) all.push_back(discrete(n));
  for (int n = 2; n <= 4; ++n) all_monoids(n, all);
  for (int n = 2; n <= 3; ++n) all_posets(n, all);
  all.push_back(cyclic_group(5));
  all.push_back(cyclic_group(6));
  all.push_back(s3());
  all.push_back(contractible_groupoid(2));
  all.push_back(contractible_groupoid(3));
  all.push_back(parallel_pair());
  all.push_back(iso_with_cone());
  all.push_back(coproduct(chain(2), terminal()));
  all.push_back(coproduct(cyclic_group(2), terminal()));
  all.push_back(coproduct(cyclic_group(2), cyclic_group(2)));
  all.push_back(coproduct(contractible_groupoid(2), terminal()));
  std::vector<FinCategory> out;
  for (auto& c : all) {
    if (c.num_morphisms() <= max_morphisms) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace duplex::catalog
