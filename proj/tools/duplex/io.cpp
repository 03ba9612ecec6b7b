#include "io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "duplex/catalog.hpp"

namespace duplex::io {

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("field '") + key + "' has the wrong type");
  }
}

const json& sub(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

ObjId obj_named(const FinCategory& c, const json& v) {
  if (v.is_number_integer()) {
    int x = v.get<int>();
    if (x < 0 || x >= c.num_objects()) throw InputError("object id out of range");
    return x;
  }
  if (!v.is_string()) throw InputError("object reference must be a name or an id");
  auto x = c.find_object(v.get<std::string>());
  if (!x) throw InputError("unknown object '" + v.get<std::string>() + "'");
  return *x;
}

MorId mor_named(const FinCategory& c, const json& v) {
  if (v.is_number_integer()) {
    int f = v.get<int>();
    if (f < 0 || f >= c.num_morphisms()) throw InputError("morphism id out of range");
    return f;
  }
  if (!v.is_string()) throw InputError("morphism reference must be a name or an id");
  auto f = c.find_morphism(v.get<std::string>());
  if (!f) throw InputError("unknown morphism '" + v.get<std::string>() + "'");
  return *f;
}

std::vector<MorId> mor_list(const FinCategory& c, const json& v, int expected) {
  if (!v.is_array() || static_cast<int>(v.size()) != expected) {
    throw InputError("expected a list of " + std::to_string(expected) + " morphisms");
  }
  std::vector<MorId> out;
  for (const auto& e : v) out.push_back(mor_named(c, e));
  return out;
}

std::vector<std::vector<int>> table(const json& j, const char* key, int rows, int cols, int range) {
  auto t = field<std::vector<std::vector<int>>>(j, key);
  if (static_cast<int>(t.size()) != rows) throw InputError(std::string("table '") + key + "' has the wrong height");
  for (const auto& r : t) {
    if (static_cast<int>(r.size()) != cols) throw InputError(std::string("table '") + key + "' has the wrong width");
    for (int v : r) {
      if (v < 0 || v >= range) throw InputError(std::string("table '") + key + "' entry out of range");
    }
  }
  return t;
}

FinCategory from_catalog(const json& j) {
  auto name = field<std::string>(j, "catalog");
  auto n = [&] {
    int k = field<int>(j, "n");
    if (k < 1 || k > 64) throw InputError("catalog size out of range");
    return k;
  };
  if (name == "terminal") return catalog::terminal();
  if (name == "discrete") return catalog::discrete(n());
  if (name == "chain") return catalog::chain(n());
  if (name == "cyclic_group") return catalog::cyclic_group(n());
  if (name == "s3") return catalog::s3();
  if (name == "contractible_groupoid") return catalog::contractible_groupoid(n());
  if (name == "parallel_pair") return catalog::parallel_pair();
  if (name == "iso_with_cone") return catalog::iso_with_cone();
  if (name == "monoid") return catalog::monoid(field<std::vector<std::vector<int>>>(j, "table"));
  throw InputError("unknown catalog entry '" + name + "'");
}

}  // namespace

json load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  if (j.is_object() && j.contains("duplex-schema") && j["duplex-schema"] != kSchema) {
    throw InputError(path + ": unsupported schema version");
  }
  return j;
}

CategoryValidation read_raw_category(const json& j) {
  if (j.is_object() && j.contains("catalog")) {
    auto c = from_catalog(j);
    return {c, Report::pass()};
  }
  RawCategory raw;
  std::map<std::string, ObjId> objs;
  std::map<std::string, MorId> mors;
  for (const auto& o : field<std::vector<std::string>>(j, "objects")) {
    if (objs.count(o)) throw InputError("duplicate object '" + o + "'");
    objs[o] = static_cast<ObjId>(raw.objects.size());
    raw.objects.push_back(o);
  }
  for (std::size_t x = 0; x < raw.objects.size(); ++x) {
    std::string n = "1_" + raw.objects[x];
    mors[n] = static_cast<MorId>(raw.morphisms.size());
    raw.identity.push_back(static_cast<MorId>(raw.morphisms.size()));
    raw.morphisms.push_back({static_cast<ObjId>(x), static_cast<ObjId>(x), n});
  }
  auto obj_ref = [&](const json& v) {
    if (!v.is_string() || !objs.count(v.get<std::string>())) throw InputError("unknown object in morphism list");
    return objs[v.get<std::string>()];
  };
  if (j.contains("morphisms")) {
    for (const auto& m : j.at("morphisms")) {
      auto id = field<std::string>(m, "id");
      ObjId s = obj_ref(sub(m, "src")), t = obj_ref(sub(m, "tgt"));
      if (mors.count(id)) {
        // Listing an identity explicitly is allowed.
        if (raw.identity[s] == mors[id] && s == t) continue;
        throw InputError("duplicate morphism '" + id + "'");
      }
      mors[id] = static_cast<MorId>(raw.morphisms.size());
      raw.morphisms.push_back({s, t, id});
    }
  }
  auto mor_ref = [&](const json& v) {
    if (!v.is_string() || !mors.count(v.get<std::string>())) throw InputError("unknown morphism in comp");
    return mors[v.get<std::string>()];
  };
  std::map<std::pair<MorId, MorId>, MorId> comp;
  if (j.contains("comp")) {
    for (const auto& c : j.at("comp")) {
      if (!c.is_array() || c.size() != 3) throw InputError("comp entries are [g, f, gf]");
      comp[{mor_ref(c[0]), mor_ref(c[1])}] = mor_ref(c[2]);
    }
  }
  for (MorId f = 0; f < static_cast<MorId>(raw.morphisms.size()); ++f) {
    comp.try_emplace({raw.identity[raw.morphisms[f].tgt], f}, f);
    comp.try_emplace({f, raw.identity[raw.morphisms[f].src]}, f);
  }
  for (const auto& [gf, h] : comp) raw.comp.push_back({gf.first, gf.second, h});
  try {
    return validate_category(raw);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

CatPtr read_category(const json& j) {
  auto v = read_raw_category(j);
  if (!v.category) throw InputError("not a category: " + v.report.describe());
  return share(*v.category);
}

json write_category(const FinCategory& c) {
  json j;
  j["objects"] = json::array();
  for (ObjId x = 0; x < c.num_objects(); ++x) j["objects"].push_back(c.object_name(x));
  j["morphisms"] = json::array();
  for (MorId f = 0; f < c.num_morphisms(); ++f) {
    if (c.is_identity(f)) continue;
    j["morphisms"].push_back({{"id", c.morphism_name(f)}, {"src", c.object_name(c.src(f))}, {"tgt", c.object_name(c.tgt(f))}});
  }
  j["comp"] = json::array();
  for (MorId g = 0; g < c.num_morphisms(); ++g) {
    for (MorId f = 0; f < c.num_morphisms(); ++f) {
      if (c.is_identity(g) || c.is_identity(f) || c.src(g) != c.tgt(f)) continue;
      j["comp"].push_back({c.morphism_name(g), c.morphism_name(f), c.morphism_name(c.compose(g, f))});
    }
  }
  return j;
}

FinFunctor read_functor(const json& j, const CatPtr& dom, const CatPtr& cod) {
  if (j.is_string() && j.get<std::string>() == "identity") {
    if (!same_category(dom, cod)) throw InputError("identity functor between different categories");
    return identity_functor(dom);
  }
  const auto& o = sub(j, "obj");
  if (!o.is_array() || static_cast<int>(o.size()) != dom->num_objects()) throw InputError("functor object map has the wrong length");
  std::vector<ObjId> om;
  for (const auto& v : o) om.push_back(obj_named(*cod, v));
  auto mm = mor_list(*cod, sub(j, "mor"), dom->num_morphisms());
  FinFunctor f;
  try {
    f = FinFunctor(dom, cod, om, mm);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  if (auto r = check_functor(f); !r) throw InputError("not a functor: " + r.describe());
  return f;
}

NatTrans read_nat(const json& j, const FinFunctor& src, const FinFunctor& tgt) {
  std::vector<MorId> comps;
  if (j.is_string() && j.get<std::string>() == "identity") {
    for (ObjId x = 0; x < src.dom()->num_objects(); ++x) {
      if (src.obj(x) != tgt.obj(x)) throw InputError("identity components between different objects");
      comps.push_back(src.cod()->id(src.obj(x)));
    }
  } else {
    comps = mor_list(*src.cod(), j, src.dom()->num_objects());
  }
  try {
    return NatTrans(src, tgt, comps);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

Comonad read_comonad(const json& j, const CatPtr& c) {
  if (j.is_string() && j.get<std::string>() == "identity") return identity_comonad(c);
  auto g = read_functor(sub(j, "endo"), c, c);
  return Comonad{g, read_nat(sub(j, "comult"), g, compose(g, g)), read_nat(sub(j, "counit"), g, identity_functor(c))};
}

DistributiveLaw read_law(const json& j) {
  auto c = read_category(sub(j, "category"));
  DistributiveLaw law;
  law.g = read_comonad(sub(j, "g"), c);
  law.h = j.contains("h") ? read_comonad(j.at("h"), c) : law.g;
  law.lambda = read_nat(sub(j, "lambda"), compose(law.g.endo, law.h.endo), compose(law.h.endo, law.g.endo));
  return law;
}

LeftCoalgebra read_left(const json& j, const DistributiveLaw& law) {
  const auto& c = law.base();
  if (!j.is_object() || !j.contains("left")) {
    auto f = identity_functor(c);
    return LeftCoalgebra{law, f, read_nat(json("identity"), compose(f, law.h.endo), compose(f, law.g.endo))};
  }
  const auto& l = j.at("left");
  CatPtr p = l.contains("target") ? read_category(l.at("target")) : c;
  auto f = l.contains("f") ? read_functor(l.at("f"), c, p) : read_functor(json("identity"), c, p);
  return LeftCoalgebra{law, f, read_nat(sub(l, "phi"), compose(f, law.h.endo), compose(f, law.g.endo))};
}

RightCoalgebra read_right(const json& j, const DistributiveLaw& law) {
  const auto& r = sub(j, "right");
  const auto& c = *law.base();
  RightCoalgebra out{law, obj_named(c, sub(r, "x")), mor_named(c, sub(r, "xi"))};
  if (c.src(out.xi) != law.g.endo.obj(out.x) || c.tgt(out.xi) != law.h.endo.obj(out.x)) {
    throw InputError("xi must be gx -> hx");
  }
  return out;
}

StrictMonCat read_moncat(const json& j) {
  if (j.is_object() && j.contains("discrete_table")) {
    auto t = field<std::vector<std::vector<int>>>(j, "discrete_table");
    const int n = static_cast<int>(t.size());
    table(j, "discrete_table", n, n, n);
    return discrete_monoidal(t);
  }
  auto base = read_category(sub(j, "category"));
  const int no = base->num_objects(), nm = base->num_morphisms();
  ObjId unit = obj_named(*base, sub(j, "unit"));
  const auto& t = sub(j, "tensor");
  const auto& to = sub(t, "obj");
  const auto& tm = sub(t, "mor");
  if (!to.is_array() || static_cast<int>(to.size()) != no || !tm.is_array() || static_cast<int>(tm.size()) != nm) {
    throw InputError("tensor tables have the wrong shape");
  }
  std::vector<std::vector<ObjId>> ob(no);
  std::vector<std::vector<MorId>> mb(nm);
  for (int a = 0; a < no; ++a) {
    if (!to[a].is_array() || static_cast<int>(to[a].size()) != no) throw InputError("tensor obj row has the wrong width");
    for (const auto& v : to[a]) ob[a].push_back(obj_named(*base, v));
  }
  for (int u = 0; u < nm; ++u) mb[u] = mor_list(*base, tm[u], nm);
  try {
    return make_moncat(
        base, unit, [&](ObjId a, ObjId b) { return ob[a][b]; }, [&](MorId u, MorId v) { return mb[u][v]; });
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

FinRing read_ring(const json& j) {
  if (j.is_object() && j.contains("catalog")) {
    auto name = field<std::string>(j, "catalog");
    if (name == "zmod") {
      int n = field<int>(j, "n");
      if (n < 1 || n > 4096) throw InputError("ring size out of range");
      return zmod_ring(n);
    }
    if (name == "matrix_f2") return matrix_ring_f2();
    if (name == "upper_triangular_f2") return upper_triangular_f2();
    if (name == "dual_numbers_f2") return dual_numbers_f2();
    throw InputError("unknown ring '" + name + "'");
  }
  FinRing r;
  r.size = field<int>(j, "size");
  if (r.size < 1 || r.size > 4096) throw InputError("ring size out of range");
  r.add = table(j, "add", r.size, r.size, r.size);
  r.mul = table(j, "mul", r.size, r.size, r.size);
  r.zero = field<int>(j, "zero");
  r.one = field<int>(j, "one");
  if (r.zero < 0 || r.zero >= r.size || r.one < 0 || r.one >= r.size) throw InputError("ring constants out of range");
  return r;
}

FinBimoduleAb read_ring_bimodule(const json& j, const std::shared_ptr<const FinRing>& ring) {
  if (j.is_object() && j.contains("regular") && j.at("regular") == true) return regular_bimodule(ring);
  if (j.is_object() && j.contains("zero") && j.at("zero") == true && !j.contains("size")) return zero_bimodule(ring);
  FinBimoduleAb x;
  x.ring = ring;
  x.size = field<int>(j, "size");
  if (x.size < 1 || x.size > 4096) throw InputError("module size out of range");
  x.add = table(j, "add", x.size, x.size, x.size);
  x.zero = field<int>(j, "zero");
  x.left = table(j, "left", ring->size, x.size, x.size);
  x.right = table(j, "right", x.size, ring->size, x.size);
  if (x.zero < 0 || x.zero >= x.size) throw InputError("module zero out of range");
  return x;
}

DuplicialFamily<SetTarget> read_set_family(const json& j, int trunc) {
  if (j.is_object() && j.contains("nerve")) {
    auto c = read_category(j.at("nerve"));
    NerveDuplicialData d;
    if (j.contains("canonical") && j.at("canonical") == true) {
      try {
        d = canonical_groupoid(*c);
      } catch (const Error& e) {
        throw InputError(e.what());
      }
    } else {
      for (const auto& v : sub(j, "t_obj")) d.t_obj.push_back(obj_named(*c, v));
      d.t_mor = mor_list(*c, sub(j, "t_mor"), c->num_morphisms());
      if (static_cast<int>(d.t_obj.size()) != c->num_objects()) throw InputError("t_obj has the wrong length");
    }
    return nerve_family(nerve(c, trunc), d);
  }
  const int n = field<int>(j, "trunc");
  const bool aug = j.contains("augmented") && j.at("augmented") == true;
  if (n < 0 || n > 12) throw InputError("truncation out of range");
  auto levels = field<std::vector<int>>(j, "levels");
  auto faces = field<std::vector<std::vector<std::vector<int>>>>(j, "faces");
  auto degens = field<std::vector<std::vector<std::vector<int>>>>(j, "degens");
  auto t = field<std::vector<std::vector<int>>>(j, "t");
  const int lo = aug ? -1 : 0;
  const std::size_t count = static_cast<std::size_t>(n - lo + 1);
  if (levels.size() != count || faces.size() != count || degens.size() != count || t.size() != static_cast<std::size_t>(n + 1)) {
    throw InputError("level lists must cover the truncation");
  }
  TruncAugSimplicial<SetTarget> X(SetTarget{}, n, aug);
  for (int k = lo; k <= n; ++k) {
    const auto i = static_cast<std::size_t>(k - lo);
    X.set_level(k, levels[i]);
    if (static_cast<int>(faces[i].size()) != X.num_faces(k) || static_cast<int>(degens[i].size()) != X.num_degens(k)) {
      throw InputError("wrong number of faces or degeneracies at level " + std::to_string(k));
    }
    for (int a = 0; a < X.num_faces(k); ++a) X.set_face(k, a, faces[i][a]);
    for (int a = 0; a < X.num_degens(k); ++a) X.set_degen(k, a, degens[i][a]);
  }
  return DuplicialFamily<SetTarget>{X, t};
}

json mor_names(const FinCategory& c, const std::vector<MorId>& ms) {
  json out = json::array();
  for (MorId f : ms) out.push_back(c.morphism_name(f));
  return out;
}

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t h) {
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace duplex::io
