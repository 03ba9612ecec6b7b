// duplex: batch front end. One JSON verdict per invocation on stdout.
//
// exit 0  valid / true
//      1  invalid / false, with a witness
//      2  input errors
//      3  budget or cap exceeded

#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "duplex/catalog.hpp"
#include "duplex/dupcat.hpp"
#include "duplex/laxmod.hpp"
#include "io.hpp"

using namespace duplex;
using io::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
  int trunc = 4;
  std::int64_t cap = 100000;
  std::uint64_t budget = Budget::kDefault;
  std::uint64_t seed = 0;
};

struct Verdict {
  bool ok = true;
  json result = json::object();
  std::string witness;
  json bounds = json::object();
};

struct Run {
  std::string command;
  std::vector<std::string> args;
  std::string digest_bytes;

  json load(const std::string& path) {
    auto j = io::load(path);
    digest_bytes += j.dump();
    digest_bytes.push_back('\0');
    return j;
  }
};

json family_json(const DuplicialFamily<CatTarget>& F) {
  const auto& C = *F.base.target().cat;
  json j;
  j["trunc"] = F.base.trunc();
  j["augmented"] = F.base.augmented();
  j["levels"] = json::array();
  j["faces"] = json::array();
  j["degens"] = json::array();
  for (int n = F.base.bottom(); n <= F.base.trunc(); ++n) {
    j["levels"].push_back(C.object_name(F.base.level(n)));
    std::vector<MorId> fs, ss;
    for (int i = 0; i < F.base.num_faces(n); ++i) fs.push_back(F.base.face(n, i));
    for (int i = 0; i < F.base.num_degens(n); ++i) ss.push_back(F.base.degen(n, i));
    j["faces"].push_back(io::mor_names(C, fs));
    j["degens"].push_back(io::mor_names(C, ss));
  }
  j["t"] = io::mor_names(C, F.t);
  return j;
}

json factors_json(const AbGroup& g) {
  json f = json::array();
  for (auto d : g.factors) f.push_back(static_cast<long long>(d));
  return f;
}

// ---------------------------------------------------------------------------

Verdict check_category_cmd(Run& run, const std::string& path) {
  auto v = io::read_raw_category(run.load(path));
  Verdict out;
  if (!v.category) {
    out.ok = false;
    out.witness = v.report.describe();
    return out;
  }
  const auto& c = *v.category;
  out.result = {{"objects", c.num_objects()}, {"morphisms", c.num_morphisms()}, {"groupoid", c.is_groupoid()}};
  return out;
}

Verdict check_comonad_cmd(Run& run, const std::string& path) {
  auto j = run.load(path);
  Verdict out;
  auto c = io::read_category(j.at("category"));
  auto g = io::read_comonad(j.at("g"), c);
  auto rg = check_comonad(g);
  out.result["g"] = rg.describe();
  if (!rg) {
    out.ok = false;
    out.witness = "g: " + rg.describe();
    return out;
  }
  if (j.contains("h")) {
    auto law = io::read_law(j);
    auto rh = check_comonad(law.h);
    out.result["h"] = rh.describe();
    auto rl = rh ? check_distributive_law(law) : Report::fail("h", rh.describe());
    out.result["lambda"] = rl.describe();
    if (!rl) {
      out.ok = false;
      out.witness = rl.describe();
    }
  }
  return out;
}

Verdict check_duplicial_cmd(Run& run, const std::string& path, const Options& opt) {
  auto j = run.load(path);
  auto F = io::read_set_family(j, opt.trunc);
  for (int n = 0; n <= F.base.trunc(); ++n) {
    if (static_cast<int>(F.t.size()) <= n || !SetTarget{}.has_shape(F.t[n], F.base.level(n), F.base.level(n))) {
      throw io::InputError("t_" + std::to_string(n) + " is not an endomap of its level");
    }
  }
  auto c = classify_duplicial(F);
  Verdict out;
  out.bounds["trunc"] = c.trunc;
  out.result = {{"kind", std::string(to_string(c.kind))}, {"verdict", c.verdict()}};
  if (c.kind == DuplicialKind::Invalid) {
    out.ok = false;
    out.witness = c.report.describe();
  }
  return out;
}

Verdict compose_op_cmd(const std::string& a, const std::string& b) {
  auto x = parse_duplicial(a);
  auto y = parse_duplicial(b);
  RewriteStats stats;
  auto z = compose_duplicial(x, y, &stats);
  Verdict out;
  out.result = {{"normal_form", to_string(z)}, {"steps", stats.steps}, {"max_tpow", stats.max_tpow}};
  return out;
}

Verdict bohm_stefan_cmd(Run& run, const std::string& law_path, const std::string& coalg_path, const Options& opt) {
  auto law = io::read_law(run.load(law_path));
  if (auto r = check_distributive_law(law); !r) throw io::InputError("not a distributive law: " + r.describe());
  Verdict out;
  out.bounds = {{"trunc", opt.trunc}, {"budget", opt.budget}};
  if (coalg_path.empty()) {
    Budget budget(opt.budget);
    auto rights = enumerate_right_coalgebras(law, budget);
    auto lefts = enumerate_left_coalgebras(law, law.base(), budget);
    std::map<std::string, int> kinds;
    for (const auto& l : lefts) {
      for (const auto& r : rights) {
        auto c = classify_duplicial(bs_operator(l, r, opt.trunc));
        ++kinds[std::string(to_string(c.kind))];
        if (c.kind == DuplicialKind::Invalid && out.ok) {
          out.ok = false;
          out.witness = c.report.describe();
        }
      }
    }
    out.result = {{"left", lefts.size()}, {"right", rights.size()}, {"kinds", kinds}};
    return out;
  }
  auto cj = run.load(coalg_path);
  auto l = io::read_left(cj, law);
  auto r = io::read_right(cj, law);
  if (auto rep = check_left_coalgebra(l); !rep) {
    out.ok = false;
    out.witness = "left: " + rep.describe();
    return out;
  }
  if (auto rep = check_right_coalgebra(r); !rep) {
    out.ok = false;
    out.witness = "right: " + rep.describe();
    return out;
  }
  auto F = bs_operator(l, r, opt.trunc);
  auto c = classify_duplicial(F);
  out.result = {{"family", family_json(F)}, {"kind", std::string(to_string(c.kind))}, {"verdict", c.verdict()}};
  if (c.kind == DuplicialKind::Invalid) {
    out.ok = false;
    out.witness = c.report.describe();
  }
  return out;
}

Verdict bs_cap_cmd(Run& run, const std::string& law_path, const std::string& coalg_path, const Options& opt) {
  auto law = io::read_law(run.load(law_path));
  if (auto r = check_distributive_law(law); !r) throw io::InputError("not a distributive law: " + r.describe());
  auto cj = run.load(coalg_path);
  auto l = io::read_left(cj, law);
  auto r = io::read_right(cj, law);
  Verdict out;
  out.bounds = {{"trunc", opt.trunc}, {"sizes", opt.trunc + 1}};
  CapResult cap;
  try {
    cap = bs_cap(l, single_family(r), opt.trunc);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CoalgebraInvalid) throw;
    out.ok = false;
    out.witness = e.what();
    return out;
  }
  const auto& F = cap.families.front();
  out.result = {{"family", family_json(F)},
                {"kind", std::string(to_string(classify_duplicial(F).kind))},
                {"equals_operator", F == bs_operator(l, r, opt.trunc)},
                {"equals_mirror", F == bs_mirror(l, r, opt.trunc)}};
  if (!cap.report) {
    out.ok = false;
    out.witness = cap.report.describe();
  }
  return out;
}

HochschildData read_hochschild(Run& run, const std::string& ring_path, const std::string& mod_path) {
  auto ring = std::make_shared<const FinRing>(io::read_ring(run.load(ring_path)));
  if (auto r = check_ring(*ring); !r) throw io::InputError("not a ring: " + r.describe());
  auto x = io::read_ring_bimodule(run.load(mod_path), ring);
  try {
    return prepare(x);
  } catch (const Error& e) {
    throw io::InputError(e.what());
  }
}

Verdict h0_cmd(Run& run, const std::string& ring_path, const std::string& mod_path) {
  auto d = read_hochschild(run, ring_path, mod_path);
  auto g = zeroth_homology(d).normal_form().group;
  Verdict out;
  out.result = {{"factors", factors_json(g)}, {"group", g.describe()}};
  return out;
}

Verdict h0_co_cmd(Run& run, const std::string& ring_path, const std::string& mod_path) {
  auto d = read_hochschild(run, ring_path, mod_path);
  auto s = zeroth_cohomology(d);
  Verdict out;
  out.result = {{"elements", s.elements}, {"factors", factors_json(s.group)}, {"group", s.group.describe()}};
  return out;
}

Verdict lax_centre_cmd(Run& run, const std::string& path, const Options& opt) {
  auto m = io::read_moncat(run.load(path));
  Verdict out;
  out.bounds["budget"] = opt.budget;
  if (auto r = check_strict_monoidal(m); !r) throw io::InputError("not strict monoidal: " + r.describe());
  Budget budget(opt.budget);
  auto h0 = lax_h0(regular_bimodule(m), budget);
  const auto& A = *m.base;
  json objs = json::array();
  for (const auto& o : h0.objects) objs.push_back({{"x", A.object_name(o.x)}, {"xi", io::mor_names(A, o.xi)}});
  out.result = {{"objects", objs}, {"count", h0.objects.size()}, {"morphisms", h0.cat->num_morphisms()}};
  return out;
}

Verdict nerve_check_cmd(Run& run, const std::string& path, const Options& opt) {
  auto c = io::read_category(run.load(path));
  Verdict out;
  out.bounds = {{"trunc", opt.trunc}, {"budget", opt.budget}};
  Budget budget(opt.budget);
  auto s = classify_category_structures(c, opt.trunc, budget);
  auto slices = check_dec_nerve_slices(nerve(c, opt.trunc));
  out.result = {{"data", s.data_count},     {"paracyclic", s.paracyclic_count}, {"cyclic", s.cyclic_count},
                {"groupoid", s.is_groupoid}, {"dec_slices", slices.describe()}};
  if (s.is_groupoid) out.result["natural_automorphisms"] = s.natural_automorphisms;
  if (!s.report || !slices) {
    out.ok = false;
    out.witness = !s.report ? s.report.describe() : slices.describe();
  }
  return out;
}

Verdict pi1_cmd(Run& run, const std::string& path, const Options& opt) {
  auto c = io::read_category(run.load(path));
  Verdict out;
  out.bounds["cap"] = opt.cap;
  auto pi = pi1(c, opt.cap);
  json groups = json::array();
  for (const auto& g : pi.groups) groups.push_back(g.order());
  out.result = {{"components", pi.groups.size()}, {"vertex_groups", groups}, {"morphisms", pi.groupoid->num_morphisms()}};
  return out;
}

Verdict monoidal_check_cmd(Run& run, const std::string& path, const std::string& d_name) {
  auto m = io::read_moncat(run.load(path));
  Verdict out;
  if (auto r = check_strict_monoidal(m); !r) {
    out.ok = false;
    out.witness = r.describe();
    return out;
  }
  const auto& A = *m.base;
  json rows = json::array();
  for (ObjId d = 0; d < A.num_objects(); ++d) {
    if (!d_name.empty() && A.object_name(d) != d_name) continue;
    auto r = check_monoidal_duplicial(m, d);
    rows.push_back({{"d", A.object_name(d)},
                    {"duplicial", r.duplicial},
                    {"star_autonomous", r.star_autonomous},
                    {"paracyclic", r.paracyclic}});
    if (!r.implications && out.ok) {
      out.ok = false;
      out.witness = "d=" + A.object_name(d) + ": " + r.implications.describe();
    }
  }
  if (rows.empty()) throw io::InputError("no object named '" + d_name + "'");
  out.result["dualizing"] = rows;
  return out;
}

// ---------------------------------------------------------------------------

Verdict sweep_cmd(const std::string& suite, int max_morphisms, const Options& opt) {
  Verdict out;
  out.bounds = {{"trunc", opt.trunc}, {"budget", opt.budget}, {"seed", opt.seed}, {"max_morphisms", max_morphisms}};
  auto fail = [&](const std::string& w) {
    if (out.ok) {
      out.ok = false;
      out.witness = w;
    }
  };
  const bool all = suite == "all";
  bool known = false;
  if (all || suite == "bohm-stefan") {
    known = true;
    Budget budget(opt.budget);
    long instances = 0;
    for (const auto& c : catalog::small_fixtures(max_morphisms)) {
      auto cp = share(c);
      auto comonads = enumerate_comonads(cp, budget);
      for (const auto& g : comonads) {
        for (const auto& h : comonads) {
          for (const auto& law : enumerate_distributive_laws(g, h, budget)) {
            auto rights = enumerate_right_coalgebras(law, budget);
            for (const auto& l : enumerate_left_coalgebras(law, cp, budget)) {
              for (const auto& r : rights) {
                ++instances;
                auto k = classify_duplicial(bs_operator(l, r, opt.trunc));
                if (k.kind == DuplicialKind::Invalid) fail("bohm-stefan: " + k.report.describe());
              }
            }
          }
        }
      }
    }
    out.result["bohm-stefan"] = instances;
  }
  if (all || suite == "rewriting") {
    known = true;
    std::mt19937_64 rng(opt.seed);
    auto random_op = [&](int n, int m) {
      auto ops = all_operators(n, m);
      const auto& s = ops[std::uniform_int_distribution<std::size_t>(0, ops.size() - 1)(rng)];
      int kmax = m >= 0 ? 2 * (m + 1) : 0;
      return DuplicialOperator{std::uniform_int_distribution<int>(0, kmax)(rng), s};
    };
    // Degrees drawn from 0..6, with -1 only where a map out of it exists.
    std::uniform_int_distribution<int> deg(0, 6);
    const int triples = 1000;
    for (int i = 0; i < triples; ++i) {
      int a = deg(rng), b = deg(rng), c = deg(rng), d = deg(rng);
      if (rng() % 8 == 0) d = -1;
      auto f = random_op(a, b), g = random_op(b, c), h = random_op(c, d);
      if (!(compose_duplicial(h, compose_duplicial(g, f)) == compose_duplicial(compose_duplicial(h, g), f))) {
        fail("rewriting: " + to_string(h) + " | " + to_string(g) + " | " + to_string(f));
      }
    }
    out.result["rewriting"] = triples;
  }
  if (all || suite == "nerve") {
    known = true;
    Budget budget(opt.budget);
    int cats = 0;
    for (const auto& c : catalog::small_fixtures(max_morphisms)) {
      auto s = classify_category_structures(share(c), opt.trunc, budget);
      ++cats;
      if (!s.report) fail("nerve: " + s.report.describe());
    }
    out.result["nerve"] = cats;
  }
  if (!known) throw io::InputError("unknown suite '" + suite + "'");
  return out;
}

int emit(const Run& run, const Verdict& v, int code, const json& error = nullptr) {
  json out;
  out["duplex-schema"] = io::kSchema;
  out["command"] = run.command;
  std::string bytes = run.command;
  for (const auto& a : run.args) bytes += '\0' + a;
  bytes += '\0' + run.digest_bytes;
  out["inputs"] = io::hex64(io::fnv1a(bytes));
  out["bounds"] = v.bounds;
  out["version"] = kVersion;
  if (error.is_null()) {
    out["valid"] = v.ok;
    out["result"] = v.result;
    if (!v.witness.empty()) out["witness"] = v.witness;
  } else {
    out["error"] = error;
  }
  std::cout << out.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"duplex: checks for duplicial structure on finite data"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--trunc", opt.trunc, "truncation N")->capture_default_str()->check(CLI::Range(0, 12));
  app.add_option("--cap", opt.cap, "morphism cap for pi1")->capture_default_str();
  app.add_option("--budget", opt.budget, "candidate budget for enumerations")->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized sweeps")->capture_default_str();

  Run run;
  std::function<Verdict()> action;
  std::string f1, f2, d_name, suite = "all";
  int max_morphisms = 4;

  auto one = [&](const char* name, const char* help, auto fn) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("file", f1)->required();
    s->callback([&, name, fn] {
      run.command = name;
      run.args = {f1};
      action = [&, fn] { return fn(); };
    });
    return s;
  };
  auto two = [&](const char* name, const char* help, bool second_required, auto fn) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("first", f1)->required();
    auto* o = s->add_option("second", f2);
    if (second_required) o->required();
    s->callback([&, name, fn] {
      run.command = name;
      run.args = {f1, f2};
      action = [&, fn] { return fn(); };
    });
    return s;
  };

  one("check-category", "validate a category", [&] { return check_category_cmd(run, f1); });
  one("check-comonad", "validate a comonad and optionally a distributive law", [&] { return check_comonad_cmd(run, f1); });
  one("check-duplicial", "classify a set-valued duplicial family", [&] { return check_duplicial_cmd(run, f1, opt); });
  two("compose-op", "normal form of a after b", true, [&] { return compose_op_cmd(f1, f2); });
  two("bohm-stefan", "duplicial family of a law and coalgebras", false, [&] { return bohm_stefan_cmd(run, f1, f2, opt); });
  two("bs-cap", "the cap-product family", true, [&] { return bs_cap_cmd(run, f1, f2, opt); });
  two("h0", "zeroth Hochschild homology", true, [&] { return h0_cmd(run, f1, f2); });
  two("h0-co", "zeroth Hochschild cohomology", true, [&] { return h0_co_cmd(run, f1, f2); });
  one("lax-centre", "lax H^0 of the regular bimodule", [&] { return lax_centre_cmd(run, f1, opt); });
  one("nerve-check", "duplicial structures on a nerve", [&] { return nerve_check_cmd(run, f1, opt); });
  one("pi1", "fundamental groupoid", [&] { return pi1_cmd(run, f1, opt); });
  one("monoidal-check", "duplicial structure from a dualizing object", [&] { return monoidal_check_cmd(run, f1, d_name); })
      ->add_option("--d", d_name, "only this dualizing object");
  auto* sw = app.add_subcommand("sweep", "exhaustive property suites");
  sw->add_option("suite", suite, "bohm-stefan, rewriting, nerve or all")->capture_default_str();
  sw->add_option("--max-morphisms", max_morphisms, "fixture size bound")->capture_default_str();
  sw->callback([&] {
    run.command = "sweep";
    run.args = {suite, std::to_string(max_morphisms)};
    action = [&] { return sweep_cmd(suite, max_morphisms, opt); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  Verdict base;
  try {
    auto v = action();
    return emit(run, v, v.ok ? 0 : 1);
  } catch (const io::InputError& e) {
    std::cerr << "duplex: " << e.what() << "\n";
    return emit(run, base, 2, {{"kind", "InvalidInput"}, {"message", e.what()}});
  } catch (const Error& e) {
    std::cerr << "duplex: " << e.what() << "\n";
    const auto k = e.kind();
    int code = 1;
    if (k == ErrorKind::BudgetExceeded || k == ErrorKind::GroupoidTooLarge) code = 3;
    if (k == ErrorKind::InvalidInput || k == ErrorKind::ShapeMismatch || k == ErrorKind::DegreeMismatch ||
        k == ErrorKind::TruncationTooShallow) {
      code = 2;
    }
    if (k == ErrorKind::GroupoidTooLarge) base.bounds["cap"] = opt.cap;
    if (k == ErrorKind::BudgetExceeded) base.bounds["budget"] = opt.budget;
    return emit(run, base, code, {{"kind", std::string(to_string(k))}, {"message", e.what()}});
  } catch (const json::exception& e) {
    std::cerr << "duplex: " << e.what() << "\n";
    return emit(run, base, 2, {{"kind", "InvalidInput"}, {"message", e.what()}});
  }
}
