#pragma once

// JSON readers and writers for the command-line front end.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "duplex/bohmstefan.hpp"
#include "duplex/hochschild.hpp"
#include "duplex/moncat.hpp"
#include "duplex/nerve.hpp"

namespace duplex::io {

using json = nlohmann::json;

inline constexpr int kSchema = 1;

/// Anything wrong with the shape of an input document. Exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load(const std::string& path);

/// Either {"catalog": name, "n": k} or objects / morphisms {id, src, tgt} /
/// comp [g, f, gf]. Identities are implicit and named 1_x. Law violations
/// come back in the report, not as InputError.
CategoryValidation read_raw_category(const json& j);
CatPtr read_category(const json& j);
json write_category(const FinCategory& c);

FinFunctor read_functor(const json& j, const CatPtr& dom, const CatPtr& cod);
NatTrans read_nat(const json& j, const FinFunctor& src, const FinFunctor& tgt);
Comonad read_comonad(const json& j, const CatPtr& c);
DistributiveLaw read_law(const json& j);
/// {"left": {...}, "right": {...}} against a law. A missing "left" means
/// f = 1 with φ = identity, which needs g = h on objects.
LeftCoalgebra read_left(const json& j, const DistributiveLaw& law);
RightCoalgebra read_right(const json& j, const DistributiveLaw& law);

StrictMonCat read_moncat(const json& j);

FinRing read_ring(const json& j);
FinBimoduleAb read_ring_bimodule(const json& j, const std::shared_ptr<const FinRing>& ring);

DuplicialFamily<SetTarget> read_set_family(const json& j, int trunc);

json mor_names(const FinCategory& c, const std::vector<MorId>& ms);

std::uint64_t fnv1a(const std::string& bytes, std::uint64_t h = 1469598103934665603ull);
std::string hex64(std::uint64_t h);

}  // namespace duplex::io
