#include "duplex/duplicial.hpp"

namespace duplex {

std::string_view to_string(DuplicialKind k) {
  switch (k) {
    case DuplicialKind::Invalid: return "invalid";
    case DuplicialKind::Duplicial: return "duplicial";
    case DuplicialKind::Paracyclic: return "paracyclic";
    case DuplicialKind::Cyclic: return "cyclic";
  }
  return "invalid";
}

}  // namespace duplex
