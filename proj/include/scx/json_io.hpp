#pragma once
#include <string>

#include "scx/equivariant.hpp"
#include "scx/scomplex.hpp"

namespace scx {

// Pretty-printed JSON document for a complex.
std::string serialize(const SComplex& C);
// Schema check only; relations are left to validate(). Throws ParseError with the
// path of the offending field.
SComplex deserialize(const std::string& text);

std::string serialize(const ModulePresentation& p);
ModulePresentation deserialize_presentation(const std::string& text);

}  // namespace scx
