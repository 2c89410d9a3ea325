#pragma once

#include "knotarith/bigint.hpp"

#include <string>
#include <string_view>

namespace knotarith::homalg {

/// Dense row-major text: "rows cols" then the entries, whitespace separated.
std::string matrix_to_text(const IntMatrix& m);
IntMatrix matrix_from_text(std::string_view text);

}  // namespace knotarith::homalg
