#pragma once

#include <string>
#include <vector>

#include "omegalim/prototype.hpp"

namespace omegalim {

// Ordering chains of growth-class prototypes by generation of the
// construction grammar (generation 0 is the base element w; each later
// generation adds ln, exp, powers, and products/quotients of earlier
// entries). Entries are spelled in the ASCII expression grammar with all
// real parameters instantiated at 1, listed in increasing class order;
// spellings that collapse to the same class sit adjacently.
const std::vector<std::string>& generation_chain_exprs(int generation);

// Parsed, canonicalized, and deduplicated (adjacent equal classes merged).
std::vector<Prototype> generation_chain(int generation);

}  // namespace omegalim
