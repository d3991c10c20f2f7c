#pragma once

#include <string_view>

#include "lorenz/lorenz_core.hpp"

namespace lorenz {

/// Parses "3^4,5^3" or "3,3,3,3,5,5,5" (forms may be mixed). Whitespace is
/// ignored. Throws InvalidInput with a description of the problem.
LorenzVector parse_vector_spec(std::string_view text);

/// Parses "(3,4),(5,3)". Whitespace is ignored. Throws InvalidInput.
TLinkParams parse_tlink_spec(std::string_view text);

}  // namespace lorenz
