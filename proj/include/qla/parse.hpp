#pragma once

#include "qla/ratfunc.hpp"

#include <string_view>

namespace qla {

// Parses expressions over {q, v, integers, + - * / ^ ( )} with q = v^2, e.g.
// "1", "q", "-1", "(q + q^-1)/2", "q^(1/2)". Throws Error(ParseError) on bad input.
RatFunc parse_ratfunc(std::string_view text);

}  // namespace qla
