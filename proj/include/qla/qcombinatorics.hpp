#pragma once

#include "qla/laurent.hpp"

namespace qla {

// [n]_{q^d} = (q^(dn) - q^(-dn)) / (q^d - q^(-d)); defined for every integer n.
LaurentPoly q_int(int n, int d = 1);
// [n]_{q^d}! for n >= 0.
LaurentPoly q_factorial(int n, int d = 1);
// Gaussian binomial in q^d; throws InvalidRange unless 0 <= b <= a.
LaurentPoly q_binomial(int a, int b, int d = 1);

}  // namespace qla
