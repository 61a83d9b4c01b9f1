#include "qla/qcombinatorics.hpp"

#include "qla/error.hpp"

#include <cstdlib>
#include <string>

namespace qla {

LaurentPoly q_int(int n, int d) {
    if (d <= 0) throw Error(ErrorKind::InvalidRange, "q_int needs a positive symmetrizer, got " + std::to_string(d));
    LaurentPoly r;
    const int m = std::abs(n);
    // q^(d(m-1)) + q^(d(m-3)) + ... + q^(-d(m-1)), in powers of v = q^(1/2).
    for (int k = 0; k < m; ++k) r += LaurentPoly::v_pow(2 * d * (m - 1 - 2 * k));
    return n < 0 ? -r : r;
}

LaurentPoly q_factorial(int n, int d) {
    if (n < 0) throw Error(ErrorKind::InvalidRange, "q_factorial of negative integer " + std::to_string(n));
    LaurentPoly r(1);
    for (int k = 2; k <= n; ++k) r *= q_int(k, d);
    return r;
}

LaurentPoly q_binomial(int a, int b, int d) {
    if (b < 0 || b > a)
        throw Error(ErrorKind::InvalidRange,
                    "q_binomial(" + std::to_string(a) + ", " + std::to_string(b) + ") outside 0 <= b <= a");
    const LaurentPoly den = q_factorial(b, d) * q_factorial(a - b, d);
    auto r = q_factorial(a, d).exact_div(den);
    if (!r) throw Error(ErrorKind::InternalInconsistency, "q-binomial division not exact");
    return *r;
}

}  // namespace qla
