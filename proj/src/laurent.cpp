#include "qla/laurent.hpp"

#include "qla/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qla {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::NonDominant: return "NonDominant";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::EmptySpace: return "EmptySpace";
    case ErrorKind::ClassicallyZero: return "ClassicallyZero";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::GaugeObstruction: return "GaugeObstruction";
    case ErrorKind::ObstructionDetected: return "ObstructionDetected";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    }
    return "Unknown";
}

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Rational(c)) {}

LaurentPoly::LaurentPoly(const Rational &c) {
    if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Rational &c, int v_exponent) {
    LaurentPoly p;
    if (c != 0) {
        p.low_ = v_exponent;
        p.coeffs_.push_back(c);
    }
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Rational>> &terms) {
    std::map<int, Rational> acc;
    for (const auto &[e, c] : terms) acc[e] += c;
    LaurentPoly p;
    for (const auto &[e, c] : acc) p += monomial(c, e);
    return p;
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<Rational> coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void LaurentPoly::trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0) --last;
    if (first > 0 || last < coeffs_.size()) {
        coeffs_ = std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                        coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
        low_ += static_cast<int>(first);
    }
}

Rational LaurentPoly::coeff(int exponent) const {
    if (is_zero() || exponent < low_ || exponent > high()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, Rational>> LaurentPoly::terms() const {
    std::vector<std::pair<int, Rational>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
    return out;
}

bool LaurentPoly::all_exponents_even() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0 && (low_ + static_cast<int>(i)) % 2 != 0) return false;
    return true;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto &c : r.coeffs_) c = -c;
    return r;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high(), o.high());
    if (lo < low_ || hi > high()) {
        std::vector<Rational> grown(static_cast<std::size_t>(hi - lo + 1));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            grown[static_cast<std::size_t>(low_ - lo) + i] = std::move(coeffs_[i]);
        coeffs_ = std::move(grown);
        low_ = lo;
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[static_cast<std::size_t>(o.low_ - low_) + i] += o.coeffs_[i];
    trim();
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPoly r;
    r.low_ = a.low_ + b.low_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            if (b.coeffs_[j] != 0) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &o) { return *this = *this * o; }

LaurentPoly &LaurentPoly::operator*=(const Rational &c) {
    if (c == 0) return *this = LaurentPoly();
    for (auto &x : coeffs_) x *= c;
    return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
}

LaurentPoly LaurentPoly::qconjugate() const {
    LaurentPoly r;
    if (is_zero()) return r;
    r.low_ = -high();
    r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    return r;
}

Rational LaurentPoly::eval_at_one() const {
    Rational s = 0;
    for (const auto &c : coeffs_) s += c;
    return s;
}

Rational LaurentPoly::h_derivative_at_zero() const {
    Rational s = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) s += coeffs_[i] * (low_ + static_cast<int>(i));
    return s / 2;
}

namespace {

// Dense polynomials in v (index = degree) used by the Euclidean algorithm.
using Dense = std::vector<Rational>;

void strip(Dense &p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// p <- p mod d, d nonzero.
void reduce_mod(Dense &p, const Dense &d) {
    strip(p);
    const std::size_t dd = d.size() - 1;
    const Rational inv_lead = 1 / d.back();
    while (p.size() > dd) {
        const std::size_t shift = p.size() - 1 - dd;
        const Rational f = p.back() * inv_lead;
        for (std::size_t i = 0; i <= dd; ++i) p[shift + i] -= f * d[i];
        p.pop_back();
        strip(p);
    }
}

void make_monic(Dense &p) {
    if (p.empty()) return;
    const Rational inv = 1 / p.back();
    for (auto &c : p) c *= inv;
}

}  // namespace

int LaurentPoly::order_at_one() const {
    if (is_zero()) return 0;
    Dense p = coeffs_;
    int order = 0;
    for (;;) {
        Rational s = 0;
        for (const auto &c : p) s += c;
        if (s != 0) return order;
        // Synthetic division by (v - 1).
        Dense quo(p.size() - 1);
        Rational carry = 0;
        for (std::size_t i = p.size(); i-- > 1;) {
            carry += p[i];
            quo[i - 1] = carry;
        }
        p = std::move(quo);
        ++order;
    }
}

std::optional<LaurentPoly> LaurentPoly::exact_div(const LaurentPoly &d) const {
    if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "exact_div by zero polynomial");
    if (is_zero()) return LaurentPoly();
    if (d.is_monomial()) {
        LaurentPoly r = *this * (Rational(1) / d.leading());
        return r.shifted(-d.low());
    }
    Dense num = coeffs_;
    const Dense &den = d.coeffs_;
    if (num.size() < den.size()) return std::nullopt;
    Dense quo(num.size() - den.size() + 1);
    const Rational inv_lead = 1 / den.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
        const Rational f = num[k + den.size() - 1] * inv_lead;
        quo[k] = f;
        if (f != 0)
            for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= f * den[i];
    }
    for (const auto &c : num)
        if (c != 0) return std::nullopt;
    return from_dense(low_ - d.low_, std::move(quo));
}

LaurentPoly poly_gcd(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.is_zero() && b.is_zero()) return {};
    Dense x = a.dense();
    Dense y = b.dense();
    if (x.empty()) std::swap(x, y);
    while (!y.empty()) {
        reduce_mod(x, y);
        std::swap(x, y);
        make_monic(x);
    }
    make_monic(x);
    return LaurentPoly::from_dense(0, std::move(x));
}

std::string rational_to_string(const Rational &r) { return r.get_str(); }

std::string LaurentPoly::to_string() const { return to_string(all_exponents_even() ? 'q' : 'v'); }

std::string LaurentPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        const Rational &c = coeffs_[idx];
        if (c == 0) continue;
        int e = low_ + static_cast<int>(idx);
        if (var == 'q') e /= 2;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << var;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace qla
