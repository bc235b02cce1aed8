#include "oddlen/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace oddlen {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in polynomial coefficient addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in polynomial coefficient multiplication");
    return r;
}

namespace {

std::int64_t checked_pow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

void append_coeff(std::ostringstream& out, std::int64_t c, bool leading, const std::string& var) {
    // var == "" means the constant term; the coefficient 1 is left implicit
    // in front of a variable part.
    if (c < 0) {
        out << '-';
    } else if (!leading) {
        out << '+';
    }
    std::int64_t mag = c < 0 ? -c : c;  // safe: coefficients never reach INT64_MIN
    if (var.empty()) {
        out << mag;
    } else {
        if (mag != 1) out << mag;
        out << var;
    }
}

std::string power_str(const std::string& var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

}  // namespace

IntPoly IntPoly::one() { return monomial(0, 1); }

IntPoly IntPoly::monomial(int exponent, std::int64_t coeff) {
    IntPoly p;
    p.add_term(exponent, coeff);
    return p;
}

IntPoly IntPoly::from_terms(std::initializer_list<std::pair<int, std::int64_t>> terms) {
    IntPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

std::optional<int> IntPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

std::int64_t IntPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

void IntPoly::add_term(int exponent, std::int64_t coeff) {
    if (coeff == 0) return;
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

IntPoly IntPoly::operator-() const {
    IntPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    IntPoly r;
    for (const auto& [ea, ca] : lhs.terms_)
        for (const auto& [eb, cb] : rhs.terms_)
            r.add_term(ea + eb, checked_mul(ca, cb));
    return r;
}

IntPoly IntPoly::scaled(std::int64_t factor) const {
    IntPoly r;
    if (factor == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, checked_mul(c, factor));
    return r;
}

std::int64_t IntPoly::eval(std::int64_t x) const {
    std::int64_t acc = 0;
    for (const auto& [e, c] : terms_)
        acc = checked_add(acc, checked_mul(c, checked_pow(x, e)));
    return acc;
}

std::string IntPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool leading = true;
    for (const auto& [e, c] : terms_) {
        append_coeff(out, c, leading, power_str("x", e));
        leading = false;
    }
    return out.str();
}

std::string IntPoly::json() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << ',';
        out << '"' << e << "\":" << c;
        first = false;
    }
    out << '}';
    return out.str();
}

std::optional<IntPoly> exact_div(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("exact_div: division by the zero polynomial");
    IntPoly rem = num;
    IntPoly quot;
    const int den_deg = *den.degree();
    const std::int64_t den_lead = den.coeff(den_deg);
    while (!rem.is_zero()) {
        const int rem_deg = *rem.degree();
        if (rem_deg < den_deg) return std::nullopt;
        const std::int64_t rem_lead = rem.coeff(rem_deg);
        if (rem_lead % den_lead != 0) return std::nullopt;
        const std::int64_t c = rem_lead / den_lead;
        const int shift = rem_deg - den_deg;
        quot.add_term(shift, c);
        for (const auto& [e, dc] : den.terms())
            rem.add_term(e + shift, checked_mul(-c, dc));
    }
    return quot;
}

IntPoly tower_factor(int lo, int hi, int power) {
    if (power != 1 && power != 2) throw std::invalid_argument("tower_factor: power must be 1 or 2");
    IntPoly prod = IntPoly::one();
    for (int j = lo; j <= hi; ++j) {
        IntPoly factor = IntPoly::one();
        factor.add_term(j / 2, (j % 2 == 0) ? -1 : 1);
        for (int p = 0; p < power; ++p) prod = prod * factor;
    }
    return prod;
}

IntPoly q_int(int n, int q_exponent) {
    if (n < 0) throw std::invalid_argument("q_int: negative argument");
    if (q_exponent < 1) throw std::invalid_argument("q_int: q_exponent must be positive");
    IntPoly p;
    for (int t = 0; t < n; ++t) p.add_term(t * q_exponent, 1);
    return p;
}

IntPoly q_factorial(int n, int q_exponent) {
    IntPoly p = IntPoly::one();
    for (int i = 1; i <= n; ++i) p = p * q_int(i, q_exponent);
    return p;
}

IntPoly q_multinomial(int top, const std::vector<int>& parts, int q_exponent) {
    if (top < 0) throw std::invalid_argument("q_multinomial: negative top");
    int sum = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("q_multinomial: negative part");
        sum += p;
    }
    if (sum > top) throw std::invalid_argument("q_multinomial: parts exceed top");
    IntPoly result = q_factorial(top, q_exponent);
    std::vector<int> divisors = parts;
    divisors.push_back(top - sum);
    for (int p : divisors) {
        auto q = exact_div(result, q_factorial(p, q_exponent));
        if (!q) throw std::logic_error("q_multinomial: q-factorial division failed");
        result = *q;
    }
    return result;
}

BiPoly BiPoly::one() { return monomial(0, 0, 1); }

BiPoly BiPoly::monomial(int y_exp, int x_exp, std::int64_t coeff) {
    BiPoly p;
    p.add_term(y_exp, x_exp, coeff);
    return p;
}

std::int64_t BiPoly::coeff(int y_exp, int x_exp) const {
    auto it = terms_.find({y_exp, x_exp});
    return it == terms_.end() ? 0 : it->second;
}

void BiPoly::add_term(int y_exp, int x_exp, std::int64_t coeff) {
    if (coeff == 0) return;
    if (y_exp < 0 || x_exp < 0) throw std::invalid_argument("negative exponent");
    auto [it, inserted] = terms_.emplace(Key{y_exp, x_exp}, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k.first, k.second, -c);
    return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
    BiPoly r;
    for (const auto& [ka, ca] : lhs.terms_)
        for (const auto& [kb, cb] : rhs.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, checked_mul(ca, cb));
    return r;
}

BiPoly BiPoly::scaled(std::int64_t factor) const {
    BiPoly r;
    if (factor == 0) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, checked_mul(c, factor));
    return r;
}

IntPoly BiPoly::at_y(std::int64_t y) const {
    IntPoly r;
    for (const auto& [k, c] : terms_)
        r.add_term(k.second, checked_mul(c, checked_pow(y, k.first)));
    return r;
}

std::int64_t BiPoly::eval(std::int64_t y, std::int64_t x) const {
    std::int64_t acc = 0;
    for (const auto& [k, c] : terms_)
        acc = checked_add(acc, checked_mul(c, checked_mul(checked_pow(y, k.first), checked_pow(x, k.second))));
    return acc;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool leading = true;
    for (const auto& [k, c] : terms_) {
        append_coeff(out, c, leading, power_str("y", k.first) + power_str("x", k.second));
        leading = false;
    }
    return out.str();
}

std::string BiPoly::json() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << ',';
        out << '"' << k.first << ',' << k.second << "\":" << c;
        first = false;
    }
    out << '}';
    return out.str();
}

}  // namespace oddlen
