#pragma once

// Exact sparse polynomial arithmetic over the integers: IntPoly in the
// single variable x, BiPoly in the pair (y, x).  Coefficients are signed
// 64-bit and every arithmetic step is overflow-checked; an operation that
// would leave the representable range throws std::overflow_error rather
// than wrapping.  Stored maps never contain zero coefficients, so equal
// polynomials compare equal structurally.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oddlen {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

class IntPoly {
public:
    IntPoly() = default;

    static IntPoly one();
    static IntPoly monomial(int exponent, std::int64_t coeff = 1);
    static IntPoly from_terms(std::initializer_list<std::pair<int, std::int64_t>> terms);

    bool is_zero() const { return terms_.empty(); }
    /// Degree of the polynomial; nullopt for the zero polynomial.
    std::optional<int> degree() const;
    std::int64_t coeff(int exponent) const;
    const std::map<int, std::int64_t>& terms() const { return terms_; }

    /// Accumulate coeff onto the term x^exponent, dropping it if it cancels.
    void add_term(int exponent, std::int64_t coeff);

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { lhs += rhs; return lhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { lhs -= rhs; return lhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);

    IntPoly scaled(std::int64_t factor) const;
    IntPoly squared() const { return *this * *this; }

    std::int64_t eval(std::int64_t x) const;

    bool operator==(const IntPoly&) const = default;

    /// Human-readable form with ascending exponents, e.g. "1-2x+x^2".
    std::string str() const;
    /// JSON object mapping decimal exponent strings to coefficients,
    /// keys ascending, e.g. {"0":1,"1":-2,"2":1}.
    std::string json() const;

private:
    std::map<int, std::int64_t> terms_;
};

/// Exact quotient num/den over the integers, or nullopt when den does not
/// divide num (nonzero remainder, or a step would need a fractional
/// coefficient).  den must be nonzero.
std::optional<IntPoly> exact_div(const IntPoly& num, const IntPoly& den);

/// prod_{j=lo}^{hi} (1 + (-1)^(j-1) x^floor(j/2))^power, the empty product
/// when lo > hi.  power must be 1 or 2.
IntPoly tower_factor(int lo, int hi, int power);

/// [n]_q = 1 + q + ... + q^(n-1) with q := x^q_exponent.
IntPoly q_int(int n, int q_exponent);
IntPoly q_factorial(int n, int q_exponent);

/// q-multinomial [top; parts..., residual]_q as a polynomial in x with
/// q := x^q_exponent.  The residual part top - sum(parts) is implicit and
/// must be nonnegative.  Computed by iterated exact division of
/// q-factorials, which always succeeds.
IntPoly q_multinomial(int top, const std::vector<int>& parts, int q_exponent);

class BiPoly {
public:
    // Key is (y exponent, x exponent); map order doubles as the canonical
    // term order "e_y,e_x" ascending.
    using Key = std::pair<int, int>;

    BiPoly() = default;

    static BiPoly one();
    static BiPoly monomial(int y_exp, int x_exp, std::int64_t coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    std::int64_t coeff(int y_exp, int x_exp) const;
    const std::map<Key, std::int64_t>& terms() const { return terms_; }

    void add_term(int y_exp, int x_exp, std::int64_t coeff);

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { lhs += rhs; return lhs; }
    friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { lhs -= rhs; return lhs; }
    friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);

    BiPoly scaled(std::int64_t factor) const;

    /// Substitute a concrete value for y, leaving a polynomial in x.
    /// at_y(-1) turns a length-graded series into the signed one.
    IntPoly at_y(std::int64_t y) const;
    std::int64_t eval(std::int64_t y, std::int64_t x) const;

    bool operator==(const BiPoly&) const = default;

    std::string str() const;
    /// JSON object with "e_y,e_x" keys, ascending, e.g. {"0,0":1,"1,1":2}.
    std::string json() const;

private:
    std::map<Key, std::int64_t> terms_;
};

}  // namespace oddlen
