#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>

namespace qhall {

using Int = boost::multiprecision::cpp_int;

// Sparse exact Laurent polynomial in one variable: exponent -> coefficient,
// zero coefficients never stored. Addition, multiplication and substitution
// are exact; the variable name is a formatting concern only.
class LaurentPoly {
public:
    LaurentPoly() = default;  // zero

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(1, 0); }
    static LaurentPoly monomial(Int coeff, long exp);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;

    Int coeff(long exp) const;
    const std::map<long, Int>& coeffs() const { return c_; }
    long min_exp() const;  // throws on zero polynomial
    long max_exp() const;

    void add_term(long exp, const Int& coeff);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;

    bool operator==(const LaurentPoly&) const = default;

    // multiply by t^d
    LaurentPoly shifted(long d) const;

    // t -> t^{-1}; an involution
    LaurentPoly reciprocal() const;

    // sum of coefficients (= value at 1), always an integer
    Int eval_one() const;

    // exact evaluation at an integer point; requires min_exp() >= 0
    Int eval(const Int& x) const;

    // exact division; nullopt when the division leaves a remainder
    std::optional<LaurentPoly> divided_exactly_by(const LaurentPoly& d) const;

    bool has_negative_coeff() const;

    // "1 + 4t + 8t^2" style, ascending exponents
    std::string to_string(const std::string& var = "t") const;

private:
    std::map<long, Int> c_;
};

}  // namespace qhall
