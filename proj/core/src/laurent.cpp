#include "qhall/laurent.hpp"

#include <stdexcept>

namespace qhall {

LaurentPoly LaurentPoly::monomial(Int coeff, long exp) {
    LaurentPoly p;
    if (coeff != 0) p.c_[exp] = std::move(coeff);
    return p;
}

bool LaurentPoly::is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

Int LaurentPoly::coeff(long exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Int(0) : it->second;
}

long LaurentPoly::min_exp() const {
    if (c_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return c_.begin()->first;
}

long LaurentPoly::max_exp() const {
    if (c_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return c_.rbegin()->first;
}

void LaurentPoly::add_term(long exp, const Int& coeff) {
    if (coeff == 0) return;
    auto it = c_.find(exp);
    if (it == c_.end()) {
        c_.emplace(exp, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) c_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, v] : o.c_) add_term(e, v);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, v] : o.c_) add_term(e, -v);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, va] : a.c_)
        for (const auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_[e] = -v;
    return r;
}

LaurentPoly LaurentPoly::shifted(long d) const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_[e + d] = v;
    return r;
}

LaurentPoly LaurentPoly::reciprocal() const {
    LaurentPoly r;
    for (const auto& [e, v] : c_) r.c_[-e] = v;
    return r;
}

Int LaurentPoly::eval_one() const {
    Int s = 0;
    for (const auto& [e, v] : c_) s += v;
    return s;
}

Int LaurentPoly::eval(const Int& x) const {
    if (c_.empty()) return 0;
    if (min_exp() < 0)
        throw std::logic_error("eval with negative exponents");
    // Horner over the sparse support, descending exponents
    Int acc = 0;
    long prev = -1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        if (prev >= 0)
            for (long k = 0; k < prev - it->first; ++k) acc *= x;
        acc += it->second;
        prev = it->first;
    }
    for (long k = 0; k < prev; ++k) acc *= x;
    return acc;
}

std::optional<LaurentPoly> LaurentPoly::divided_exactly_by(
    const LaurentPoly& d) const {
    if (d.is_zero()) throw std::logic_error("division by zero polynomial");
    if (is_zero()) return LaurentPoly();
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const long dmax = d.max_exp();
    const long min_qe = min_exp() - d.min_exp();
    const Int& dlead = d.c_.rbegin()->second;
    while (!rem.is_zero()) {
        long rmax = rem.max_exp();
        Int rlead = rem.c_.rbegin()->second;
        if (rlead % dlead != 0) return std::nullopt;
        Int q = rlead / dlead;
        long qe = rmax - dmax;
        if (qe < min_qe) return std::nullopt;
        quot.add_term(qe, q);
        for (const auto& [e, v] : d.c_) rem.add_term(e + qe, -q * v);
        if (!rem.is_zero() && rem.max_exp() >= rmax) return std::nullopt;
    }
    return quot;
}

bool LaurentPoly::has_negative_coeff() const {
    for (const auto& [e, v] : c_)
        if (v < 0) return true;
    return false;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, v] : c_) {
        Int av = v < 0 ? Int(-v) : v;
        if (first) {
            if (v < 0) s += "-";
            first = false;
        } else {
            s += v < 0 ? " - " : " + ";
        }
        bool unit = (av == 1);
        if (e == 0) {
            s += av.str();
        } else {
            if (!unit) s += av.str();
            s += var;
            if (e != 1) {
                s += "^";
                s += std::to_string(e);
            }
        }
    }
    return s;
}

}  // namespace qhall
