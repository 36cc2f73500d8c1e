#pragma once

#include "canon/counting.hpp"
#include "canon/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

namespace canon {

enum class Var { t, u };

/// Exponent pair (deg_t, deg_u).
using Exponents = std::pair<int, int>;

/// Sparse polynomial in t and u with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored, so equality is coefficient-wise.
class BivariatePoly {
public:
    using TermMap = std::map<Exponents, bigint>;

    BivariatePoly() = default;

    static BivariatePoly constant(bigint c) { return monomial(std::move(c), 0, 0); }
    static BivariatePoly monomial(bigint c, int deg_t, int deg_u) {
        BivariatePoly p;
        p.add_term(deg_t, deg_u, c);
        return p;
    }
    static BivariatePoly t(int e = 1) { return monomial(1, e, 0); }
    static BivariatePoly u(int e = 1) { return monomial(1, 0, e); }

    void add_term(int deg_t, int deg_u, const bigint& c) {
        if (deg_t < 0 || deg_u < 0) throw domain_error("negative exponent");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace({deg_t, deg_u}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bigint coeff(int deg_t, int deg_u) const {
        auto it = terms_.find({deg_t, deg_u});
        return it == terms_.end() ? bigint(0) : it->second;
    }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// -1 for the zero polynomial.
    int degree_t() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first);
        return d;
    }
    int degree_u() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, e.second);
        return d;
    }
    int min_degree_t() const {
        if (terms_.empty()) return -1;
        int d = terms_.begin()->first.first;
        for (const auto& [e, c] : terms_) d = std::min(d, e.first);
        return d;
    }

    BivariatePoly& operator+=(const BivariatePoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }
    BivariatePoly& operator-=(const BivariatePoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
        return *this;
    }
    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }

    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
        BivariatePoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }
    BivariatePoly& operator*=(const BivariatePoly& o) { return *this = *this * o; }

    BivariatePoly pow(int e) const {
        BivariatePoly r = constant(1);
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

    /// Replaces `v` by the monomial c * t^a * u^b.
    BivariatePoly substitute(Var v, const bigint& c, int a, int b) const {
        BivariatePoly r;
        for (const auto& [e, coef] : terms_) {
            const int k = v == Var::t ? e.first : e.second;
            const int keep_t = v == Var::t ? 0 : e.first;
            const int keep_u = v == Var::u ? 0 : e.second;
            bigint factor = 1;
            for (int i = 0; i < k; ++i) factor *= c;
            r.add_term(keep_t + a * k, keep_u + b * k, coef * factor);
        }
        return r;
    }

    /// u := t
    BivariatePoly diagonal() const { return substitute(Var::u, 1, 1, 0); }
    /// u := 1
    BivariatePoly at_u1() const { return substitute(Var::u, 1, 0, 0); }
    /// t := 1
    BivariatePoly at_t1() const { return substitute(Var::t, 1, 0, 0); }

    /// t^degree * P(1/t, u), i.e. t^i u^j -> t^(degree - i) u^j.
    BivariatePoly reverse_in_t(int degree) const {
        if (degree < degree_t())
            throw domain_error("reversal degree " + std::to_string(degree) + " is below deg_t = " + std::to_string(degree_t()));
        BivariatePoly r;
        for (const auto& [e, c] : terms_) r.add_term(degree - e.first, e.second, c);
        return r;
    }

    /// t^degree * P(1/t, u/t), i.e. t^i u^j -> t^(degree - i - j) u^j.
    BivariatePoly reflect(int degree) const {
        BivariatePoly r;
        for (const auto& [e, c] : terms_) {
            if (degree < e.first + e.second)
                throw domain_error("reflection degree " + std::to_string(degree) + " is below total degree of a term");
            r.add_term(degree - e.first - e.second, e.second, c);
        }
        return r;
    }

    bool is_palindromic_in_t(int degree) const {
        if (degree < degree_t()) return false;
        return *this == reverse_in_t(degree);
    }

    bigint evaluate(const bigint& tv, const bigint& uv) const {
        bigint total = 0;
        for (const auto& [e, c] : terms_) {
            bigint term = c;
            for (int i = 0; i < e.first; ++i) term *= tv;
            for (int i = 0; i < e.second; ++i) term *= uv;
            total += term;
        }
        return total;
    }

    /// Terms in ascending (deg_t, deg_u) order, e.g. "u^3 + t + 2t*u + t^2".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            bigint mag = c < 0 ? bigint(-c) : c;
            if (first) {
                if (c < 0) s += '-';
            } else {
                s += c < 0 ? " - " : " + ";
            }
            first = false;
            std::string mono;
            if (e.first > 0) mono += e.first == 1 ? "t" : "t^" + std::to_string(e.first);
            if (e.second > 0) {
                if (!mono.empty()) mono += '*';
                mono += e.second == 1 ? "u" : "u^" + std::to_string(e.second);
            }
            if (mono.empty()) s += mag.str();
            else if (mag == 1) s += mono;
            else s += mag.str() + mono;
        }
        return s;
    }

private:
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const BivariatePoly& p) { return os << p.to_string(); }

/// Builds a polynomial in t from coefficients of t^0, t^1, ...
inline BivariatePoly poly_in_t(std::initializer_list<long long> coeffs) {
    BivariatePoly p;
    int i = 0;
    for (long long c : coeffs) p.add_term(i++, 0, c);
    return p;
}

struct TermDiff {
    Exponents exponents;
    bigint lhs;
    bigint rhs;
};

/// First exponent pair, in ascending order, where the two polynomials disagree.
inline std::optional<TermDiff> first_difference(const BivariatePoly& a, const BivariatePoly& b) {
    const BivariatePoly d = a - b;
    if (d.is_zero()) return std::nullopt;
    const Exponents e = d.terms().begin()->first;
    return TermDiff{e, a.coeff(e.first, e.second), b.coeff(e.first, e.second)};
}

} // namespace canon
