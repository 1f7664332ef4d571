#pragma once

// Exact rational and integer arithmetic on top of GMP, plus the handful of
// helpers the rest of the library needs (parsing, "p/q" formatting,
// floor/ceil, integer powers, binomial coefficients).

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lpe {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of Q^n.
using Point = std::vector<Rational>;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

/// Canonical "p/q" form; integers carry an explicit "/1".
inline std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p/q", "p" or a terminating decimal such as "-0.75".
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return std::invalid_argument("not a rational: '" + s + "'"); };
    if (s.empty()) throw bad();
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto to_int = [](std::string t) {
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        return Integer(t, 10);
    };
    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!valid_int(num) || !valid_int(den)) throw bad();
        return make_rational(to_int(num), to_int(den));
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        std::string digits = (whole == "-" || whole == "+" || whole.empty()) ? "0" : whole;
        if (!valid_int(digits) || frac.empty() || !valid_int(frac) || frac[0] == '-' || frac[0] == '+')
            throw bad();
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Integer magnitude = abs(to_int(digits)) * scale + Integer(frac, 10);
        return make_rational(negative ? Integer(-magnitude) : magnitude, scale);
    }
    if (!valid_int(s)) throw bad();
    return Rational(to_int(s));
}

inline Integer floor_int(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil_int(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational pow(const Rational& base, unsigned long exponent) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return r;
}

inline Integer pow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

/// C(r, s) for integer arguments; s > r is a domain error.
inline Integer binomial(unsigned long r, unsigned long s) {
    if (s > r) throw std::domain_error("binomial: lower index exceeds upper index");
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), r, s);
    return result;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline Point make_point(std::initializer_list<Rational> coords) { return Point(coords); }

inline Point zero_point(std::size_t dim) { return Point(dim, Rational(0)); }

inline bool is_integer_point(const Point& p) {
    for (const auto& c : p)
        if (!is_integer(c)) return false;
    return true;
}

inline Point add(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw std::invalid_argument("point dimension mismatch");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Point sub(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw std::invalid_argument("point dimension mismatch");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Point scaled(const Rational& s, const Point& a) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline Point negated(const Point& a) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Rational dot(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw std::invalid_argument("point dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace lpe
