#pragma once

// Certified k-th root enclosures and exact sign decisions for sums of
// radicals  sum_i c_i * A_i^(1/k_i)  with rational c_i and A_i >= 0.
//
// Equality is decided structurally: every term is rewritten so that its
// radicand is a k-th-power-free positive integer and its root index is
// minimal. Distinct canonical radicals are linearly independent over Q, so
// a sum whose canonical form is empty is exactly zero and any other sum is
// nonzero; interval refinement then settles its sign.

#include "lpe/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace lpe {

/// Enclosure [lo, hi] of a real number. Endpoints are dyadic rationals
/// except for exact point enclosures, which may be any rational.
struct DyadicInterval {
    Rational lo;
    Rational hi;
    unsigned precision_bits = 0;

    bool is_point() const { return lo == hi; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

inline bool is_perfect_power(const Integer& n, unsigned long k, Integer* root = nullptr) {
    if (n < 0) return false;
    Integer r;
    bool exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0;
    if (exact && root) *root = r;
    return exact;
}

/// Interval containing x^(1/k) of width at most 2^(-precision_bits);
/// a point interval when x is the k-th power of a rational.
inline DyadicInterval root_enclosure(const Rational& x, unsigned k, unsigned precision_bits) {
    if (x < 0) throw std::domain_error("root_enclosure: negative radicand");
    if (k == 0) throw std::domain_error("root_enclosure: root index must be positive");
    if (precision_bits == 0) throw std::domain_error("root_enclosure: precision must be positive");
    if (x == 0) return {Rational(0), Rational(0), precision_bits};
    Integer num_root, den_root;
    if (is_perfect_power(x.get_num(), k, &num_root) && is_perfect_power(x.get_den(), k, &den_root)) {
        Rational r = make_rational(num_root, den_root);
        return {r, r, precision_bits};
    }
    // floor(x * 2^(b*k)) = N  =>  x^(1/k) * 2^b lies in [N^(1/k), (N+1)^(1/k)) within [m, m+1].
    Integer scaled_num = x.get_num();
    mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(precision_bits) * k);
    Integer n;
    mpz_fdiv_q(n.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den_mpz_t());
    Integer m;
    mpz_root(m.get_mpz_t(), n.get_mpz_t(), k);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, precision_bits);
    return {make_rational(m, scale), make_rational(Integer(m + 1), scale), precision_bits};
}

struct RadicalTerm {
    Rational coefficient;
    Rational radicand;
    unsigned root_index = 1;

    friend bool operator==(const RadicalTerm&, const RadicalTerm&) = default;
};

namespace detail {

inline constexpr unsigned long kTrialDivisionLimit = 1UL << 16;

// Splits n > 0 as m^k * r. Trial division runs while d^(k+1) <= remaining
// cofactor; past that point the cofactor has at most k prime factors, so it
// holds a k-th power only if it is one. Divisors are capped at
// kTrialDivisionLimit, so for huge radicands r may keep a k-th power of a
// large prime. Comparisons stay sound; such sums may come out indeterminate
// instead of equal.
inline std::pair<Integer, Integer> extract_kth_power(Integer n, unsigned k) {
    Integer outside = 1, inside = 1;
    auto absorb = [&](const Integer& prime, unsigned long exponent) {
        outside *= pow(prime, exponent / k);
        inside *= pow(prime, exponent % k);
    };
    auto bound_exceeded = [&](const Integer& d) { return pow(d, k + 1) > n; };
    for (Integer d = 2; n > 1 && d <= kTrialDivisionLimit && !bound_exceeded(d); d += (d == 2 ? 1 : 2)) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            unsigned long exponent = mpz_remove(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
            absorb(d, exponent);
        }
    }
    Integer root;
    if (n > 1 && is_perfect_power(n, k, &root))
        outside *= root;
    else
        inside *= n;
    return {outside, inside};
}

}  // namespace detail

/// Formal sum of terms c * A^(1/k).
class RadicalSum {
public:
    RadicalSum() = default;

    static RadicalSum rational(const Rational& value) {
        RadicalSum s;
        s.terms_.push_back({value, Rational(1), 1});
        return s;
    }

    static RadicalSum root(const Rational& coefficient, const Rational& radicand, unsigned root_index) {
        if (radicand < 0) throw std::domain_error("RadicalSum: negative radicand");
        if (root_index == 0) throw std::domain_error("RadicalSum: root index must be positive");
        RadicalSum s;
        s.terms_.push_back({coefficient, radicand, root_index});
        return s;
    }

    const std::vector<RadicalTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    RadicalSum& operator+=(const RadicalSum& other) {
        terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
        return *this;
    }

    RadicalSum& operator*=(const Rational& factor) {
        for (auto& t : terms_) t.coefficient *= factor;
        return *this;
    }

    friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
    friend RadicalSum operator*(const Rational& factor, RadicalSum s) { return s *= factor; }
    friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) {
        for (auto t : b.terms_) {
            t.coefficient = -t.coefficient;
            a.terms_.push_back(std::move(t));
        }
        return a;
    }

    /// Canonical form: k-th-power-free integer radicands, minimal root
    /// indices, like terms merged, zero terms dropped, sorted by
    /// (root_index, radicand).
    RadicalSum normalized() const {
        std::map<std::pair<unsigned, Integer>, Rational> merged;
        for (const auto& t : terms_) {
            if (t.coefficient == 0 || t.radicand == 0) continue;
            auto [coefficient, radicand, index] = canonical_term(t);
            merged[{index, radicand}] += coefficient;
        }
        RadicalSum out;
        for (const auto& [key, coefficient] : merged) {
            if (coefficient == 0) continue;
            out.terms_.push_back({coefficient, Rational(key.second), key.first});
        }
        return out;
    }

    /// Sum of term enclosures at the given precision.
    DyadicInterval enclose(unsigned precision_bits) const {
        DyadicInterval sum{Rational(0), Rational(0), precision_bits};
        for (const auto& t : terms_) {
            DyadicInterval r = root_enclosure(t.radicand, t.root_index, precision_bits);
            if (t.coefficient >= 0) {
                sum.lo += t.coefficient * r.lo;
                sum.hi += t.coefficient * r.hi;
            } else {
                sum.lo += t.coefficient * r.hi;
                sum.hi += t.coefficient * r.lo;
            }
        }
        return sum;
    }

    double approximate() const {
        DyadicInterval e = enclose(64);
        return to_double((e.lo + e.hi) / 2);
    }

    friend bool operator==(const RadicalSum&, const RadicalSum&) = default;

private:
    static std::tuple<Rational, Integer, unsigned> canonical_term(const RadicalTerm& t) {
        unsigned k = t.root_index;
        const Integer& p = t.radicand.get_num();
        const Integer& q = t.radicand.get_den();
        if (k == 1) return {t.coefficient * t.radicand, Integer(1), 1};
        // (p/q)^(1/k) = (p q^(k-1))^(1/k) / q
        Integer n = p * pow(q, k - 1);
        auto [outside, inside] = detail::extract_kth_power(n, k);
        Rational coefficient = t.coefficient * make_rational(outside, q);
        // Lower the index while the radicand is a perfect power of a divisor of k.
        bool reduced = true;
        while (reduced && inside > 1) {
            reduced = false;
            for (unsigned d = 2; d <= k; ++d) {
                Integer root;
                if (k % d == 0 && is_perfect_power(inside, d, &root)) {
                    inside = root;
                    k /= d;
                    reduced = true;
                    break;
                }
            }
        }
        if (inside == 1) k = 1;
        return {coefficient, inside, k};
    }

    std::vector<RadicalTerm> terms_;
};

enum class Ordering { Less, Equal, Greater };

inline const char* to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "less";
        case Ordering::Equal: return "equal";
        case Ordering::Greater: return "greater";
    }
    return "?";
}

/// Raised when the precision ladder tops out before the enclosure of a
/// provably nonzero difference excludes zero.
class IndeterminateError : public std::runtime_error {
public:
    explicit IndeterminateError(unsigned precision_bits)
        : std::runtime_error("radical comparison indeterminate at " + std::to_string(precision_bits) +
                             " bits"),
          precision_bits_(precision_bits) {}
    unsigned precision_bits() const { return precision_bits_; }

private:
    unsigned precision_bits_;
};

inline constexpr unsigned kInitialPrecisionBits = 64;
inline constexpr unsigned kDefaultPrecisionCap = 4096;

struct ComparisonResult {
    Ordering ordering;
    unsigned precision_bits;  ///< 0 when decided without refinement
};

/// Exact comparison with the precision ladder 64, 128, ..., precision_cap.
inline ComparisonResult compare_radical_sums_detailed(const RadicalSum& lhs, const RadicalSum& rhs,
                                                      unsigned precision_cap = kDefaultPrecisionCap) {
    RadicalSum difference = (lhs - rhs).normalized();
    if (difference.empty()) return {Ordering::Equal, 0};
    if (difference.terms().size() == 1 && difference.terms()[0].radicand == 1)
        return {difference.terms()[0].coefficient > 0 ? Ordering::Greater : Ordering::Less, 0};
    unsigned bits = kInitialPrecisionBits;
    unsigned last = 0;
    while (bits <= precision_cap) {
        DyadicInterval e = difference.enclose(bits);
        if (e.lo > 0) return {Ordering::Greater, bits};
        if (e.hi < 0) return {Ordering::Less, bits};
        last = bits;
        bits *= 2;
    }
    throw IndeterminateError(last == 0 ? precision_cap : last);
}

inline Ordering compare_radical_sums(const RadicalSum& lhs, const RadicalSum& rhs,
                                     unsigned precision_cap = kDefaultPrecisionCap) {
    return compare_radical_sums_detailed(lhs, rhs, precision_cap).ordering;
}

}  // namespace lpe
