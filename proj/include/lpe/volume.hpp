#pragma once

// Exact volumes of V-polytopes and of their dilations by axis-parallel
// cubes.
//
// vol_n(P) is integrated slice by slice along the last coordinate: between
// consecutive generator heights the slice volume is a polynomial of degree
// at most n-1 in the height, so a closed Newton-Cotes rule with n nodes is
// exact on every piece. Each slice is itself a V-polytope generated by the
// generators at that height and the crossing points of generator pairs.
//
// For cube dilations, vol(P + [-c,c]^n) = sum over J of (2c)^|J| times the
// volume of the projection of P that forgets the coordinates in J.

#include "lpe/planar.hpp"
#include "lpe/polytope.hpp"
#include "lpe/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lpe {

/// Same body with redundant generators removed: the hull vertices in
/// dimensions 1 and 2, LP pruning above.
inline RationalPolytope simplified(const RationalPolytope& p) {
    if (p.generators().size() <= 1) return p;
    if (p.dim() == 1) {
        auto [lo, hi] = bounding_box(p);
        return lo == hi ? RationalPolytope(1, {lo}) : RationalPolytope(1, {lo, hi});
    }
    if (p.dim() == 2) return RationalPolytope(2, hull_2d(p.generators()).vertices);
    return reduce_generators(p);
}

/// P intersected with {x_coord = value}, with that coordinate dropped.
/// Empty when the hyperplane misses P. Requires dim >= 2.
inline std::optional<RationalPolytope> section(const RationalPolytope& p, std::size_t coord, const Rational& value) {
    if (p.dim() < 2 || coord >= p.dim()) throw std::invalid_argument("section: bad coordinate");
    auto drop = [&](const Point& x) {
        Point y;
        y.reserve(x.size() - 1);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (i != coord) y.push_back(x[i]);
        return y;
    };
    std::vector<Point> below, above, gens;
    for (const auto& g : p.generators()) {
        if (g[coord] == value)
            gens.push_back(drop(g));
        else if (g[coord] < value)
            below.push_back(g);
        else
            above.push_back(g);
    }
    for (const auto& a : below)
        for (const auto& b : above) {
            Rational s = (value - a[coord]) / (b[coord] - a[coord]);
            gens.push_back(drop(add(a, scaled(s, sub(b, a)))));
        }
    if (gens.empty()) return std::nullopt;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return RationalPolytope(p.dim() - 1, std::move(gens));
}

namespace detail {

// Weights w_0..w_{m-1} of the closed interpolatory rule on [0, 1] with m
// equally spaced nodes (m >= 2), exact for polynomials of degree < m.
inline std::vector<Rational> newton_cotes_weights(std::size_t m) {
    // Solve sum_j w_j (j/(m-1))^e = 1/(e+1) for e = 0..m-1.
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
    for (std::size_t e = 0; e < m; ++e) {
        for (std::size_t j = 0; j < m; ++j) a[e][j] = pow(make_rational(static_cast<long>(j), static_cast<long>(m - 1)), e);
        a[e][m] = make_rational(1, static_cast<long>(e + 1));
    }
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t r = c;
        while (a[r][c] == 0) ++r;
        std::swap(a[r], a[c]);
        Rational inv = 1 / a[c][c];
        for (auto& v : a[c]) v *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j <= m; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<Rational> w(m);
    for (std::size_t j = 0; j < m; ++j) w[j] = a[j][m];
    return w;
}

}  // namespace detail

/// Exact n-dimensional volume of conv(generators); zero when the body is
/// lower-dimensional.
inline Rational exact_volume(const RationalPolytope& p) {
    const std::size_t n = p.dim();
    if (n == 1) {
        auto [lo, hi] = bounding_box(p);
        return hi[0] - lo[0];
    }
    if (n == 2) return area_2d(p);
    RationalPolytope body = simplified(p);
    std::vector<Rational> heights;
    for (const auto& g : body.generators()) heights.push_back(g[n - 1]);
    std::sort(heights.begin(), heights.end());
    heights.erase(std::unique(heights.begin(), heights.end()), heights.end());
    if (heights.size() < 2) return 0;
    const std::size_t nodes = n;  // slice volume has degree <= n-1
    const std::vector<Rational> weights = detail::newton_cotes_weights(nodes);
    auto slice_volume = [&](const Rational& t) -> Rational {
        auto s = section(body, n - 1, t);
        return s ? exact_volume(*s) : Rational(0);
    };
    Rational total = 0;
    Rational previous_end_value = slice_volume(heights.front());
    for (std::size_t k = 0; k + 1 < heights.size(); ++k) {
        const Rational& a = heights[k];
        const Rational& b = heights[k + 1];
        Rational piece = weights[0] * previous_end_value;
        for (std::size_t j = 1; j < nodes; ++j) {
            Rational t = a + (b - a) * make_rational(static_cast<long>(j), static_cast<long>(nodes - 1));
            Rational v = slice_volume(t);
            piece += weights[j] * v;
            if (j == nodes - 1) previous_end_value = v;
        }
        total += (b - a) * piece;
    }
    return total;
}

/// Exact volume of P + [-c, c]^n for c >= 0.
inline Rational exact_volume_dilated(const RationalPolytope& p, const Rational& c) {
    if (c < 0) throw std::domain_error("exact_volume_dilated: negative radius");
    const std::size_t n = p.dim();
    if (c == 0) return exact_volume(p);
    const RationalPolytope body = simplified(p);
    Rational total = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> keep;
        std::size_t forgotten = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1)
                ++forgotten;
            else
                keep.push_back(i);
        }
        Rational projected = keep.empty() ? Rational(1) : exact_volume(project_coords(body, keep));
        total += pow(Rational(2 * c), forgotten) * projected;
    }
    return total;
}

}  // namespace lpe
