#pragma once

// JSON encoding of polytopes, regions and concave functions. Rationals are
// always "p/q" strings; parsing also accepts JSON integers and plain
// integer or decimal strings. Coordinate indices are 0-based.
//
//   polytope  {"dim": 2, "generators": [["0/1","0/1"], ["1/1","0/1"]]}
//   region    {"op": "base", "polytope": P}
//             {"op": "dilate", "radius": "3/4", "open": true, "of": P}
//             {"op": "erode", "radius": "1/1", "of": P}
//             {"op": "intersect", "args": [R, R, ...]}
//             {"op": "slice", "free": [0, 1], "of": R}
//   concave   {"domain": P, "pieces": [{"slope": [...], "intercept": "2/1"}]}

#include "lpe/concave.hpp"
#include "lpe/polytope.hpp"
#include "lpe/rational.hpp"
#include "lpe/region.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpe {

using Json = nlohmann::json;

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline Json rational_to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("expected a rational, got " + j.dump());
}

inline Json point_to_json(const Point& p) {
    Json a = Json::array();
    for (const auto& x : p) a.push_back(rational_to_json(x));
    return a;
}

inline Point point_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a coordinate array");
    Point p;
    for (const auto& x : j) p.push_back(rational_from_json(x));
    return p;
}

inline Json to_json(const RationalPolytope& p) {
    Json gens = Json::array();
    for (const auto& g : p.generators()) gens.push_back(point_to_json(g));
    return {{"dim", p.dim()}, {"generators", gens}};
}

inline RationalPolytope polytope_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("generators"))
        throw ParseError("polytope needs fields dim and generators");
    if (!j["dim"].is_number_unsigned()) throw ParseError("polytope dim must be a positive integer");
    std::vector<Point> gens;
    for (const auto& g : j["generators"]) gens.push_back(point_from_json(g));
    try {
        return RationalPolytope(j["dim"].get<std::size_t>(), std::move(gens));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

namespace detail {

inline Json region_node_to_json(const Region& r) {
    switch (r.kind()) {
        case Region::Kind::Base:
            return {{"op", "base"}, {"polytope", to_json(r.polytope())}};
        case Region::Kind::Dilate:
            return {{"op", "dilate"},
                    {"radius", rational_to_json(r.radius())},
                    {"open", r.openness() == Openness::Open},
                    {"of", to_json(r.polytope())}};
        case Region::Kind::Erode:
            return {{"op", "erode"}, {"radius", rational_to_json(r.radius())}, {"of", to_json(r.polytope())}};
        case Region::Kind::Intersect: {
            Json args = Json::array();
            args.push_back(region_node_to_json(r.left()));
            args.push_back(region_node_to_json(r.right()));
            return {{"op", "intersect"}, {"args", args}};
        }
    }
    throw std::logic_error("unknown region kind");
}

}  // namespace detail

inline Json to_json(const Region& r) {
    Json body = detail::region_node_to_json(r);
    if (!r.slice()) return body;
    return {{"op", "slice"}, {"free", r.slice()->free}, {"of", body}};
}

inline Region region_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("op") || !j["op"].is_string()) throw ParseError("region needs an op field");
    const std::string op = j["op"];
    auto need = [&](const char* field) -> const Json& {
        if (!j.contains(field)) throw ParseError("region op '" + op + "' needs field " + field);
        return j[field];
    };
    // Operands of dilate/erode may be written as a polytope or a base region.
    auto operand_polytope = [&](const Json& of) {
        if (of.is_object() && of.contains("op")) {
            Region inner = region_from_json(of);
            if (inner.kind() != Region::Kind::Base) throw ParseError("operand must be a polytope");
            return inner.polytope();
        }
        return polytope_from_json(of);
    };
    try {
        if (op == "base") return Region::base(polytope_from_json(need("polytope")));
        if (op == "dilate") {
            const Json& open = need("open");
            if (!open.is_boolean()) throw ParseError("dilate.open must be a boolean");
            const Json& of = need("of");
            Rational radius = rational_from_json(need("radius"));
            Openness o = open.get<bool>() ? Openness::Open : Openness::Closed;
            if (of.is_object() && of.contains("op")) return Region::dilate(region_from_json(of), radius, o);
            return Region::dilate(polytope_from_json(of), radius, o);
        }
        if (op == "erode") return Region::erode(operand_polytope(need("of")), rational_from_json(need("radius")));
        if (op == "intersect") {
            const Json& args = need("args");
            if (!args.is_array() || args.empty()) throw ParseError("intersect.args must be a nonempty array");
            Region acc = region_from_json(args[0]);
            for (std::size_t i = 1; i < args.size(); ++i) acc = Region::intersect(acc, region_from_json(args[i]));
            return acc;
        }
        if (op == "slice") {
            SublatticeMask mask;
            for (const auto& i : need("free")) {
                if (!i.is_number_unsigned()) throw ParseError("slice.free must list coordinate indices");
                mask.free.push_back(i.get<std::size_t>());
            }
            return region_from_json(need("of")).with_slice(std::move(mask));
        }
    } catch (const ParseError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    } catch (const std::domain_error& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown region op '" + op + "'");
}

inline Json to_json(const ConcavePWA& f) {
    Json pieces = Json::array();
    for (const auto& p : f.pieces())
        pieces.push_back({{"slope", point_to_json(p.slope)}, {"intercept", rational_to_json(p.intercept)}});
    return {{"domain", to_json(f.domain())}, {"pieces", pieces}};
}

inline ConcavePWA concave_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("domain") || !j.contains("pieces"))
        throw ParseError("concave function needs fields domain and pieces");
    std::vector<AffinePiece> pieces;
    for (const auto& p : j["pieces"]) {
        if (!p.contains("slope") || !p.contains("intercept")) throw ParseError("piece needs slope and intercept");
        pieces.push_back({point_from_json(p["slope"]), rational_from_json(p["intercept"])});
    }
    try {
        return ConcavePWA(polytope_from_json(j["domain"]), std::move(pieces));
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

/// 64-bit FNV-1a of a byte string, rendered as 16 hex digits.
inline std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    return out;
}

}  // namespace lpe
