#include "gns/json_io.hpp"

#include <algorithm>

#include "gns/box.hpp"
#include "gns/error.hpp"

namespace gns {

using nlohmann::json;

json to_json(const Point& p) {
    json arr = json::array();
    for (Coord c : p.coords()) arr.push_back(c);
    return arr;
}

json to_json(std::span<const Point> points) {
    json arr = json::array();
    for (const auto& p : points) arr.push_back(to_json(p));
    return arr;
}

json gap_set_to_json(const GapSet& s) {
    return json{{"d", s.dim()}, {"gaps", to_json(s.gaps())}};
}

GapSet gap_set_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("d") || !doc.contains("gaps")) {
        throw Error(ErrorKind::MalformedInput, "expected an object with \"d\" and \"gaps\"");
    }
    if (!doc["d"].is_number_integer() || doc["d"].get<std::int64_t>() < 1) {
        throw Error(ErrorKind::MalformedInput, "\"d\" must be a positive integer");
    }
    if (!doc["gaps"].is_array()) throw Error(ErrorKind::MalformedInput, "\"gaps\" must be an array");
    const auto d = doc["d"].get<std::size_t>();
    std::vector<Point> gaps;
    for (const auto& item : doc["gaps"]) {
        if (!item.is_array()) throw Error(ErrorKind::MalformedInput, "each gap must be an array");
        std::vector<Coord> coords;
        for (const auto& c : item) {
            if (!c.is_number_integer()) throw Error(ErrorKind::MalformedInput, "coordinates must be integers");
            if (c.is_number_integer() && !c.is_number_unsigned() && c.get<std::int64_t>() < 0) {
                throw Error(ErrorKind::NegativeCoordinate, "coordinate " + c.dump());
            }
            coords.push_back(c.get<Coord>());
        }
        gaps.emplace_back(std::move(coords));
    }
    return validate(d, std::move(gaps));
}

GapSet gap_set_from_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::MalformedInput, e.what());
    }
    return gap_set_from_json(doc);
}

json order_to_json(const MaximalGapOrder& order) {
    return json{{"type", "maximal-gap"}, {"h", to_json(order.h())}};
}

json classification_to_json(const Classification& c) {
    json j{
        {"genus", c.genus},
        {"isFrobenius", c.is_frobenius},
        {"frobeniusGap", c.frobenius_gap ? to_json(*c.frobenius_gap) : json(nullptr)},
        {"tau", c.tau},
        {"t", c.t},
        {"FA", to_json(c.frobenius_allowable)},
        {"PF", to_json(c.pseudo_frobenius)},
        {"quasiSymmetric", c.quasi_symmetric},
        {"quasiIrreducible", c.quasi_irreducible},
        {"symmetric", c.symmetric},
        {"pseudoSymmetric", c.pseudo_symmetric},
        {"irreducible", c.irreducible},
    };
    j["almostSymmetric"] = c.almost_symmetric ? json(*c.almost_symmetric) : json(nullptr);
    return j;
}

json pf_graph_to_json(const PFGraph& g) {
    const Box box(g.f);
    auto seq = [&](const std::vector<std::size_t>& ids) {
        json arr = json::array();
        for (auto i : ids) arr.push_back(to_json(box.point_at(i)));
        return arr;
    };
    json paths = json::array(), cycles = json::array();
    for (const auto& p : g.paths) paths.push_back(seq(p));
    for (const auto& c : g.cycles) cycles.push_back(seq(c));
    json path_lengths = json::array(), cycle_lengths = json::array();
    for (const auto& p : g.paths) path_lengths.push_back(p.size());
    for (const auto& c : g.cycles) cycle_lengths.push_back(c.size());
    return json{{"P", to_json(g.p)},
                {"F", to_json(g.f)},
                {"vertices", box.size()},
                {"degreeTwoVertices", g.degree_two_vertices},
                {"loopVertices", seq(g.loop_vertices)},
                {"pathLengths", path_lengths},
                {"cycleLengths", cycle_lengths},
                {"paths", paths},
                {"cycles", cycles}};
}

std::string big_to_string(const BigInt& v) { return v.str(); }

json sandwich_to_json(const SandwichReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"holds", c.holds}, {"proven", c.proven}});
    }
    json j{
        {"F", to_json(r.f)},
        {"norm", r.norm},
        {"normMinusOne", r.norm_minus_one},
        {"familyLower", big_to_string(r.family_lower)},
        {"aPower", static_cast<double>(r.a_d_power)},
        {"pairBound", big_to_string(r.pair_bound)},
        {"sqrt3Power", static_cast<double>(r.sqrt3_power)},
        {"epsD", static_cast<double>(r.eps_d)},
        {"epsUpper", static_cast<double>(r.eps_upper)},
        {"checks", checks},
    };
    j["d5Lower"] = r.d5_lower ? json(big_to_string(*r.d5_lower)) : json(nullptr);
    j["exact"] = r.exact ? json(*r.exact) : json(nullptr);
    return j;
}

}  // namespace gns
