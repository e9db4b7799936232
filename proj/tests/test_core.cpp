#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "gns/box.hpp"
#include "gns/error.hpp"
#include "gns/gap_set.hpp"
#include "gns/point.hpp"

using namespace gns;

namespace {

const std::vector<Point> kSquareCorner = {{0, 1}, {0, 2}, {0, 3}, {1, 0}, {2, 0}, {3, 0}, {1, 1}};
const std::vector<Point> kStaircase = {{1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 2}, {1, 3}};

ErrorKind kind_of(std::size_t d, std::vector<Point> gaps) {
    try {
        validate(d, std::move(gaps));
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::MalformedInput;
}

// Closure check straight from the definition: every pair of non-gaps below the
// largest gap coordinate sums to a non-gap.
bool closed_by_definition(std::size_t d, const std::set<Point>& gaps) {
    Coord m = 0;
    for (const auto& g : gaps)
        for (std::size_t i = 0; i < d; ++i) m = std::max(m, g[i]);
    std::vector<Point> grid;
    std::vector<Coord> c(d, 0);
    while (true) {
        grid.emplace_back(c);
        std::size_t i = 0;
        while (i < d && ++c[i] > m) c[i++] = 0;
        if (i == d) break;
    }
    for (const auto& a : grid) {
        if (gaps.count(a)) continue;
        for (const auto& b : grid) {
            if (gaps.count(b)) continue;
            std::vector<Coord> s(d);
            for (std::size_t i = 0; i < d; ++i) s[i] = a[i] + b[i];
            if (gaps.count(Point(s))) return false;
        }
    }
    return true;
}

std::set<Point> pf_by_definition(const std::set<Point>& gaps) {
    std::set<Point> out;
    for (const auto& p : gaps) {
        bool ok = true;
        for (const auto& h : gaps) {
            auto diff = subtract(h, p);
            if (diff && !diff->is_zero() && !gaps.count(*diff)) {
                // h = p + s with s a nonzero element; for P to be pseudo-Frobenius
                // such an h must not be a gap.
                ok = false;
                break;
            }
        }
        if (ok) out.insert(p);
    }
    return out;
}

}  // namespace

TEST_CASE("natural order") {
    CHECK(natural_leq({1, 1}, {2, 2}));
    CHECK_FALSE(natural_leq({1, 4}, {2, 2}));
    CHECK(natural_leq({3, 7}, {3, 7}));
    CHECK_THROWS_AS(natural_leq({1}, {1, 2}), Error);
}

TEST_CASE("point arithmetic and parsing") {
    CHECK(add({1, 2}, {3, 4}) == Point{4, 6});
    CHECK(subtract({3, 4}, {1, 2}) == Point{2, 2});
    CHECK_FALSE(subtract({3, 1}, {1, 2}).has_value());
    CHECK(half({4, 2}) == Point{2, 1});
    CHECK_FALSE(half({3, 2}).has_value());
    CHECK(parse_point("2,3") == Point{2, 3});
    CHECK(parse_point("[2, 3]") == Point{2, 3});
    CHECK(parse_point_list("1,0;0,1").size() == 2);
    CHECK(parse_point_list("").empty());
    CHECK_THROWS_AS(parse_point("1,-2"), Error);
    CHECK_THROWS_AS(parse_point("a"), Error);
    CHECK_THROWS_AS(add({~Coord{0}}, {1}), Error);
}

TEST_CASE("box indexing is a bijection and monotone") {
    const Box box({2, 1, 3});
    CHECK(box.size() == 24);
    std::set<Point> seen;
    for (std::size_t i = 0; i < box.size(); ++i) {
        const Point p = box.point_at(i);
        CHECK(box.index_of(p) == i);
        seen.insert(p);
        for (std::size_t j = 0; j < box.size(); ++j) {
            if (natural_leq(box.point_at(j), p)) CHECK(j <= i);
        }
        CHECK(box.point_at(box.reflect_index(i)) == *subtract(box.corner(), p));
    }
    CHECK(seen.size() == 24);
    CHECK(box.sum_index(box.index_of({2, 1, 3}), box.index_of({1, 0, 0})) == Box::npos);
    CHECK(box_norm({2, 1, 3}) == 24);
    CHECK(box_norm_minus_one({2, 1, 3}) == 6);
}

TEST_CASE("validation of gap sets") {
    CHECK(genus(validate(2, kSquareCorner)) == 7);
    CHECK(genus(validate(2, {})) == 0);
    CHECK(genus(validate(2, kStaircase)) == 6);

    try {
        validate(2, {{1, 1}});
        FAIL("closure violation expected");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ClosureViolation);
        CHECK(std::string(e.what()).find("(1,0)") != std::string::npos);
        CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
    }
    auto w = closure_witness(2, std::vector<Point>{{1, 1}});
    REQUIRE(w.has_value());
    CHECK(add(w->first, w->second) == Point{1, 1});

    CHECK(kind_of(2, {{0, 0}}) == ErrorKind::ZeroIsGap);
    CHECK(kind_of(2, {{1}}) == ErrorKind::DimensionMismatch);
    CHECK(kind_of(1, {{1}, {1}}) == ErrorKind::DuplicatePoint);
}

TEST_CASE("maximal gaps and pseudo-Frobenius gaps") {
    const GapSet s = validate(2, kStaircase);
    CHECK(frobenius_allowable(s) == std::vector<Point>{{1, 3}, {2, 2}});
    CHECK(pseudo_frobenius(s) == std::vector<Point>{{1, 3}, {2, 2}});
    CHECK(type(s) == 2);

    const GapSet corner = validate(2, kSquareCorner);
    CHECK(frobenius_allowable(corner) == std::vector<Point>{{0, 3}, {1, 1}, {3, 0}});
    CHECK(pseudo_frobenius(corner).size() == 7);

    CHECK(frobenius_allowable(validate(2, {{1, 0}, {0, 1}})).size() == 2);
    CHECK(pseudo_frobenius(validate(1, {{1}, {2}, {3}})).size() == 3);
    CHECK(pseudo_frobenius(validate(1, {{1}, {3}})) == std::vector<Point>{{3}});
    CHECK(type(validate(1, {})) == 0);
}

TEST_CASE("validation and PF agree with definitional oracles on every subset of a box") {
    for (const Point& corner : {Point{7}, Point{3, 2}, Point{1, 1, 2}}) {
        const Box box(corner);
        const std::size_t n = box.size() - 1;  // skip the origin
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<Point> gaps;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) gaps.push_back(box.point_at(i + 1));
            const std::set<Point> as_set(gaps.begin(), gaps.end());
            const bool expect = closed_by_definition(corner.dim(), as_set);
            bool got = true;
            std::optional<GapSet> s;
            try {
                s = validate(corner.dim(), gaps);
            } catch (const Error& e) {
                got = false;
                CHECK(e.kind() == ErrorKind::ClosureViolation);
            }
            REQUIRE(got == expect);
            if (!s) continue;
            const auto pf = pseudo_frobenius(*s);
            CHECK(std::set<Point>(pf.begin(), pf.end()) == pf_by_definition(as_set));
            const auto fa = frobenius_allowable(*s);
            CHECK(fa == maximal_elements(gaps));
            CHECK(is_antichain(fa));
        }
    }
}
