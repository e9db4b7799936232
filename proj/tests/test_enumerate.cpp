#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gns/box.hpp"
#include "gns/classify.hpp"
#include "gns/enumerate.hpp"
#include "gns/error.hpp"

using namespace gns;

namespace {

// Counts subsets E of the box below F (without 0 and F) such that {0} ∪ E plus
// everything outside the box is additively closed.
std::uint64_t oracle_count(const Point& f) {
    std::vector<Point> pts;
    for (const auto& p : Box(f).points())
        if (!p.is_zero() && p != f) pts.push_back(p);
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pts.size()); ++mask) {
        std::set<Point> elems;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (mask >> i & 1) elems.insert(pts[i]);
        bool ok = true;
        for (const auto& a : elems) {
            for (const auto& b : elems) {
                const Point s = add(a, b);
                if (natural_leq(s, f) && !elems.count(s)) ok = false;
            }
        }
        count += ok;
    }
    return count;
}

std::set<std::vector<Point>> listed(const Point& f, std::size_t threads = 1) {
    std::set<std::vector<Point>> out;
    EnumOptions o;
    o.threads = threads;
    for (const auto& s : list_frobenius_gns(f, o)) {
        CHECK(is_frobenius_gns(s) == f);
        out.emplace(s.gaps().begin(), s.gaps().end());
    }
    return out;
}

}  // namespace

TEST_CASE("frozen small counts") {
    CHECK(count_frobenius_gns({1}) == 1);
    CHECK(count_frobenius_gns({3}) == 2);
    CHECK(count_frobenius_gns({5}) == 5);
    CHECK(count_frobenius_gns({7}) == 11);
    CHECK(count_frobenius_gns({1, 1}) == 3);
    CHECK(count_frobenius_gns({2, 1}) == 7);
    CHECK(count_frobenius_gns({2, 2}) == 16);
    CHECK(count_frobenius_gns({3, 1}) == 18);
    CHECK(count_frobenius_gns({1, 1, 1}) == 23);
    CHECK(count_frobenius_gns({0, 0}) == 0);
}

TEST_CASE("search and brute force agree with the test oracle") {
    for (const Point& f : {Point{1}, Point{4}, Point{9}, Point{12}, Point{1, 2}, Point{3, 2},
                          Point{5, 1}, Point{1, 1, 2}, Point{0, 4}, Point{2, 0, 1}, Point{15},
                          Point{3, 3}, Point{1, 1, 3}}) {
        const std::uint64_t want = oracle_count(f);
        CHECK(count_frobenius_gns(f) == want);
        CHECK(brute_force_count(f) == want);
    }
}

TEST_CASE("listing") {
    CHECK(listed({1, 1}) == std::set<std::vector<Point>>{
                                {{0, 1}, {1, 0}, {1, 1}}, {{0, 1}, {1, 1}}, {{1, 0}, {1, 1}}});
    CHECK(listed({3}) == std::set<std::vector<Point>>{{{1}, {3}}, {{1}, {2}, {3}}});
    CHECK(listed({1}) == std::set<std::vector<Point>>{{{1}}});

    // The first gap set emitted is the full box minus the origin.
    const auto all = list_frobenius_gns(Point{1, 1});
    REQUIRE(all.size() == 3);
    CHECK(all.front().gaps().size() == 3);

    for (const Point& f : {Point{6}, Point{2, 2}, Point{1, 1, 1}})
        CHECK(listed(f).size() == count_frobenius_gns(f));
}

TEST_CASE("thread count does not change results") {
    for (const Point& f : {Point{2, 3}, Point{11}, Point{1, 1, 2}}) {
        const std::uint64_t base = count_frobenius_gns(f);
        for (std::size_t threads : {2, 4, 8}) {
            EnumOptions o;
            o.threads = threads;
            o.split_depth = 4;
            CHECK(count_frobenius_gns(f, o) == base);
        }
        EnumOptions o4;
        o4.threads = 4;
        const auto a = list_frobenius_gns(f);
        const auto b = list_frobenius_gns(f, o4);
        CHECK(a == b);
    }
}

TEST_CASE("limits") {
    EnumOptions o;
    o.max_box_norm = 10;
    CHECK_THROWS_AS(count_frobenius_gns({11}, o), Error);
    CHECK_THROWS_AS(count_frobenius_gns({100}), Error);
    CHECK_THROWS_AS(brute_force_count({20}), Error);
}

TEST_CASE("gap sets in a box") {
    std::size_t n = 0;
    list_gap_sets_in_box({3}, [&](const GapSet&) { ++n; });
    std::size_t want = 0;
    for (int mask = 0; mask < 8; ++mask) {
        std::vector<Point> gaps;
        for (int i = 0; i < 3; ++i)
            if (mask >> i & 1) gaps.push_back(Point{Coord(i + 1)});
        want += !closure_witness(1, gaps).has_value();
    }
    CHECK(n == want);
}
