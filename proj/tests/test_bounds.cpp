#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <functional>
#include <set>

#include "gns/bounds.hpp"
#include "gns/box.hpp"
#include "gns/classify.hpp"
#include "gns/enumerate.hpp"
#include "gns/error.hpp"

using namespace gns;

namespace {

struct RawFamily {
    std::set<Point> b, c;
};

// B and C straight from the box definitions, without any correction.
RawFamily raw_family(const Point& f) {
    const std::size_t d = f.dim();
    const std::size_t d1 = (d + 1 + 2) / 3;
    RawFamily out;
    for (const auto& x : Box(f).points()) {
        std::size_t high = 0;
        bool on_mid = false;
        for (std::size_t i = 0; i < d; ++i) {
            if (2 * x[i] > f[i]) ++high;
            else if (2 * x[i] == f[i]) on_mid = true;
        }
        if (on_mid) continue;
        if (high >= d1 && high + d1 <= d) out.b.insert(x);
        if (high + d1 >= d + 1 && high + 1 <= 2 * d1) out.c.insert(x);
    }
    return out;
}

Point reflect(const Point& f, const Point& x) { return *subtract(f, x); }

std::uint64_t count_independent(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::uint64_t count = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        bool ok = true;
        for (auto [a, b] : edges)
            if ((m >> a & 1) && (m >> b & 1)) ok = false;
        count += ok;
    }
    return count;
}

// Edge-free subsets of the box under x ~ F-x and x ~ P-x, where points with
// 2x in {P, F} are excluded outright.
std::uint64_t pairing_oracle(const Point& p, const Point& f) {
    const Box box(f);
    std::vector<std::size_t> keep(box.size(), Box::npos);
    std::size_t n = 0;
    for (std::size_t i = 0; i < box.size(); ++i) {
        const Point x2 = twice(box.point_at(i));
        if (x2 != f && x2 != p) keep[i] = n++;
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < box.size(); ++i) {
        if (keep[i] == Box::npos) continue;
        const Point x = box.point_at(i);
        for (const Point& target : {f, p}) {
            auto y = subtract(target, x);
            if (!y) continue;
            const std::size_t j = box.index_of(*y);
            if (keep[j] != Box::npos && i < j) edges.emplace_back(keep[i], keep[j]);
        }
    }
    return count_independent(n, edges);
}

}  // namespace

TEST_CASE("box families match the definitions") {
    for (const Point& f : {Point{1, 1, 1}, Point{3, 3, 3}, Point{2, 3, 4}, Point{1, 1, 1, 1},
                          Point{3, 1, 2, 2}, Point{1, 1, 1, 1, 1}, Point{5, 5}}) {
        const BoxFamily fam(f);
        const RawFamily raw = raw_family(f);
        CHECK(std::set<Point>(fam.b().begin(), fam.b().end()) == raw.b);
        std::set<Point> c = raw.c;
        CHECK(fam.c_dropped_frobenius() == (c.erase(f) == 1));
        CHECK(std::set<Point>(fam.c().begin(), fam.c().end()) == c);

        Coord prod = 1;
        for (std::size_t i = 0; i < f.dim(); ++i) prod *= overline(f[i]);
        CHECK(fam.half_box_size() == prod);

        for (const auto& x : fam.b()) CHECK(fam.in_b(reflect(f, x)));
        for (const auto& x : fam.c()) {
            CHECK_FALSE(fam.in_b(reflect(f, x)));
            CHECK_FALSE(fam.in_c(reflect(f, x)));
        }
        CHECK(fam.b().size() % 2 == 0);
    }
    CHECK(BoxFamily({1, 1, 1}).c_dropped_frobenius());
    CHECK(BoxFamily({1, 1, 1}).c().size() == 3);
    CHECK_FALSE(BoxFamily({1, 1, 1, 1}).c_dropped_frobenius());
}

TEST_CASE("good subsets of B number 3^(|B|/2)") {
    for (const Point& f : {Point{1, 1, 1, 1}, Point{3, 1, 1, 1}, Point{2, 2, 2, 2}}) {
        const BoxFamily fam(f);
        const auto& b = fam.b();
        REQUIRE(b.size() <= 20);
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                if (add(b[i], b[j]) == f) edges.emplace_back(i, j);
        std::uint64_t want = 1;
        for (std::size_t i = 0; i < b.size() / 2; ++i) want *= 3;
        CHECK(count_independent(b.size(), edges) == want);
    }
}

TEST_CASE("family members are distinct Frobenius GNS") {
    // Exhaustive over every (Y, Z) for F = (1,1,1,1): |B| = 6, |C| = 4.
    const Point f{1, 1, 1, 1};
    const BoxFamily fam(f);
    REQUIRE(fam.b().size() + fam.c().size() <= 12);
    std::set<std::vector<Point>> seen;
    const auto& b = fam.b();
    const auto& c = fam.c();
    std::function<void(std::size_t, std::vector<Point>&)> over_y = [&](std::size_t i, std::vector<Point>& y) {
        if (i == b.size()) {
            for (std::uint64_t zm = 0; zm < (std::uint64_t{1} << c.size()); ++zm) {
                std::vector<Point> z;
                for (std::size_t k = 0; k < c.size(); ++k)
                    if (zm >> k & 1) z.push_back(c[k]);
                const GapSet s = construct_family(fam, y, z);
                CHECK(is_frobenius_gns(s) == f);
                seen.emplace(s.gaps().begin(), s.gaps().end());
            }
            return;
        }
        over_y(i + 1, y);
        const Point partner = reflect(f, b[i]);
        if (std::find(y.begin(), y.end(), partner) == y.end()) {
            y.push_back(b[i]);
            over_y(i + 1, y);
            y.pop_back();
        }
    };
    std::vector<Point> y;
    over_y(0, y);
    CHECK(seen.size() == 27 * 16);
    CHECK(BigInt(seen.size()) == lower_bound_value(f));
    CHECK(lower_bound_value(f) <= count_frobenius_gns(f));
}

TEST_CASE("construction errors") {
    const BoxFamily fam({1, 1, 1});
    const Point f{1, 1, 1};
    CHECK(construct_family(fam, {}, {}).gaps().size() == 7);
    CHECK(is_frobenius_gns(construct_family(fam, {}, std::vector<Point>{{1, 1, 0}})) == f);
    CHECK_THROWS_AS(construct_family(fam, {}, std::vector<Point>{{1, 1, 1}}), Error);
    CHECK_THROWS_AS(construct_family(fam, {}, std::vector<Point>{{1, 0, 0}}), Error);
    CHECK_THROWS_AS(construct_family(fam, std::vector<Point>{{1, 1, 0}}, {}), Error);

    const BoxFamily fam4({1, 1, 1, 1});
    const Point y{1, 1, 0, 0};
    try {
        construct_family(fam4, std::vector<Point>{y, reflect({1, 1, 1, 1}, y)}, {});
        FAIL("expected YNotGood");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::YNotGood);
    }

    // The corrected C of (1,1,1) gives 8 valid choices.
    std::set<std::vector<Point>> seen;
    for (std::uint64_t m = 0; m < 8; ++m) {
        std::vector<Point> z;
        for (std::size_t k = 0; k < 3; ++k)
            if (m >> k & 1) z.push_back(fam.c()[k]);
        const GapSet s = construct_family(fam, {}, z);
        seen.emplace(s.gaps().begin(), s.gaps().end());
    }
    CHECK(seen.size() == 8);
    CHECK(lower_bound_value(f) == 8);
}

TEST_CASE("d = 5 family") {
    const Point f{1, 1, 1, 1, 1};
    const auto region = d5_region(f);
    CHECK(region.size() == 15);  // the 16 points with at least three ones, minus F
    CHECK(is_frobenius_gns(construct_family_d5(f, {})) == f);
    CHECK(is_frobenius_gns(construct_family_d5(f, std::vector<Point>{{1, 1, 1, 0, 0}})) == f);
    CHECK_THROWS_AS(construct_family_d5(f, std::vector<Point>{{1, 1, 0, 0, 0}}), Error);
    CHECK_THROWS_AS(d5_region({1, 1, 1}), Error);

    std::mt19937_64 rng(7);
    std::set<std::vector<Point>> seen;
    std::set<std::uint64_t> masks;
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t m = rng() & ((std::uint64_t{1} << region.size()) - 1);
        std::vector<Point> x;
        for (std::size_t k = 0; k < region.size(); ++k)
            if (m >> k & 1) x.push_back(region[k]);
        const GapSet s = construct_family_d5(f, x);
        CHECK(is_frobenius_gns(s) == f);
        masks.insert(m);
        seen.emplace(s.gaps().begin(), s.gaps().end());
    }
    CHECK(seen.size() == masks.size());
}

TEST_CASE("Fibonacci path and cycle counts") {
    auto path_edges = [](std::size_t n) {
        std::vector<std::pair<std::size_t, std::size_t>> e;
        for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        return e;
    };
    auto cycle_edges = [&](std::size_t m) {
        auto e = path_edges(m);
        e.emplace_back(m - 1, 0);
        return e;
    };
    CHECK(path_good_subsets(1) == 2);
    CHECK(path_good_subsets(3) == 5);
    CHECK(cycle_good_subsets(3) == 4);
    CHECK(cycle_good_subsets(4) == 7);
    for (std::size_t n = 1; n <= 12; ++n) CHECK(path_good_subsets(n) == count_independent(n, path_edges(n)));
    for (std::size_t m = 3; m <= 12; ++m) CHECK(cycle_good_subsets(m) == count_independent(m, cycle_edges(m)));
    CHECK(fibonacci(90) == BigInt("2880067194370816120"));
}

TEST_CASE("pairing graph counts") {
    const PFGraph g = build_pf_graph({1}, {3});
    CHECK(count_good_subsets(g) == pairing_oracle({1}, {3}));
    for (const auto& [p, f] : std::vector<std::pair<Point, Point>>{
             {{1, 1}, {3, 3}}, {{0, 2}, {2, 4}}, {{4}, {10}}, {{2, 0}, {2, 3}}, {{3, 1}, {3, 2}}}) {
        const PFGraph h = build_pf_graph(p, f);
        const BigInt count = count_good_subsets(h);
        CHECK(count == pairing_oracle(p, f));
        CHECK(static_cast<long double>(count) <= l_bound(p, f));
        std::size_t vertices = h.loop_vertices.size();
        for (const auto& path : h.paths) vertices += path.size();
        for (const auto& cyc : h.cycles) vertices += cyc.size();
        CHECK(vertices == box_norm(f));

        // Every Frobenius GNS with gap F that has P as a gap is edge-free on the box.
        std::uint64_t with_p_gap = 0;
        for (const auto& s : list_frobenius_gns(f))
            if (s.is_gap(p)) ++with_p_gap;
        CHECK(BigInt(with_p_gap) <= count);
    }
    CHECK_THROWS_AS(build_pf_graph({3}, {3}), Error);
    CHECK_THROWS_AS(build_pf_graph({4}, {3}), Error);
}

TEST_CASE("dimension constants") {
    for (std::size_t d = 1; d <= 15; ++d) {
        CHECK(std::fabs(static_cast<double>(constant_a(d)) - kPublishedA[d - 1]) <= 2e-4);
        const long double eps = solve_epsilon(d);
        CHECK(std::fabs(static_cast<double>(epsilon_equation_residual(d, eps))) < 1e-10);
        if (d >= 2) CHECK(std::fabs(static_cast<double>(constant_b(d)) - kPublishedB[d - 1]) <= 1e-2);
        CHECK(constant_a(d) <= constant_b(d));
        CHECK(constant_b(d) < std::sqrt(3.0L));
    }
    CHECK(std::fabs(static_cast<double>(constant_a(2)) - std::pow(3.0, 0.25)) < 1e-12);
    CHECK(std::fabs(static_cast<double>(constant_a(5)) - std::sqrt(2.0)) < 1e-15);
    CHECK(std::fabs(static_cast<double>(constant_b(1)) - 1.61602) < 1e-4);
    CHECK(std::fabs(static_cast<double>(constant_b(2)) - 1.65799) < 1e-4);

    // Convergence toward sqrt(3).
    for (std::size_t d = 20; d <= 200; d += 10) CHECK(std::sqrt(3.0L) - constant_b(d) < 0.01L);
    for (std::size_t d = 54; d <= 200; ++d) CHECK(std::sqrt(3.0L) - constant_a(d) < 0.01L);
    CHECK(central_binomial_fraction(400) > 0.999999L);
}

TEST_CASE("sandwich report") {
    const SandwichReport r = sandwich_report({2, 2});
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == 16);
    CHECK(r.family_lower >= 1);
    CHECK(BigInt(*r.exact) * BigInt(*r.exact) <= BigInt(19683));
    for (const auto& c : r.checks)
        if (c.proven) CHECK_MESSAGE(c.holds, c.name);

    const SandwichReport r7 = sandwich_report({7});
    REQUIRE(r7.exact.has_value());
    CHECK(*r7.exact >= 8);
    CHECK(*r7.exact <= 32);
    CHECK_THROWS_AS(sandwich_report({0, 0}), Error);
}
