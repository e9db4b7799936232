#include "gns/classify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gns/box.hpp"
#include "gns/error.hpp"
#include "gns/order.hpp"

namespace gns {

namespace {

bool contains(std::span<const Point> sorted, const Point& x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Some F in FA with F - x in S.
bool complemented_by_fa(const GapSet& s, std::span<const Point> fa, const Point& x) {
    return std::any_of(fa.begin(), fa.end(), [&](const Point& f) {
        auto diff = subtract(f, x);
        return diff && s.in_semigroup(*diff);
    });
}

Point require_frobenius(const GapSet& s) {
    auto f = is_frobenius_gns(s);
    if (!f) throw Error(ErrorKind::NotFrobeniusGNS, "the gap set has no unique maximal gap");
    return *f;
}

[[noreturn]] void disagreement(const char* what) {
    throw std::logic_error(std::string("criteria disagree: ") + what);
}

}  // namespace

std::optional<Point> is_frobenius_gns(const GapSet& s) {
    auto fa = frobenius_allowable(s);
    if (fa.size() != 1) return std::nullopt;
    return fa.front();
}

bool quasi_symmetric_by_count(const GapSet& s) {
    return frobenius_allowable(s).size() == pseudo_frobenius(s).size();
}

bool quasi_symmetric_by_gaps(const GapSet& s) {
    const auto fa = frobenius_allowable(s);
    return std::all_of(s.gaps().begin(), s.gaps().end(),
                       [&](const Point& x) { return complemented_by_fa(s, fa, x); });
}

bool is_quasi_symmetric(const GapSet& s) {
    bool by_count = quasi_symmetric_by_count(s);
    if (by_count != quasi_symmetric_by_gaps(s)) disagreement("quasi-symmetry");
    return by_count;
}

std::optional<Point> quasi_irreducible_witness(const GapSet& s) {
    const auto fa = frobenius_allowable(s);
    for (const auto& x : s.gaps()) {
        if (contains(fa, twice(x))) continue;
        if (complemented_by_fa(s, fa, x)) continue;
        return x;
    }
    return std::nullopt;
}

bool quasi_irreducible_by_gaps(const GapSet& s) { return !quasi_irreducible_witness(s); }

bool quasi_irreducible_by_pf(const GapSet& s) {
    const auto fa = frobenius_allowable(s);
    const auto pf = pseudo_frobenius(s);
    return std::all_of(pf.begin(), pf.end(), [&](const Point& p) {
        return contains(fa, p) || contains(fa, twice(p));
    });
}

bool is_quasi_irreducible(const GapSet& s) {
    bool by_gaps = quasi_irreducible_by_gaps(s);
    if (by_gaps != quasi_irreducible_by_pf(s)) disagreement("quasi-irreducibility");
    return by_gaps;
}

bool is_symmetric(const GapSet& s) { return pseudo_frobenius(s).size() == 1; }

bool is_pseudo_symmetric(const GapSet& s) {
    auto f = is_frobenius_gns(s);
    if (!f) return false;
    auto h = half(*f);
    if (!h) return false;
    std::vector<Point> expected{*h, *f};
    std::sort(expected.begin(), expected.end());
    return pseudo_frobenius(s) == expected;
}

bool is_irreducible(const GapSet& s) {
    return frobenius_allowable(s).size() == 1 && is_quasi_irreducible(s);
}

bool is_maximal_avoiding(const GapSet& s, std::span<const Point> d) {
    for (const auto& x : d) {
        if (x.dim() != s.dim()) throw Error(ErrorKind::DimensionMismatch, to_string(x) + " in D");
    }
    if (!is_antichain(d)) throw Error(ErrorKind::DNotAntichain, "D has comparable points");
    for (const auto& x : d) {
        if (!s.is_gap(x)) throw Error(ErrorKind::DNotSubsetOfGaps, to_string(x) + " is not a gap");
    }
    std::vector<Point> sorted_d(d.begin(), d.end());
    std::sort(sorted_d.begin(), sorted_d.end());
    for (const auto& x : pseudo_frobenius(s)) {
        if (!contains(sorted_d, x) && s.in_semigroup(twice(x))) return false;
    }
    return true;
}

TSet t_set(const GapSet& s) {
    TSet t{require_frobenius(s), {}};
    Box box(t.frobenius_gap);
    for (std::size_t i = 1; i < box.size(); ++i) {
        Point x = box.point_at(i);
        if (s.in_semigroup(x)) t.complement.push_back(*subtract(t.frobenius_gap, x));
    }
    std::sort(t.complement.begin(), t.complement.end());
    if (t.complement.size() != box.size() - genus(s) - 1) {
        throw std::logic_error("T(S) complement has the wrong size");
    }
    return t;
}

std::optional<std::pair<Point, Point>> t_set_closure_witness(const TSet& t) {
    // 0 is never in the complement (F - s = 0 forces s = F, a gap), so the
    // complement is checked exactly like a gap set.
    return closure_witness(t.frobenius_gap.dim(), t.complement);
}

bool almost_symmetric_by_count(const GapSet& s) {
    Point f = require_frobenius(s);
    auto g = static_cast<std::int64_t>(genus(s));
    auto norm = static_cast<std::int64_t>(box_norm(f));
    return static_cast<std::int64_t>(type(s)) == 2 * g + 1 - norm;
}

bool almost_symmetric_by_t_set(const GapSet& s) { return !t_set_closure_witness(t_set(s)); }

bool is_almost_symmetric(const GapSet& s) {
    bool by_count = almost_symmetric_by_count(s);
    if (by_count != almost_symmetric_by_t_set(s)) disagreement("almost symmetry");
    return by_count;
}

TypeBounds type_bounds(const GapSet& s) {
    const Point f = require_frobenius(s);
    const MaximalGapOrder order(f);
    const auto pf = pseudo_frobenius(s);
    const auto g = genus(s);
    const auto norm = box_norm(f);

    TypeBounds tb;
    tb.lower_num = g;
    tb.lower_den = norm - g;
    tb.t = pf.size();
    tb.upper = 2 * static_cast<std::int64_t>(g) + 1 - static_cast<std::int64_t>(norm);

    std::set<std::pair<Point, Point>> images;
    for (const auto& x : s.gaps()) {
        Box room(*subtract(f, x));
        std::optional<Point> best;
        for (std::size_t i = 0; i < room.size(); ++i) {
            Point cand = room.point_at(i);
            if (s.is_gap(cand) || s.in_semigroup(add(x, cand))) continue;
            if (!best || order.less(*best, cand)) best = std::move(cand);
        }
        // 0 always qualifies since x itself is a gap.
        Point target = add(x, *best);
        if (!contains(pf, target)) {
            throw std::logic_error("x + shift is not pseudo-Frobenius for x = " + to_string(x));
        }
        if (!images.emplace(*best, target).second) {
            throw std::logic_error("psi is not injective at " + to_string(x));
        }
        tb.psi.push_back({x, std::move(*best), std::move(target)});
    }
    return tb;
}

Classification classify(const GapSet& s) {
    Classification c;
    c.genus = genus(s);
    c.frobenius_allowable = frobenius_allowable(s);
    c.pseudo_frobenius = pseudo_frobenius(s);
    c.tau = c.frobenius_allowable.size();
    c.t = c.pseudo_frobenius.size();
    if (c.tau == 1) {
        c.is_frobenius = true;
        c.frobenius_gap = c.frobenius_allowable.front();
    }
    c.quasi_symmetric = is_quasi_symmetric(s);
    c.quasi_irreducible = is_quasi_irreducible(s);
    c.symmetric = is_symmetric(s);
    c.pseudo_symmetric = is_pseudo_symmetric(s);
    c.irreducible = c.is_frobenius && c.quasi_irreducible;
    if (c.is_frobenius) c.almost_symmetric = is_almost_symmetric(s);
    return c;
}

}  // namespace gns
