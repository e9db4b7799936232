#include "gns/gap_set.hpp"

#include <algorithm>

#include "gns/box.hpp"
#include "gns/error.hpp"

namespace gns {

namespace {

bool sorted_contains(std::span<const Point> sorted, const Point& x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Walks the decompositions h = a + b with a, b nonzero and a <= b in box
// index order; returns the first pair with both parts outside `sorted`.
std::optional<std::pair<Point, Point>> decomposition_witness(std::span<const Point> sorted,
                                                             const Point& h) {
    Box box(h);
    const std::size_t n = box.size();
    for (std::size_t ia = 1; ia < n - 1 && ia <= box.reflect_index(ia); ++ia) {
        Point a = box.point_at(ia);
        Point b = box.point_at(box.reflect_index(ia));
        if (!sorted_contains(sorted, a) && !sorted_contains(sorted, b)) {
            if (a < b) std::swap(a, b);
            return std::make_pair(std::move(a), std::move(b));
        }
    }
    return std::nullopt;
}

void check_shape(std::size_t dimension, std::span<const Point> gaps) {
    if (dimension == 0) throw Error(ErrorKind::DimensionMismatch, "dimension must be at least 1");
    for (const auto& g : gaps) {
        if (g.dim() != dimension) {
            throw Error(ErrorKind::DimensionMismatch,
                        to_string(g) + " does not have dimension " + std::to_string(dimension));
        }
        if (g.is_zero()) throw Error(ErrorKind::ZeroIsGap, "0 cannot be a gap");
    }
}

}  // namespace

bool GapSet::is_gap(const Point& x) const {
    if (x.dim() != dim_) {
        throw Error(ErrorKind::DimensionMismatch, to_string(x) + " queried in dimension " +
                                                      std::to_string(dim_));
    }
    return sorted_contains(gaps_, x);
}

Point GapSet::bounding_corner() const {
    std::vector<Coord> c(dim_, 0);
    for (const auto& g : gaps_) {
        for (std::size_t i = 0; i < dim_; ++i) c[i] = std::max(c[i], g[i]);
    }
    return Point(std::move(c));
}

std::optional<std::pair<Point, Point>> closure_witness(std::size_t dimension,
                                                       std::span<const Point> gaps) {
    check_shape(dimension, gaps);
    std::vector<Point> sorted(gaps.begin(), gaps.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& h : sorted) {
        if (auto w = decomposition_witness(sorted, h)) return w;
    }
    return std::nullopt;
}

GapSet validate(std::size_t dimension, std::vector<Point> gaps) {
    check_shape(dimension, gaps);
    std::sort(gaps.begin(), gaps.end());
    if (auto dup = std::adjacent_find(gaps.begin(), gaps.end()); dup != gaps.end()) {
        throw Error(ErrorKind::DuplicatePoint, to_string(*dup) + " listed twice");
    }
    for (const auto& h : gaps) {
        if (auto w = decomposition_witness(gaps, h)) {
            throw Error(ErrorKind::ClosureViolation, to_string(w->first) + " + " + to_string(w->second) +
                                                         " = " + to_string(h) + " is a gap");
        }
    }
    return GapSet(dimension, std::move(gaps));
}

std::size_t genus(const GapSet& s) { return s.gaps().size(); }

std::vector<Point> frobenius_allowable(const GapSet& s) { return maximal_elements(s.gaps()); }

std::vector<Point> pseudo_frobenius(const GapSet& s) {
    std::vector<Point> out;
    const auto gaps = s.gaps();
    for (const auto& p : gaps) {
        bool ok = std::all_of(gaps.begin(), gaps.end(), [&](const Point& h) {
            if (h == p) return true;
            auto diff = subtract(h, p);
            return !diff || s.is_gap(*diff);
        });
        if (ok) out.push_back(p);
    }
    return out;
}

std::size_t type(const GapSet& s) { return pseudo_frobenius(s).size(); }

}  // namespace gns
