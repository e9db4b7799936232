#include "gns/order.hpp"

#include <random>

#include "gns/error.hpp"

namespace gns {

namespace {

using Wide = unsigned __int128;

// a/b versus c/d for positive b, d. Products of two 64-bit values always
// fit in 128 bits.
std::strong_ordering compare_fractions(Coord a, Coord b, Coord c, Coord d) {
    Wide lhs = static_cast<Wide>(a) * d;
    Wide rhs = static_cast<Wide>(c) * b;
    return lhs <=> rhs;
}

}  // namespace

MaximalGapOrder::MaximalGapOrder(Point h) : h_(std::move(h)) {
    if (h_.dim() == 0 || h_.is_zero()) {
        throw Error(ErrorKind::ZeroIsGap, "the defining point of the order must be nonzero");
    }
    for (std::size_t i = 0; i < h_.dim(); ++i) {
        if (h_[i] > 0) support_.push_back(i);
    }
    k_ = support_.size();
    for (std::size_t i = 0; i < h_.dim(); ++i) {
        if (h_[i] == 0) support_.push_back(i);
    }
}

std::pair<Coord, Coord> MaximalGapOrder::phi(const Point& x) const {
    require_same_dim(x, h_);
    std::size_t best = support_[0];
    for (std::size_t j = 1; j < k_; ++j) {
        std::size_t i = support_[j];
        if (compare_fractions(x[i], h_[i], x[best], h_[best]) < 0) best = i;
    }
    return {x[best], h_[best]};
}

std::strong_ordering MaximalGapOrder::phi_compare(const Point& x, const Point& y) const {
    auto [xn, xd] = phi(x);
    auto [yn, yd] = phi(y);
    return compare_fractions(xn, xd, yn, yd);
}

std::strong_ordering MaximalGapOrder::compare(const Point& x, const Point& y) const {
    if (auto c = phi_compare(x, y); c != 0) return c;
    for (std::size_t i : support_) {
        if (auto c = x[i] <=> y[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

AxiomReport check_relaxed_axioms(const PointComparator& cmp, const Point& bound,
                                 std::size_t sample_count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t d = bound.dim();
    auto sample = [&] {
        std::vector<Coord> c(d);
        for (std::size_t i = 0; i < d; ++i) {
            c[i] = std::uniform_int_distribution<Coord>(0, bound[i])(rng);
        }
        return Point(std::move(c));
    };
    const Point zero = Point::zero(d);

    AxiomReport report;
    for (std::size_t n = 0; n < sample_count; ++n) {
        Point v = sample();
        Point w = sample();
        Point u = sample();
        ++report.samples;
        if (!v.is_zero() && cmp(zero, v) >= 0) {
            report.passed = false;
            report.violated_axiom = "ii";
            report.v = std::move(v);
            return report;
        }
        if (cmp(v, w) < 0 && cmp(v, add(w, u)) >= 0) {
            report.passed = false;
            report.violated_axiom = "i";
            report.v = std::move(v);
            report.w = std::move(w);
            report.u = std::move(u);
            return report;
        }
    }
    return report;
}

AxiomReport check_relaxed_axioms(const MaximalGapOrder& order, const Point& bound,
                                 std::size_t sample_count, std::uint64_t seed) {
    require_same_dim(order.h(), bound);
    return check_relaxed_axioms(
        [&order](const Point& x, const Point& y) { return order.compare(x, y); }, bound,
        sample_count, seed);
}

Point frobenius_gap(const GapSet& s, const MaximalGapOrder& order) {
    if (s.empty()) throw Error(ErrorKind::EmptyGapSet, "a GNS without gaps has no Frobenius gap");
    if (s.dim() != order.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "order and gap set dimensions differ");
    }
    const auto gaps = s.gaps();
    const Point* best = &gaps[0];
    for (const auto& g : gaps) {
        if (order.compare(*best, g) < 0) best = &g;
    }
    return *best;
}

}  // namespace gns
