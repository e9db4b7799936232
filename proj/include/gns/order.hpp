#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gns/gap_set.hpp"
#include "gns/point.hpp"

namespace gns {

/// The relaxed monomial order attached to a nonzero point h.
///
/// phi(x) = min over the support of h of x_i / h_i. Points are ranked by
/// phi first; ties are broken lexicographically with the coordinates read
/// in support order (indices with h_i > 0 ascending, then indices with
/// h_i = 0 ascending). When h is a maximal gap of S, h is the largest gap
/// of S under this order.
class MaximalGapOrder {
public:
    /// Throws ZeroIsGap for h = 0.
    explicit MaximalGapOrder(Point h);

    const Point& h() const noexcept { return h_; }
    std::size_t dim() const noexcept { return h_.dim(); }
    /// Permutation of coordinate indices; the first support_size() entries
    /// are the indices where h is nonzero.
    const std::vector<std::size_t>& support() const noexcept { return support_; }
    std::size_t support_size() const noexcept { return k_; }

    /// Compares phi(x) with phi(y) exactly.
    std::strong_ordering phi_compare(const Point& x, const Point& y) const;

    /// The total order.
    std::strong_ordering compare(const Point& x, const Point& y) const;

    bool less(const Point& x, const Point& y) const { return compare(x, y) < 0; }

    /// phi(x) as an unreduced fraction (x_i, h_i) attaining the minimum.
    std::pair<Coord, Coord> phi(const Point& x) const;

private:
    Point h_;
    std::vector<std::size_t> support_;
    std::size_t k_ = 0;
};

using PointComparator = std::function<std::strong_ordering(const Point&, const Point&)>;

struct AxiomReport {
    bool passed = true;
    std::size_t samples = 0;
    /// "i" for v < w but not v < w+u, "ii" for 0 not below v.
    std::string violated_axiom;
    std::optional<Point> v, w, u;
};

/// Samples triples (v, w, u) uniformly in [0, bound] and checks
///   (i)  v < w  implies  v < w + u,
///   (ii) 0 < v for v != 0.
/// Stops at the first counterexample.
AxiomReport check_relaxed_axioms(const PointComparator& cmp, const Point& bound,
                                 std::size_t sample_count, std::uint64_t seed);

AxiomReport check_relaxed_axioms(const MaximalGapOrder& order, const Point& bound,
                                 std::size_t sample_count, std::uint64_t seed);

/// The maximum of H(S) under the order. Throws EmptyGapSet.
Point frobenius_gap(const GapSet& s, const MaximalGapOrder& order);

}  // namespace gns
