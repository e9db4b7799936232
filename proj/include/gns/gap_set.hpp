#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gns/point.hpp"

namespace gns {

/// The finite gap set H(S) of a generalized numerical semigroup S in N^d.
/// Instances only come out of validate(), so every GapSet satisfies
/// 0 notin H and the closure condition; the gaps are kept sorted.
class GapSet {
public:
    std::size_t dim() const noexcept { return dim_; }
    std::span<const Point> gaps() const noexcept { return gaps_; }
    bool empty() const noexcept { return gaps_.empty(); }

    bool is_gap(const Point& x) const;
    /// Membership in S = N^d \ H.
    bool in_semigroup(const Point& x) const { return !is_gap(x); }

    /// Componentwise maximum of all gaps (the zero point when empty).
    Point bounding_corner() const;

    friend bool operator==(const GapSet&, const GapSet&) = default;

private:
    friend GapSet validate(std::size_t dimension, std::vector<Point> gaps);
    GapSet(std::size_t dim, std::vector<Point> gaps) : dim_(dim), gaps_(std::move(gaps)) {}

    std::size_t dim_ = 0;
    std::vector<Point> gaps_;
};

/// Checks that `gaps` is the gap set of a GNS in N^dimension.
/// Throws DimensionMismatch, ZeroIsGap, DuplicatePoint or ClosureViolation;
/// the latter names two semigroup elements whose sum is a gap.
GapSet validate(std::size_t dimension, std::vector<Point> gaps);

/// The witness a, b in S with a + b in H reported by a ClosureViolation,
/// or nullopt when the set is valid. Does not throw for closure problems.
std::optional<std::pair<Point, Point>> closure_witness(std::size_t dimension,
                                                       std::span<const Point> gaps);

std::size_t genus(const GapSet& s);

/// FA(S): gaps maximal under the natural partial order.
std::vector<Point> frobenius_allowable(const GapSet& s);

/// PF(S) = { P in H | h - P in H for every gap h > P }.
std::vector<Point> pseudo_frobenius(const GapSet& s);

/// t(S) = |PF(S)|.
std::size_t type(const GapSet& s);

}  // namespace gns
