#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gns/point.hpp"

namespace gns {

/// ||F|| = prod (F_i + 1), the number of points x with 0 <= x <= F.
/// Throws LimitExceeded if the product does not fit in 64 bits.
std::uint64_t box_norm(const Point& f);

/// ||F - 1|| = prod F_i (zero when any coordinate is zero).
std::uint64_t box_norm_minus_one(const Point& f);

/// Dense view of the box [0, F] with mixed-radix index
///   idx(x) = sum_i x_i * prod_{j>i} (F_j + 1).
/// The index is monotone for the natural partial order: x <= y implies
/// idx(x) <= idx(y), so increasing index is a linear extension of <=.
class Box {
public:
    explicit Box(Point corner);

    const Point& corner() const noexcept { return corner_; }
    std::size_t dim() const noexcept { return corner_.dim(); }
    std::size_t size() const noexcept { return size_; }

    bool contains(const Point& x) const;
    std::size_t index_of(const Point& x) const;
    Point point_at(std::size_t index) const;

    /// All points in index order.
    std::vector<Point> points() const;

    /// Index of x + y when it lies in the box, npos otherwise.
    std::size_t sum_index(std::size_t a, std::size_t b) const;
    /// Index of corner - x (always inside the box).
    std::size_t reflect_index(std::size_t a) const { return size_ - 1 - a; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    Point corner_;
    std::vector<std::uint64_t> stride_;
    std::size_t size_ = 0;
};

}  // namespace gns
