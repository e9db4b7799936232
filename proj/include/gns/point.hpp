#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gns {

using Coord = std::uint64_t;

/// A point of N^d. Coordinates are nonnegative by construction; the
/// dimension is the number of coordinates and is at least 1 for any point
/// that takes part in a computation.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<Coord> coords) : coords_(std::move(coords)) {}
    Point(std::initializer_list<Coord> coords) : coords_(coords) {}

    static Point zero(std::size_t dim) { return Point(std::vector<Coord>(dim, 0)); }

    std::size_t dim() const noexcept { return coords_.size(); }
    Coord operator[](std::size_t i) const { return coords_[i]; }
    std::span<const Coord> coords() const noexcept { return coords_; }

    bool is_zero() const noexcept;

    friend bool operator==(const Point&, const Point&) = default;
    /// Lexicographic; only used for canonical ordering of point sets.
    friend auto operator<=>(const Point&, const Point&) = default;

private:
    std::vector<Coord> coords_;
};

/// Throws DimensionMismatch unless both points have the same dimension.
void require_same_dim(const Point& x, const Point& y);

/// Componentwise x <= y.
bool natural_leq(const Point& x, const Point& y);

/// Checked sum; throws on coordinate overflow.
Point add(const Point& x, const Point& y);

/// y - x when x <= y, nullopt otherwise.
std::optional<Point> subtract(const Point& y, const Point& x);

/// 2x with overflow check.
Point twice(const Point& x);

/// x / 2 when every coordinate is even.
std::optional<Point> half(const Point& x);

/// Parses "a,b,c" (whitespace tolerated). Throws MalformedInput.
Point parse_point(std::string_view text);

/// Parses "a,b;c,d;..." into a point list; empty text gives an empty list.
std::vector<Point> parse_point_list(std::string_view text);

std::string to_string(const Point& p);
std::ostream& operator<<(std::ostream& os, const Point& p);

/// Maximal elements of a set under natural_leq, in canonical order.
std::vector<Point> maximal_elements(std::span<const Point> points);

/// True iff no two distinct members are comparable under natural_leq.
bool is_antichain(std::span<const Point> points);

}  // namespace gns
