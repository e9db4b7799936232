#include "gns/box.hpp"

#include <limits>

#include "gns/error.hpp"

namespace gns {

std::uint64_t box_norm(const Point& f) {
    std::uint64_t n = 1;
    for (Coord c : f.coords()) {
        if (c == std::numeric_limits<Coord>::max() ||
            n > std::numeric_limits<std::uint64_t>::max() / (c + 1)) {
            throw Error(ErrorKind::LimitExceeded, "||F|| overflows 64 bits for " + to_string(f));
        }
        n *= c + 1;
    }
    return n;
}

std::uint64_t box_norm_minus_one(const Point& f) {
    std::uint64_t n = 1;
    for (Coord c : f.coords()) {
        if (c == 0) return 0;
        if (n > std::numeric_limits<std::uint64_t>::max() / c) {
            throw Error(ErrorKind::LimitExceeded, "||F-1|| overflows 64 bits for " + to_string(f));
        }
        n *= c;
    }
    return n;
}

Box::Box(Point corner) : corner_(std::move(corner)) {
    size_ = box_norm(corner_);
    stride_.assign(corner_.dim(), 1);
    for (std::size_t i = corner_.dim(); i-- > 1;) {
        stride_[i - 1] = stride_[i] * (corner_[i] + 1);
    }
}

bool Box::contains(const Point& x) const { return natural_leq(x, corner_); }

std::size_t Box::index_of(const Point& x) const {
    if (!contains(x)) {
        throw Error(ErrorKind::DimensionMismatch, to_string(x) + " is outside box " + to_string(corner_));
    }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < x.dim(); ++i) idx += x[i] * stride_[i];
    return idx;
}

Point Box::point_at(std::size_t index) const {
    std::vector<Coord> c(corner_.dim());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = index / stride_[i];
        index %= stride_[i];
    }
    return Point(std::move(c));
}

std::vector<Point> Box::points() const {
    std::vector<Point> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) out.push_back(point_at(i));
    return out;
}

std::size_t Box::sum_index(std::size_t a, std::size_t b) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < corner_.dim(); ++i) {
        Coord s = a / stride_[i] + b / stride_[i];
        if (s > corner_[i]) return npos;
        idx += s * stride_[i];
        a %= stride_[i];
        b %= stride_[i];
    }
    return idx;
}

}  // namespace gns
