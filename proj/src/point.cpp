#include "gns/point.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <ostream>
#include <sstream>

#include "gns/error.hpp"

namespace gns {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NegativeCoordinate: return "NegativeCoordinate";
        case ErrorKind::ZeroIsGap: return "ZeroIsGap";
        case ErrorKind::DuplicatePoint: return "DuplicatePoint";
        case ErrorKind::ClosureViolation: return "ClosureViolation";
        case ErrorKind::EmptyGapSet: return "EmptyGapSet";
        case ErrorKind::NotFrobeniusGNS: return "NotFrobeniusGNS";
        case ErrorKind::DNotAntichain: return "DNotAntichain";
        case ErrorKind::DNotSubsetOfGaps: return "DNotSubsetOfGaps";
        case ErrorKind::LimitExceeded: return "LimitExceeded";
        case ErrorKind::CountOverflow: return "CountOverflow";
        case ErrorKind::YNotGood: return "YNotGood";
        case ErrorKind::YNotInB: return "YNotInB";
        case ErrorKind::ZNotInC: return "ZNotInC";
        case ErrorKind::WrongDimension: return "WrongDimension";
        case ErrorKind::XNotInD: return "XNotInD";
        case ErrorKind::PNotBelowF: return "PNotBelowF";
        case ErrorKind::NoRootInInterval: return "NoRootInInterval";
        case ErrorKind::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

bool Point::is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c == 0; });
}

void require_same_dim(const Point& x, const Point& y) {
    if (x.dim() != y.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    to_string(x) + " has dimension " + std::to_string(x.dim()) + ", " +
                        to_string(y) + " has dimension " + std::to_string(y.dim()));
    }
}

bool natural_leq(const Point& x, const Point& y) {
    require_same_dim(x, y);
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (x[i] > y[i]) return false;
    }
    return true;
}

Point add(const Point& x, const Point& y) {
    require_same_dim(x, y);
    std::vector<Coord> out(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (x[i] > std::numeric_limits<Coord>::max() - y[i]) {
            throw Error(ErrorKind::LimitExceeded, "coordinate overflow in " + to_string(x) + " + " +
                                                      to_string(y));
        }
        out[i] = x[i] + y[i];
    }
    return Point(std::move(out));
}

std::optional<Point> subtract(const Point& y, const Point& x) {
    require_same_dim(x, y);
    std::vector<Coord> out(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (x[i] > y[i]) return std::nullopt;
        out[i] = y[i] - x[i];
    }
    return Point(std::move(out));
}

Point twice(const Point& x) { return add(x, x); }

std::optional<Point> half(const Point& x) {
    std::vector<Coord> out(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (x[i] % 2 != 0) return std::nullopt;
        out[i] = x[i] / 2;
    }
    return Point(std::move(out));
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Point parse_point(std::string_view text) {
    text = trim(text);
    if (!text.empty() && (text.front() == '(' || text.front() == '[')) text.remove_prefix(1);
    if (!text.empty() && (text.back() == ')' || text.back() == ']')) text.remove_suffix(1);
    std::vector<Coord> coords;
    while (true) {
        auto comma = text.find(',');
        auto field = trim(text.substr(0, comma));
        if (field.empty()) throw Error(ErrorKind::MalformedInput, "empty coordinate in point");
        if (field.front() == '-') {
            throw Error(ErrorKind::NegativeCoordinate, "coordinate " + std::string(field));
        }
        Coord value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc() || ptr != field.data() + field.size()) {
            throw Error(ErrorKind::MalformedInput, "bad coordinate '" + std::string(field) + "'");
        }
        coords.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Point(std::move(coords));
}

std::vector<Point> parse_point_list(std::string_view text) {
    std::vector<Point> out;
    text = trim(text);
    if (text.empty()) return out;
    while (true) {
        auto semi = text.find(';');
        out.push_back(parse_point(text.substr(0, semi)));
        if (semi == std::string_view::npos) break;
        text.remove_prefix(semi + 1);
    }
    return out;
}

std::string to_string(const Point& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
    os << '(';
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i) os << ',';
        os << p[i];
    }
    return os << ')';
}

std::vector<Point> maximal_elements(std::span<const Point> points) {
    std::vector<Point> out;
    for (const auto& x : points) {
        bool dominated = std::any_of(points.begin(), points.end(), [&](const Point& y) {
            return y != x && natural_leq(x, y);
        });
        if (!dominated) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_antichain(std::span<const Point> points) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i != j && natural_leq(points[i], points[j])) return false;
        }
    }
    return true;
}

}  // namespace gns
