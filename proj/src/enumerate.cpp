#include "gns/enumerate.hpp"

#include <atomic>
#include <bit>
#include <limits>
#include <thread>

#include "gns/box.hpp"
#include "gns/error.hpp"

namespace gns {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
        throw Error(ErrorKind::CountOverflow, "count exceeds 64 bits");
    }
    return a + b;
}

// Membership search over the box [0, corner]. Box points are decided in
// increasing index, which is a linear extension of <=, so every
// decomposition x = a + b has a and b decided before x.
class DenseSearch {
public:
    DenseSearch(const Point& corner, Mask forced_out) : box_(corner), forced_out_(forced_out) {
        const std::size_t n = box_.size();
        halves_.resize(n);
        conflicts_.assign(n, 0);
        for (std::size_t x = 1; x < n; ++x) {
            for (std::size_t a = 1; a < x; ++a) {
                std::size_t s = box_.sum_index(a, x - a);
                // x - a in index space is the point difference iff a <= x.
                if (s == x && a <= x - a) halves_[x].push_back(a);
            }
            for (std::size_t w = 0; w < n; ++w) {
                std::size_t s = box_.sum_index(x, w);
                if (s != Box::npos && (forced_out_ & bit(s))) conflicts_[x] |= bit(w);
            }
        }
    }

    std::size_t size() const { return box_.size(); }
    const Box& box() const { return box_; }

    bool can_exclude(Mask in, std::size_t x) const {
        for (std::size_t a : halves_[x]) {
            if ((in & bit(a)) && (in & bit(x - a))) return false;
        }
        return true;
    }

    bool can_include(Mask in, std::size_t x) const {
        if (forced_out_ & bit(x)) return false;
        return (conflicts_[x] & (in | bit(x))) == 0;
    }

    std::uint64_t count(Mask in, std::size_t x) const {
        if (x == size()) return 1;
        std::uint64_t total = 0;
        if (can_exclude(in, x)) total = count(in, x + 1);
        if (can_include(in, x)) total = checked_add(total, count(in | bit(x), x + 1));
        return total;
    }

    template <class Sink>
    void walk(Mask in, std::size_t x, Sink& sink) const {
        if (x == size()) {
            sink(in);
            return;
        }
        if (can_exclude(in, x)) walk(in, x + 1, sink);
        if (can_include(in, x)) walk(in | bit(x), x + 1, sink);
    }

    /// Applies the decisions in `prefix` (bit depth-1-j is index 1+j, 1 = in)
    /// and reports whether they are all admissible.
    bool apply_prefix(std::uint64_t prefix, std::size_t depth, Mask& in) const {
        in = bit(0);
        for (std::size_t j = 0; j < depth; ++j) {
            std::size_t x = 1 + j;
            bool include = (prefix >> (depth - 1 - j)) & 1;
            if (include ? !can_include(in, x) : !can_exclude(in, x)) return false;
            if (include) in |= bit(x);
        }
        return true;
    }

    GapSet to_gap_set(Mask in) const {
        std::vector<Point> gaps;
        for (std::size_t i = 1; i < size(); ++i) {
            if (!(in & bit(i))) gaps.push_back(box_.point_at(i));
        }
        return validate(box_.dim(), std::move(gaps));
    }

private:
    Box box_;
    Mask forced_out_;
    std::vector<std::vector<std::size_t>> halves_;
    std::vector<Mask> conflicts_;
};

std::uint64_t checked_norm(const Point& f, std::uint64_t limit) {
    if (f.dim() == 0) throw Error(ErrorKind::DimensionMismatch, "F needs at least one coordinate");
    std::uint64_t norm = box_norm(f);
    if (norm > limit || norm > kMaxDenseBox) {
        throw Error(ErrorKind::LimitExceeded, "||F|| = " + std::to_string(norm) + " exceeds limit " +
                                                  std::to_string(std::min(limit, kMaxDenseBox)));
    }
    return norm;
}

std::uint64_t parallel_count(const DenseSearch& search, const EnumOptions& options) {
    const std::size_t n = search.size();
    const std::size_t depth = std::min<std::size_t>(options.split_depth, n - 1);
    const std::uint64_t subtrees = std::uint64_t{1} << depth;
    std::vector<std::uint64_t> partial(subtrees, 0);
    std::vector<std::exception_ptr> errors(subtrees);
    std::atomic<std::uint64_t> next{0};

    auto worker = [&] {
        for (std::uint64_t c; (c = next.fetch_add(1)) < subtrees;) {
            try {
                Mask in = 0;
                if (search.apply_prefix(c, depth, in)) partial[c] = search.count(in, 1 + depth);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::max<std::size_t>(1, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    std::uint64_t total = 0;
    for (std::uint64_t c = 0; c < subtrees; ++c) {
        if (errors[c]) std::rethrow_exception(errors[c]);
        total = checked_add(total, partial[c]);
    }
    return total;
}

}  // namespace

std::uint64_t count_frobenius_gns(const Point& f, const EnumOptions& options) {
    if (f.dim() > 0 && f.is_zero()) return 0;
    const std::uint64_t norm = checked_norm(f, options.max_box_norm);
    DenseSearch search(f, bit(norm - 1));
    return parallel_count(search, options);
}

void list_frobenius_gns(const Point& f, const std::function<void(const GapSet&)>& sink,
                        const EnumOptions& options) {
    if (f.dim() > 0 && f.is_zero()) return;
    const std::uint64_t norm = checked_norm(f, options.max_box_norm);
    DenseSearch search(f, bit(norm - 1));
    auto emit = [&](Mask in) { sink(search.to_gap_set(in)); };
    search.walk(bit(0), 1, emit);
}

std::vector<GapSet> list_frobenius_gns(const Point& f, const EnumOptions& options) {
    std::vector<GapSet> out;
    list_frobenius_gns(f, [&](const GapSet& s) { out.push_back(s); }, options);
    return out;
}

void list_gap_sets_in_box(const Point& corner, const std::function<void(const GapSet&)>& sink,
                          const EnumOptions& options) {
    checked_norm(corner, options.max_box_norm);
    DenseSearch search(corner, 0);
    auto emit = [&](Mask in) { sink(search.to_gap_set(in)); };
    search.walk(bit(0), 1, emit);
}

std::uint64_t brute_force_count(const Point& f) {
    if (f.dim() == 0) throw Error(ErrorKind::DimensionMismatch, "F needs at least one coordinate");
    if (f.is_zero()) return 0;
    const std::uint64_t n = box_norm(f);
    if (n > kBruteForceMaxNorm) {
        throw Error(ErrorKind::LimitExceeded, "brute force needs ||F|| <= 16, got " + std::to_string(n));
    }
    const Box box(f);
    std::vector<std::size_t> sum(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) sum[a * n + b] = box.sum_index(a, b);
    }
    // Free points are the indices 1..n-2; 0 is always in S and F never is.
    const std::size_t free = n - 2;
    std::uint64_t count = 0;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << free); ++choice) {
        Mask in = bit(0) | (choice << 1);
        bool closed = true;
        for (std::size_t a = 1; a < n && closed; ++a) {
            if (!(in & bit(a))) continue;
            for (std::size_t b = a; b < n; ++b) {
                if (!(in & bit(b))) continue;
                std::size_t s = sum[a * n + b];
                if (s != Box::npos && !(in & bit(s))) {
                    closed = false;
                    break;
                }
            }
        }
        if (closed) ++count;
    }
    return count;
}

}  // namespace gns
