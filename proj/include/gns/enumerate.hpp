#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "gns/gap_set.hpp"
#include "gns/point.hpp"

namespace gns {

struct EnumOptions {
    /// Largest ||F|| accepted; the search state is a 64-bit mask, so values
    /// above 64 are rejected regardless.
    std::uint64_t max_box_norm = 30;
    std::size_t threads = 1;
    /// Number of leading decisions fixed to split the tree into 2^p subtrees.
    std::size_t split_depth = 6;
};

inline constexpr std::uint64_t kMaxDenseBox = 64;

/// N(F): the number of Frobenius GNS whose Frobenius gap is F.
/// F = 0 gives 0. Throws LimitExceeded or CountOverflow.
std::uint64_t count_frobenius_gns(const Point& f, const EnumOptions& options = {});

/// Emits every Frobenius GNS with Frobenius gap F exactly once. Box points
/// are decided in increasing mixed-radix index and "gap" is tried before
/// "element", so the first set emitted is the whole box minus 0.
void list_frobenius_gns(const Point& f, const std::function<void(const GapSet&)>& sink,
                        const EnumOptions& options = {});

std::vector<GapSet> list_frobenius_gns(const Point& f, const EnumOptions& options = {});

/// Every valid gap set whose gaps all lie in [0, corner]. Same order rules
/// as list_frobenius_gns.
void list_gap_sets_in_box(const Point& corner, const std::function<void(const GapSet&)>& sink,
                          const EnumOptions& options = {});

/// Checks every subset of the open box directly; ||F|| <= 16.
std::uint64_t brute_force_count(const Point& f);

inline constexpr std::uint64_t kBruteForceMaxNorm = 16;

}  // namespace gns
