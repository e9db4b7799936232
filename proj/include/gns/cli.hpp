#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gns::cli {

enum class Command { Analyze, Enumerate, Construct, Bounds, Verify };
enum class Format { Json, Csv, Plain };

struct Limits {
    std::uint64_t max_box_norm = 30;
    std::uint64_t max_list_norm = 20;
};

struct RunConfig {
    Command command = Command::Analyze;
    // analyze
    std::string file;
    std::string gaps;            // inline "a,b;c,d"
    std::optional<std::size_t> dim;
    std::string order_gap;
    bool explain = false;
    // enumerate / construct / bounds
    std::string f;
    std::string p;
    bool list = false;
    std::string y, z, x;
    bool d5 = false;
    std::size_t samples = 0;
    bool constants = false;
    bool lpf = false;
    std::size_t dmax = 15;
    // verify
    std::vector<std::size_t> verify_dims{1, 2};
    std::uint64_t verify_max_norm = 10;
    std::size_t axiom_samples = 100000;

    std::size_t threads = 1;
    std::size_t split_depth = 6;
    Limits limits;
    std::optional<Format> format;
    std::uint64_t seed = 1;
};

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kValidationFailure = 1;
inline constexpr int kUsageOrLimit = 2;

/// Parses argv-style arguments (without the program name) and runs the
/// command. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gns::cli
