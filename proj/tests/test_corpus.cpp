#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gns/box.hpp"
#include "gns/corpus.hpp"
#include "gns/gap_set.hpp"

using namespace gns;

namespace {

// All closed gap sets whose points fit in some box of at most max_norm points.
std::set<std::vector<Point>> corpus_oracle(std::size_t d, std::uint64_t max_norm) {
    std::set<std::vector<Point>> out;
    for (const auto& corner : boxes_up_to(d, max_norm)) {
        const auto pts = Box(corner).points();
        const std::size_t n = pts.size() - 1;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            std::vector<Point> gaps;
            for (std::size_t i = 0; i < n; ++i)
                if (m >> i & 1) gaps.push_back(pts[i + 1]);
            if (closure_witness(d, gaps)) continue;
            std::sort(gaps.begin(), gaps.end());
            out.insert(gaps);
        }
    }
    return out;
}

void require_all_pass(const std::vector<SuiteResult>& suites) {
    for (const auto& s : suites) {
        INFO(s.name << ": " << s.first_counterexample);
        CHECK(s.failed == 0);
        CHECK(s.checked > 0);
    }
}

}  // namespace

TEST_CASE("box corners") {
    CHECK(boxes_up_to(1, 4) == std::vector<Point>{{0}, {1}, {2}, {3}});
    CHECK(boxes_up_to(2, 4).size() == 8);
    CHECK(boxes_up_to(2, 0).empty());
}

TEST_CASE("corpus is exactly the closed gap sets in small boxes") {
    for (const auto& [d, n] : std::vector<std::pair<std::size_t, std::uint64_t>>{{1, 12}, {2, 12}, {3, 12}}) {
        std::set<std::vector<Point>> got;
        for (const auto& s : gap_set_corpus(d, n)) got.emplace(s.gaps().begin(), s.gaps().end());
        CHECK(got == corpus_oracle(d, n));
    }
}

TEST_CASE("property suites pass on exhaustive corpora") {
    CorpusOptions opts;
    opts.axiom_samples = 20000;
    require_all_pass(run_corpus_suites(1, gap_set_corpus(1, 10), opts));
    require_all_pass(run_corpus_suites(2, gap_set_corpus(2, 10), opts));
    require_all_pass(run_enumeration_suites(1, 10));
    require_all_pass(run_enumeration_suites(2, 10));
}

TEST_CASE("empty corpus passes vacuously") {
    for (const auto& s : run_corpus_suites(2, {}, {})) CHECK(s.passed());
}
