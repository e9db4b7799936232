#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gns/gap_set.hpp"
#include "gns/point.hpp"

namespace gns {

/// Corners F in N^d with 1 <= ||F|| <= max_norm, in lexicographic order.
std::vector<Point> boxes_up_to(std::size_t d, std::uint64_t max_norm);

/// All distinct valid gap sets contained in some box [0, F] with
/// ||F|| <= max_norm, in canonical order (includes the empty gap set).
std::vector<GapSet> gap_set_corpus(std::size_t d, std::uint64_t max_norm);

struct SuiteResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string first_counterexample;

    bool passed() const { return failed == 0; }
};

struct CorpusOptions {
    std::uint64_t seed = 1;
    /// Triples per corpus for the relaxed-order axiom sampling.
    std::size_t axiom_samples = 100000;
    /// Sampling region for the axiom check, per coordinate.
    Coord axiom_bound = 6;
};

/// Every classification suite on one corpus:
///   core oracles (validity, PF definition, FA inside PF, gaps below FA),
///   maximal gaps are the order maxima, relaxed-order axioms,
///   quasi-symmetric and quasi-irreducible criteria agreement,
///   maximality among D-avoiding GNS against an exhaustive superset search,
///   t <= 2 tau for quasi-irreducible sets,
///   almost-symmetry criteria agreement, type sandwich and psi injectivity.
std::vector<SuiteResult> run_corpus_suites(std::size_t d, const std::vector<GapSet>& corpus,
                                           const CorpusOptions& options = {});

/// Counting suites over every nonzero F in N^d with ||F|| <= max_norm:
/// pruned search vs brute force (||F|| <= 16), N(F)^2 <= 3^||F||, every
/// listed set is Frobenius with gap F (||F|| <= 12), and for d = 1 the
/// bounds 2^floor((F-1)/2) <= N(F) <= 4 * 2^floor((F-1)/2).
std::vector<SuiteResult> run_enumeration_suites(std::size_t d, std::uint64_t max_norm,
                                                std::size_t threads = 1);

}  // namespace gns
