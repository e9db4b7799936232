#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gns/gap_set.hpp"
#include "gns/point.hpp"

namespace gns {

struct Classification {
    bool is_frobenius = false;
    std::optional<Point> frobenius_gap;
    std::size_t genus = 0;
    std::size_t tau = 0;
    std::size_t t = 0;
    std::vector<Point> frobenius_allowable;
    std::vector<Point> pseudo_frobenius;
    bool quasi_symmetric = false;
    bool quasi_irreducible = false;
    bool symmetric = false;
    bool pseudo_symmetric = false;
    bool irreducible = false;
    /// Only meaningful for Frobenius GNS.
    std::optional<bool> almost_symmetric;
};

/// The unique maximal gap, when there is exactly one.
std::optional<Point> is_frobenius_gns(const GapSet& s);

// The individual criteria are exposed so property suites can compare them
// against each other; the is_* functions evaluate both and throw
// std::logic_error if they ever disagree.

/// tau(S) == t(S).
bool quasi_symmetric_by_count(const GapSet& s);
/// Every gap x has some F in FA(S) with F - x in S.
bool quasi_symmetric_by_gaps(const GapSet& s);
bool is_quasi_symmetric(const GapSet& s);

/// Every gap x has 2x in FA(S) or F - x in S for some F in FA(S).
bool quasi_irreducible_by_gaps(const GapSet& s);
/// Every P in PF(S) has P in FA(S) or 2P in FA(S).
bool quasi_irreducible_by_pf(const GapSet& s);
bool is_quasi_irreducible(const GapSet& s);

/// The first gap violating the quasi-irreducible condition, if any.
std::optional<Point> quasi_irreducible_witness(const GapSet& s);

bool is_symmetric(const GapSet& s);
bool is_pseudo_symmetric(const GapSet& s);
bool is_irreducible(const GapSet& s);

/// Whether S is maximal among GNS having every point of D as a gap:
/// no x in PF(S) \ D has 2x in S. Throws DNotAntichain, DNotSubsetOfGaps.
bool is_maximal_avoiding(const GapSet& s, std::span<const Point> d);

/// Complement of T(S) = { x | F - x in (Z^d \ S) u {0} } for a Frobenius GNS
/// with Frobenius gap F: the points F - s, s in S \ {0}, s <= F.
struct TSet {
    Point frobenius_gap;
    std::vector<Point> complement;
};

TSet t_set(const GapSet& s);

/// A closure violation of T(S): a, b in T with a + b notin T.
std::optional<std::pair<Point, Point>> t_set_closure_witness(const TSet& t);

bool almost_symmetric_by_count(const GapSet& s);
bool almost_symmetric_by_t_set(const GapSet& s);
/// Throws NotFrobeniusGNS.
bool is_almost_symmetric(const GapSet& s);

struct PsiEntry {
    Point gap;
    Point shift;          // the order-maximal s in S with gap + s in H(S)
    Point pseudo_frob;    // gap + shift
};

struct TypeBounds {
    /// g / (||F|| - g) as an unreduced fraction.
    std::uint64_t lower_num = 0;
    std::uint64_t lower_den = 0;
    std::size_t t = 0;
    /// 2g + 1 - ||F|| (may be negative for non-Frobenius inputs; never here).
    std::int64_t upper = 0;
    std::vector<PsiEntry> psi;
};

/// Type bounds of a Frobenius GNS together with the injection
/// x -> (s_x, x + s_x) from H(S) into (S n [0,F]) x PF(S), where s_x is the
/// maximum under the order built from F. Throws NotFrobeniusGNS.
TypeBounds type_bounds(const GapSet& s);

Classification classify(const GapSet& s);

}  // namespace gns
