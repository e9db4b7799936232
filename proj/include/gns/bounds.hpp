#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gns/gap_set.hpp"
#include "gns/point.hpp"

namespace gns {

using BigInt = boost::multiprecision::cpp_int;

/// floor((x + 1) / 2): the number of integers y with x/2 < y <= x.
inline Coord overline(Coord x) { return (x + 1) / 2; }

/// ceil((d + 1) / 3).
std::size_t family_d1(std::size_t d);

/// The half-boxes B_A of [0, F] and the regions built from them.
///
/// B_A = { x | 2x_i > F_i, x_i <= F_i for i in A; 2x_i < F_i for i notin A },
/// B   = union of B_A over d1 <= |A| <= d - d1,
/// C   = union of B_A over d - d1 + 1 <= |A| <= 2 d1 - 1, minus the point F.
///
/// F itself lies in B_A for A = {1..d}, and that A falls in the C range for
/// d = 1 and d = 3. Adding F to S would make it a non-gap, so C never holds
/// it; `c_dropped_frobenius` records when the raw union contained it.
class BoxFamily {
public:
    /// Materializes B and C; throws LimitExceeded above ||F|| = 2^20 or d > 24.
    explicit BoxFamily(Point f);

    const Point& f() const noexcept { return f_; }
    std::size_t dim() const noexcept { return f_.dim(); }
    std::size_t d1() const noexcept { return d1_; }
    /// prod overline(F_i) = |B_A| for every A.
    std::uint64_t half_box_size() const noexcept { return half_box_; }

    const std::vector<Point>& b() const noexcept { return b_; }
    const std::vector<Point>& c() const noexcept { return c_; }
    bool c_dropped_frobenius() const noexcept { return c_dropped_f_; }

    /// The subset A (as a bitmask over coordinates) with x in B_A, if any.
    std::optional<std::uint64_t> half_box_of(const Point& x) const;

    bool in_b(const Point& x) const;
    bool in_c(const Point& x) const;

    /// Points of B_A, enumerated directly.
    std::vector<Point> half_box_points(std::uint64_t a_mask) const;

private:
    Point f_;
    std::size_t d1_ = 0;
    std::uint64_t half_box_ = 0;
    std::vector<Point> b_;
    std::vector<Point> c_;
    bool c_dropped_f_ = false;
};

/// Gaps of S_F u X u (X + X), where S_F = {0} u { x | x_i > F_i for some i }.
/// No validation; the result is the box [0, F] minus 0 minus X minus X + X.
std::vector<Point> assemble_family_gaps(const Point& f, std::span<const Point> x);

/// S(Y, Z) = S_F u X u (X + X), X = Y u Z, for a good Y in B and Z in C.
/// Throws YNotInB, YNotGood, ZNotInC. The result is checked to be a
/// Frobenius GNS with gap F whose trace on B u C is exactly X.
GapSet construct_family(const BoxFamily& family, std::span<const Point> y,
                        std::span<const Point> z);

struct FamilyChoice {
    std::vector<Point> y;
    std::vector<Point> z;
};

/// A uniformly random admissible (Y, Z): each pair {x, F - x} of B
/// contributes nothing, x, or F - x with equal odds; each point of C is
/// kept with probability 1/2.
FamilyChoice sample_family_choice(const BoxFamily& family, std::mt19937_64& rng);

/// D = union of B_A with |A| >= 3 in dimension 5, without the point F.
std::vector<Point> d5_region(const Point& f);

/// S_F u X for X inside the d = 5 region. Throws WrongDimension, XNotInD.
GapSet construct_family_d5(const Point& f, std::span<const Point> x);

/// Number of Frobenius GNS produced by construct_family for F:
/// 3^(|B|/2) 2^|C|.
BigInt lower_bound_value(const Point& f);

/// 2^|D| for d = 5.
BigInt lower_bound_value_d5(const Point& f);

/// sum_{i=lo}^{hi} binom(d, i), exact; empty ranges give 0.
BigInt binomial_sum(std::size_t d, std::ptrdiff_t lo, std::ptrdiff_t hi);

/// sum_{i=d1}^{d-d1} binom(d, i) / 2^d.
long double central_binomial_fraction(std::size_t d);

/// The closed-form lower-bound base for dimension d, without the d = 5 override.
long double constant_a_formula(std::size_t d);

/// a_d, with a_5 = sqrt(2).
long double constant_a(std::size_t d);

// ---------------------------------------------------------------------------
// Pairing graph on [0, F] with edges x ~ F - x and x ~ P - x.

struct PFGraph {
    Point p;
    Point f;
    /// Box indices of vertices with 2x = F or 2x = P; removed before the
    /// path/cycle decomposition since no edge-free set can hold them.
    std::vector<std::size_t> loop_vertices;
    /// Vertex sequences in path order.
    std::vector<std::vector<std::size_t>> paths;
    /// Vertex sequences in cycle order.
    std::vector<std::vector<std::size_t>> cycles;
    /// Number of vertices of degree two before loop removal (= ||P||).
    std::size_t degree_two_vertices = 0;
};

/// Throws PNotBelowF unless P <= F and P != F.
PFGraph build_pf_graph(const Point& p, const Point& f);

/// Fibonacci number with F_0 = 0, F_1 = 1.
BigInt fibonacci(std::size_t n);

/// Edge-free subsets of a path on n vertices: F_{n+2}.
BigInt path_good_subsets(std::size_t n);

/// Edge-free subsets of a cycle on m >= 3 vertices: F_{m-1} + F_{m+1}.
BigInt cycle_good_subsets(std::size_t m);

/// prod F_{n_i+2} * prod (F_{m_j-1} + F_{m_j+1}).
BigInt count_good_subsets(const PFGraph& g);

/// phi^||F|| (phi / 5^(1/4))^(||F|| - ||P||).
long double l_bound(const Point& p, const Point& f);

// ---------------------------------------------------------------------------
// Upper bound constants.

/// sqrt3^((1 - 2 eps^d) ||F||) + eps^d ||F|| phi^||F|| (phi/5^(1/4))^((1 - (1-eps)^d) ||F||).
long double upper_bound_epsilon(const Point& f, long double eps);

/// (1 - eps)^d ln(phi / 5^(1/4)) - eps^d - ln(phi^2 / (5^(1/4) sqrt3)).
long double epsilon_equation_residual(std::size_t d, long double eps);

/// Root of epsilon_equation_residual on (0, 1) by bisection to 1e-12.
/// Throws NoRootInInterval if the residual is not decreasing on a 1024-point
/// grid or does not change sign.
long double solve_epsilon(std::size_t d);

/// sqrt3^(1 - 2 eps_d^d).
long double constant_b(std::size_t d);

struct ConstantsRecord {
    std::size_t d = 0;
    long double a_d = 0;
    long double eps_d = 0;
    long double b_d = 0;
    std::optional<long double> published_a;
    std::optional<long double> published_b;
    std::string note;
};

/// Published four-decimal values of a_d and b_d for d = 1..15.
inline constexpr std::array<double, 15> kPublishedA = {
    1.4142, 1.3160, 1.4142, 1.4612, 1.4142, 1.4904, 1.5130, 1.4777,
    1.5415, 1.5553, 1.5293, 1.5798, 1.5891, 1.5693, 1.6095};
inline constexpr std::array<double, 15> kPublishedB = {
    1.4142, 1.6630, 1.6968, 1.7173, 1.7275, 1.7311, 1.7319, 1.7320,
    1.7320, 1.7320, 1.7320, 1.7320, 1.7320, 1.7320, 1.7320};

std::vector<ConstantsRecord> constants_table(std::size_t dmax);

// ---------------------------------------------------------------------------

struct SandwichCheck {
    std::string name;
    bool holds = false;
    /// Proven inequalities throw std::logic_error when violated; the others
    /// are reported only.
    bool proven = true;
};

struct SandwichReport {
    Point f;
    std::uint64_t norm = 0;
    std::uint64_t norm_minus_one = 0;
    BigInt family_lower;
    std::optional<BigInt> d5_lower;
    long double a_d_power = 0;
    std::optional<std::uint64_t> exact;
    BigInt pair_bound;          // 3^floor(||F||/2)
    long double sqrt3_power = 0;
    long double eps_d = 0;
    long double eps_upper = 0;
    std::vector<SandwichCheck> checks;
};

/// Computes the exact count when ||F|| <= max_exact_norm.
SandwichReport sandwich_report(const Point& f, std::uint64_t max_exact_norm = 30,
                               std::size_t threads = 1);

}  // namespace gns
