#include "gns/corpus.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gns/box.hpp"
#include "gns/classify.hpp"
#include "gns/enumerate.hpp"
#include "gns/error.hpp"
#include "gns/order.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace gns {

namespace {

void corners_rec(std::size_t d, std::uint64_t max_norm, std::vector<Coord>& cur, std::uint64_t norm,
                 std::vector<Point>& out) {
    if (cur.size() == d) {
        out.emplace_back(cur);
        return;
    }
    for (Coord c = 0; norm * (c + 1) <= max_norm; ++c) {
        cur.push_back(c);
        corners_rec(d, max_norm, cur, norm * (c + 1), out);
        cur.pop_back();
    }
}

std::string describe(const GapSet& s) {
    std::ostringstream os;
    os << "gaps {";
    for (std::size_t i = 0; i < s.gaps().size(); ++i) os << (i ? "," : "") << s.gaps()[i];
    os << "}";
    return os.str();
}

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void record(bool ok, const std::function<std::string()>& what) {
        ++result_.checked;
        if (!ok && result_.failed++ == 0) result_.first_counterexample = what();
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

// Closure of S against all pairs inside [0, 2 * corner]: independent of the
// gap-decomposition walk used by validate().
bool semigroup_pairs_closed(const GapSet& s) {
    if (s.empty()) return true;
    const Point corner = s.bounding_corner();
    const Box region(twice(corner));
    std::vector<Point> elements;
    for (const auto& p : region.points()) {
        if (s.in_semigroup(p)) elements.push_back(p);
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i; j < elements.size(); ++j) {
            if (s.is_gap(add(elements[i], elements[j]))) return false;
        }
    }
    return true;
}

// P + s notin H for every nonzero s in S with s <= corner.
std::vector<Point> pseudo_frobenius_by_definition(const GapSet& s) {
    std::vector<Point> out;
    if (s.empty()) return out;
    const Box region(s.bounding_corner());
    for (const auto& p : s.gaps()) {
        bool ok = true;
        for (std::size_t i = 1; i < region.size() && ok; ++i) {
            Point e = region.point_at(i);
            if (s.in_semigroup(e) && s.is_gap(add(p, e))) ok = false;
        }
        if (ok) out.push_back(p);
    }
    return out;
}

constexpr std::size_t kMaxCorpusPoints = 512;
using GapBits = std::bitset<kMaxCorpusPoints>;

bool subset_of(const GapBits& a, const GapBits& b) { return (a & ~b).none(); }

}  // namespace

std::vector<Point> boxes_up_to(std::size_t d, std::uint64_t max_norm) {
    std::vector<Point> out;
    if (d == 0 || max_norm == 0) return out;
    std::vector<Coord> cur;
    corners_rec(d, max_norm, cur, 1, out);
    return out;
}

std::vector<GapSet> gap_set_corpus(std::size_t d, std::uint64_t max_norm) {
    std::map<std::vector<Point>, GapSet> unique;
    for (const auto& corner : boxes_up_to(d, max_norm)) {
        // Boxes inside a larger admissible box add nothing new.
        bool maximal = true;
        for (std::size_t i = 0; i < d && maximal; ++i) {
            if (box_norm(corner) / (corner[i] + 1) * (corner[i] + 2) <= max_norm) maximal = false;
        }
        if (!maximal) continue;
        EnumOptions opts;
        opts.max_box_norm = max_norm;
        list_gap_sets_in_box(corner, [&](const GapSet& s) {
            std::vector<Point> key(s.gaps().begin(), s.gaps().end());
            unique.try_emplace(std::move(key), s);
        }, opts);
    }
    std::vector<GapSet> out;
    out.reserve(unique.size());
    for (auto& [key, s] : unique) out.push_back(std::move(s));
    return out;
}

std::vector<SuiteResult> run_corpus_suites(std::size_t d, const std::vector<GapSet>& corpus,
                                           const CorpusOptions& options) {
    Suite validity("core: validity vs pairwise semigroup oracle");
    Suite pf_def("core: PF vs definitional oracle");
    Suite fa_pf("core: FA inside PF, every gap below some FA");
    Suite order_max("orders: each maximal gap is the maximum under its order");
    Suite axioms("orders: relaxed monomial axioms (sampled)");
    Suite qsym("classify: quasi-symmetric count vs gap criterion");
    Suite qirr("classify: quasi-irreducible definition vs PF criterion");
    Suite maximal("classify: maximal D-avoiding vs quasi-irreducible with FA = D");
    Suite two_tau("classify: t <= 2 tau for quasi-irreducible");
    Suite almost("classify: almost symmetric count vs T(S) closure");
    Suite sandwich("classify: g/(||F||-g) <= t <= 2g+1-||F|| and psi injective");
    Suite irr_shape("classify: irreducible iff symmetric or pseudo-symmetric (Frobenius)");

    // Point index over every gap that appears in the corpus.
    std::map<Point, std::size_t> point_index;
    for (const auto& s : corpus) {
        for (const auto& g : s.gaps()) point_index.try_emplace(g, point_index.size());
    }
    if (point_index.size() > kMaxCorpusPoints) {
        throw Error(ErrorKind::LimitExceeded, "corpus spans too many points for the superset search");
    }
    std::vector<GapBits> bits(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (const auto& g : corpus[i].gaps()) bits[i].set(point_index.at(g));
    }

    std::set<Point> orders_seen;
    for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
        const GapSet& s = corpus[idx];
        auto what = [&] { return describe(s); };

        validity.record(semigroup_pairs_closed(s), what);

        const auto pf = pseudo_frobenius(s);
        const auto fa = frobenius_allowable(s);
        pf_def.record(pf == pseudo_frobenius_by_definition(s), what);

        bool fa_ok = std::includes(pf.begin(), pf.end(), fa.begin(), fa.end());
        for (const auto& x : s.gaps()) {
            fa_ok = fa_ok && std::any_of(fa.begin(), fa.end(),
                                         [&](const Point& f) { return natural_leq(x, f); });
        }
        fa_pf.record(fa_ok, what);

        for (const auto& h : fa) {
            orders_seen.insert(h);
            order_max.record(frobenius_gap(s, MaximalGapOrder(h)) == h,
                             [&] { return describe(s) + " with h = " + to_string(h); });
        }

        const bool qs = quasi_symmetric_by_count(s);
        qsym.record(qs == quasi_symmetric_by_gaps(s), what);
        const bool qi = quasi_irreducible_by_gaps(s);
        qirr.record(qi == quasi_irreducible_by_pf(s), what);
        if (qi) two_tau.record(pf.size() <= 2 * fa.size(), what);

        // Maximal proper sub-gap-sets in the corpus, found by containment only.
        std::vector<std::size_t> subs;
        for (std::size_t j = 0; j < corpus.size(); ++j) {
            if (j != idx && subset_of(bits[j], bits[idx]) && bits[j] != bits[idx]) subs.push_back(j);
        }
        std::vector<std::size_t> maximal_subs;
        for (std::size_t j : subs) {
            bool dominated = std::any_of(subs.begin(), subs.end(), [&](std::size_t k) {
                return k != j && subset_of(bits[j], bits[k]);
            });
            if (!dominated) maximal_subs.push_back(j);
        }
        const auto gaps = s.gaps();
        const std::size_t g = gaps.size();
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << g); ++m) {
            std::vector<Point> dset;
            GapBits dbits;
            for (std::size_t i = 0; i < g; ++i) {
                if (m >> i & 1) {
                    dset.push_back(gaps[i]);
                    dbits.set(point_index.at(gaps[i]));
                }
            }
            if (!is_antichain(dset)) continue;
            const bool by_pf = is_maximal_avoiding(s, dset);
            const bool by_shape = qi && fa == dset;
            const bool by_search = std::none_of(maximal_subs.begin(), maximal_subs.end(),
                                                [&](std::size_t j) { return subset_of(dbits, bits[j]); });
            maximal.record(by_pf == by_shape && by_pf == by_search, [&] {
                std::ostringstream os;
                os << describe(s) << " D = {";
                for (std::size_t i = 0; i < dset.size(); ++i) os << (i ? "," : "") << dset[i];
                os << "} pf=" << by_pf << " shape=" << by_shape << " search=" << by_search;
                return os.str();
            });
        }

        if (fa.size() == 1) {
            almost.record(almost_symmetric_by_count(s) == almost_symmetric_by_t_set(s), what);
            bool ok = true;
            try {
                const TypeBounds tb = type_bounds(s);
                const auto t = static_cast<std::int64_t>(tb.t);
                ok = tb.lower_num <= tb.t * tb.lower_den && t <= tb.upper;
            } catch (const std::logic_error&) {
                ok = false;
            }
            sandwich.record(ok, what);
            irr_shape.record(is_irreducible(s) == (is_symmetric(s) || is_pseudo_symmetric(s)), what);
        }
    }

    // Relaxed-order axioms: the sample budget is split over the distinct
    // maximal gaps seen in the corpus.
    if (!orders_seen.empty() && options.axiom_samples > 0) {
        const Point bound(std::vector<Coord>(d, options.axiom_bound));
        const std::size_t per = options.axiom_samples / orders_seen.size();
        std::size_t extra = options.axiom_samples % orders_seen.size();
        std::uint64_t seed = options.seed;
        for (const auto& h : orders_seen) {
            std::size_t n = per + (extra > 0 ? 1 : 0);
            if (extra > 0) --extra;
            if (n == 0) continue;
            const AxiomReport rep = check_relaxed_axioms(MaximalGapOrder(h), bound, n, seed++);
            for (std::size_t i = 0; i + 1 < rep.samples; ++i) axioms.record(true, {});
            axioms.record(rep.passed, [&] {
                return "h = " + to_string(h) + " violates axiom " + rep.violated_axiom +
                       " at v = " + to_string(*rep.v);
            });
        }
    }

    std::vector<SuiteResult> out;
    for (Suite* s : {&validity, &pf_def, &fa_pf, &order_max, &axioms, &qsym, &qirr, &maximal,
                     &two_tau, &almost, &sandwich, &irr_shape}) {
        out.push_back(s->take());
    }
    return out;
}

}  // namespace gns

namespace gns {

std::vector<SuiteResult> run_enumeration_suites(std::size_t d, std::uint64_t max_norm,
                                                std::size_t threads) {
    Suite oracle("enumerate: pruned count vs brute force");
    Suite sqrt3("enumerate: N(F)^2 <= 3^||F||");
    Suite listed("enumerate: listed sets are Frobenius with gap F");
    Suite halving_bound("enumerate: 2^floor((F-1)/2) <= N(F) <= 4*2^floor((F-1)/2)");

    EnumOptions opts;
    opts.max_box_norm = max_norm;
    opts.threads = threads;
    for (const auto& f : boxes_up_to(d, max_norm)) {
        if (f.is_zero()) continue;
        const std::uint64_t n = count_frobenius_gns(f, opts);
        const std::uint64_t norm = box_norm(f);
        auto what = [&] { return "F = " + to_string(f) + ", N = " + std::to_string(n); };
        if (norm <= kBruteForceMaxNorm) oracle.record(n == brute_force_count(f), what);
        {
            using boost::multiprecision::cpp_int;
            cpp_int three = boost::multiprecision::pow(cpp_int(3), static_cast<unsigned>(norm));
            sqrt3.record(cpp_int(n) * n <= three, what);
        }
        if (norm <= 12) {
            std::size_t emitted = 0;
            bool ok = true;
            list_frobenius_gns(f, [&](const GapSet& s) {
                ++emitted;
                auto fa = frobenius_allowable(s);
                ok = ok && fa.size() == 1 && fa.front() == f;
            }, opts);
            listed.record(ok && emitted == n, what);
        }
        if (d == 1) {
            const std::uint64_t low = std::uint64_t{1} << ((f[0] - 1) / 2);
            halving_bound.record(low <= n && n <= 4 * low, what);
        }
    }
    std::vector<SuiteResult> out{oracle.take(), sqrt3.take(), listed.take()};
    if (d == 1) out.push_back(halving_bound.take());
    return out;
}

}  // namespace gns
