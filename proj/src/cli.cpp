#include "gns/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "gns/bounds.hpp"
#include "gns/box.hpp"
#include "gns/classify.hpp"
#include "gns/corpus.hpp"
#include "gns/enumerate.hpp"
#include "gns/error.hpp"
#include "gns/json_io.hpp"
#include "gns/order.hpp"

namespace gns::cli {

using nlohmann::json;

namespace {

const char* command_name(Command c) {
    switch (c) {
        case Command::Analyze: return "analyze";
        case Command::Enumerate: return "enumerate";
        case Command::Construct: return "construct";
        case Command::Bounds: return "bounds";
        case Command::Verify: return "verify";
    }
    return "?";
}

json header(const RunConfig& cfg, json input) {
    return json{{"tool", "gnstool"},
                {"version", kToolVersion},
                {"command", command_name(cfg.command)},
                {"input", std::move(input)}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::LimitExceeded:
        case ErrorKind::CountOverflow:
            return kUsageOrLimit;
        default:
            return kValidationFailure;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::MalformedInput, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json pair_json(const std::optional<std::pair<Point, Point>>& w) {
    if (!w) return nullptr;
    return json::array({to_json(w->first), to_json(w->second)});
}

// ---------------------------------------------------------------------------

int run_analyze(const RunConfig& cfg, std::ostream& out) {
    json input;
    std::optional<GapSet> s;
    if (!cfg.file.empty()) {
        const std::string text = read_file(cfg.file);
        try {
            input = json::parse(text);
        } catch (const json::parse_error& e) {
            throw Error(ErrorKind::MalformedInput, e.what());
        }
        s = gap_set_from_json(input);
    } else {
        auto points = parse_point_list(cfg.gaps);
        if (points.empty() && !cfg.dim) {
            throw Error(ErrorKind::MalformedInput, "give --file, --gaps, or --d for an empty gap set");
        }
        const std::size_t d = cfg.dim ? *cfg.dim : points.front().dim();
        input = json{{"d", d}, {"gaps", to_json(points)}};
        s = validate(d, std::move(points));
    }

    const Classification c = classify(*s);
    json report = header(cfg, input);
    report["gapSet"] = gap_set_to_json(*s);
    report["classification"] = classification_to_json(c);

    if (!cfg.order_gap.empty()) {
        const MaximalGapOrder order(parse_point(cfg.order_gap));
        json o = order_to_json(order);
        o["frobeniusGap"] = s->empty() ? json(nullptr) : to_json(frobenius_gap(*s, order));
        report["order"] = o;
    }

    if (cfg.explain) {
        json w;
        const auto fa = frobenius_allowable(*s);
        json qs_violation = nullptr;
        for (const auto& x : s->gaps()) {
            bool ok = std::any_of(fa.begin(), fa.end(), [&](const Point& f) {
                auto diff = subtract(f, x);
                return diff && s->in_semigroup(*diff);
            });
            if (!ok) {
                qs_violation = to_json(x);
                break;
            }
        }
        w["quasiSymmetricViolation"] = qs_violation;
        auto qi = quasi_irreducible_witness(*s);
        w["quasiIrreducibleViolation"] = qi ? to_json(*qi) : json(nullptr);
        if (c.is_frobenius) {
            const TypeBounds tb = type_bounds(*s);
            json psi = json::array();
            for (const auto& e : tb.psi) {
                psi.push_back({{"gap", to_json(e.gap)},
                               {"shift", to_json(e.shift)},
                               {"pseudoFrobenius", to_json(e.pseudo_frob)}});
            }
            w["typeBounds"] = {{"lower", std::to_string(tb.lower_num) + "/" + std::to_string(tb.lower_den)},
                               {"t", tb.t},
                               {"upper", tb.upper}};
            w["psi"] = psi;
            const TSet t = t_set(*s);
            w["tSetComplement"] = to_json(t.complement);
            w["tSetClosureViolation"] = pair_json(t_set_closure_witness(t));
        }
        report["explain"] = w;
    }

    if (cfg.format == Format::Plain) {
        out << std::boolalpha << "genus " << c.genus << "\n";
        out << "tau " << c.tau << "\n";
        out << "t " << c.t << "\n";
        out << "FA " << to_json(c.frobenius_allowable).dump() << "\n";
        out << "PF " << to_json(c.pseudo_frobenius).dump() << "\n";
        out << "quasiSymmetric " << c.quasi_symmetric << "\n";
        out << "quasiIrreducible " << c.quasi_irreducible << "\n";
    } else {
        emit(out, report);
    }
    return kOk;
}

int run_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.f.empty()) throw Error(ErrorKind::MalformedInput, "--F is required");
    const Point f = parse_point(cfg.f);
    json input{{"F", to_json(f)}, {"list", cfg.list}};
    if (f.is_zero()) err << "warning: F = 0 is never a gap; N(0) = 0\n";

    EnumOptions opts;
    opts.threads = cfg.threads;
    opts.split_depth = cfg.split_depth;
    if (cfg.list) {
        opts.max_box_norm = cfg.limits.max_list_norm;
        input["limit"] = opts.max_box_norm;
        out << header(cfg, input).dump() << '\n';
        list_frobenius_gns(f, [&](const GapSet& s) { out << gap_set_to_json(s).dump() << '\n'; }, opts);
        return kOk;
    }
    opts.max_box_norm = cfg.limits.max_box_norm;
    const std::uint64_t n = count_frobenius_gns(f, opts);
    if (cfg.format.value_or(Format::Plain) == Format::Plain) {
        out << n << '\n';
    } else {
        input["limit"] = opts.max_box_norm;
        json report = header(cfg, input);
        report["count"] = n;
        report["norm"] = f.is_zero() ? 1 : box_norm(f);
        emit(out, report);
    }
    return kOk;
}

int run_construct(const RunConfig& cfg, std::ostream& out) {
    if (cfg.f.empty()) throw Error(ErrorKind::MalformedInput, "--F is required");
    const Point f = parse_point(cfg.f);
    json input{{"F", to_json(f)}};

    if (cfg.d5) {
        const auto x = parse_point_list(cfg.x);
        input["family"] = "d5";
        input["X"] = to_json(x);
        const GapSet s = construct_family_d5(f, x);
        json report = header(cfg, input);
        report["regionSize"] = d5_region(f).size();
        report["gapSet"] = gap_set_to_json(s);
        report["classification"] = classification_to_json(classify(s));
        emit(out, report);
        return kOk;
    }

    const BoxFamily family(f);
    json report;
    if (cfg.samples > 0) {
        input["samples"] = cfg.samples;
        input["seed"] = cfg.seed;
        report = header(cfg, input);
        std::mt19937_64 rng(cfg.seed);
        std::set<std::vector<Point>> distinct;
        for (std::size_t i = 0; i < cfg.samples; ++i) {
            const FamilyChoice choice = sample_family_choice(family, rng);
            const GapSet s = construct_family(family, choice.y, choice.z);
            distinct.emplace(s.gaps().begin(), s.gaps().end());
        }
        report["sampled"] = cfg.samples;
        report["distinctGapSets"] = distinct.size();
    } else {
        const auto y = parse_point_list(cfg.y);
        const auto z = parse_point_list(cfg.z);
        input["Y"] = to_json(y);
        input["Z"] = to_json(z);
        report = header(cfg, input);
        const GapSet s = construct_family(family, y, z);
        report["gapSet"] = gap_set_to_json(s);
        report["classification"] = classification_to_json(classify(s));
    }
    report["d1"] = family.d1();
    report["B"] = to_json(family.b());
    report["C"] = to_json(family.c());
    report["cDroppedF"] = family.c_dropped_frobenius();
    report["familySize"] = big_to_string(lower_bound_value(f));
    emit(out, report);
    return kOk;
}

std::string fixed(long double v, int digits) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << static_cast<double>(v);
    return os.str();
}

int run_bounds(const RunConfig& cfg, std::ostream& out) {
    if (cfg.constants) {
        const auto table = constants_table(cfg.dmax);
        if (cfg.format.value_or(Format::Csv) == Format::Csv) {
            out << "d,a_d,eps_d,b_d,published_a,published_b,note\n";
            for (const auto& r : table) {
                out << r.d << ',' << fixed(r.a_d, 6) << ',' << fixed(r.eps_d, 12) << ','
                    << fixed(r.b_d, 6) << ',' << (r.published_a ? fixed(*r.published_a, 4) : "") << ','
                    << (r.published_b ? fixed(*r.published_b, 4) : "") << ',' << '"' << r.note << '"'
                    << '\n';
            }
        } else {
            json report = header(cfg, json{{"constants", true}, {"dmax", cfg.dmax}});
            json rows = json::array();
            for (const auto& r : table) {
                rows.push_back({{"d", r.d},
                                {"a_d", static_cast<double>(r.a_d)},
                                {"eps_d", static_cast<double>(r.eps_d)},
                                {"b_d", static_cast<double>(r.b_d)},
                                {"published_a", r.published_a ? json(static_cast<double>(*r.published_a)) : json(nullptr)},
                                {"published_b", r.published_b ? json(static_cast<double>(*r.published_b)) : json(nullptr)},
                                {"note", r.note}});
            }
            report["rows"] = rows;
            emit(out, report);
        }
        return kOk;
    }
    if (cfg.f.empty()) throw Error(ErrorKind::MalformedInput, "--F is required");
    const Point f = parse_point(cfg.f);
    if (cfg.lpf) {
        if (cfg.p.empty()) throw Error(ErrorKind::MalformedInput, "--P is required with --lpf");
        const Point p = parse_point(cfg.p);
        const PFGraph g = build_pf_graph(p, f);
        const BigInt count = count_good_subsets(g);
        const long double bound = l_bound(p, f);
        json report = header(cfg, json{{"lpf", true}, {"P", to_json(p)}, {"F", to_json(f)}});
        report["graph"] = pf_graph_to_json(g);
        report["goodSubsets"] = big_to_string(count);
        report["lBound"] = static_cast<double>(bound);
        report["withinBound"] = static_cast<long double>(count) <= bound;
        emit(out, report);
        return kOk;
    }
    const SandwichReport r = sandwich_report(f, cfg.limits.max_box_norm, cfg.threads);
    json report = header(cfg, json{{"F", to_json(f)}, {"limit", cfg.limits.max_box_norm}});
    report["sandwich"] = sandwich_to_json(r);
    emit(out, report);
    return kOk;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
    json input{{"d", cfg.verify_dims}, {"maxNorm", cfg.verify_max_norm},
               {"seed", cfg.seed}, {"axiomSamples", cfg.axiom_samples}};
    json report = header(cfg, input);
    bool all = true;
    json per_dim = json::array();
    for (std::size_t d : cfg.verify_dims) {
        if (d == 0) throw Error(ErrorKind::DimensionMismatch, "dimension must be at least 1");
        const auto corpus = gap_set_corpus(d, cfg.verify_max_norm);
        CorpusOptions opts;
        opts.seed = cfg.seed;
        opts.axiom_samples = cfg.axiom_samples;
        auto suites = run_corpus_suites(d, corpus, opts);
        auto counting = run_enumeration_suites(d, std::min<std::uint64_t>(cfg.verify_max_norm, 16), cfg.threads);
        suites.insert(suites.end(), counting.begin(), counting.end());
        json rows = json::array();
        for (const auto& s : suites) {
            all = all && s.passed();
            rows.push_back({{"suite", s.name},
                            {"checked", s.checked},
                            {"failed", s.failed},
                            {"firstCounterexample", s.first_counterexample.empty()
                                                        ? json(nullptr)
                                                        : json(s.first_counterexample)}});
        }
        per_dim.push_back({{"d", d}, {"corpusSize", corpus.size()}, {"suites", rows}});
    }
    report["results"] = per_dim;
    report["passed"] = all;
    emit(out, report);
    return all ? kOk : kValidationFailure;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Command::Analyze: return run_analyze(cfg, out);
            case Command::Enumerate: return run_enumerate(cfg, out, err);
            case Command::Construct: return run_construct(cfg, out);
            case Command::Bounds: return run_bounds(cfg, out);
            case Command::Verify: return run_verify(cfg, out);
        }
    } catch (const Error& e) {
        json report = header(cfg, nullptr);
        report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
        emit(out, report);
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const std::logic_error& e) {
        json report = header(cfg, nullptr);
        report["error"] = {{"kind", "InternalInconsistency"}, {"message", e.what()}};
        emit(out, report);
        err << "internal error: " << e.what() << '\n';
        return kValidationFailure;
    }
    return kUsageOrLimit;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact computations with generalized numerical semigroups", "gnstool"};
    app.require_subcommand(1);

    std::string format;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--limit", cfg.limits.max_box_norm, "Largest ||F|| to enumerate");
        sub->add_option("--seed", cfg.seed, "Seed for all sampling");
        sub->add_option("--format", format, "json, csv or plain")
            ->check(CLI::IsMember({"json", "csv", "plain"}));
    };

    auto* analyze = app.add_subcommand("analyze", "Classify a gap set");
    analyze->add_option("--file", cfg.file, "Gap-set JSON document");
    analyze->add_option("--gaps", cfg.gaps, "Inline gaps, e.g. \"1,0;0,1\"");
    analyze->add_option("--d", cfg.dim, "Dimension (needed for an empty inline gap set)");
    analyze->add_option("--order-gap", cfg.order_gap, "Report the Frobenius gap under the order built from h");
    analyze->add_flag("--explain", cfg.explain, "Add witnesses");
    add_common(analyze);

    auto* enumerate = app.add_subcommand("enumerate", "Count or list Frobenius GNS with gap F");
    enumerate->add_option("--F", cfg.f, "Frobenius gap, e.g. 2,3")->required();
    enumerate->add_flag("--list", cfg.list, "Stream the gap sets as JSON lines");
    enumerate->add_option("--list-limit", cfg.limits.max_list_norm, "Largest ||F|| for --list");
    enumerate->add_option("--split-depth", cfg.split_depth, "Decisions fixed per parallel subtree");
    add_common(enumerate);

    auto* construct = app.add_subcommand("construct", "Build members of the lower-bound families");
    construct->add_option("--F", cfg.f, "Frobenius gap")->required();
    construct->add_option("--Y", cfg.y, "Good subset of B");
    construct->add_option("--Z", cfg.z, "Subset of C");
    construct->add_flag("--d5", cfg.d5, "Use the d = 5 family");
    construct->add_option("--X", cfg.x, "Subset of the d = 5 region");
    construct->add_option("--samples", cfg.samples, "Sample random (Y, Z) instead");
    add_common(construct);

    auto* bounds = app.add_subcommand("bounds", "Bounds on N(F) and the dimension constants");
    bounds->add_option("--F", cfg.f, "Frobenius gap");
    bounds->add_option("--P", cfg.p, "Gap below F for --lpf");
    bounds->add_flag("--constants", cfg.constants, "Print a_d, eps_d, b_d");
    bounds->add_option("--dmax", cfg.dmax, "Largest d for --constants")->check(CLI::PositiveNumber);
    bounds->add_flag("--lpf", cfg.lpf, "Pairing-graph count for gap P");
    add_common(bounds);

    auto* verify = app.add_subcommand("verify", "Run the property suites on exhaustive corpora");
    verify->add_option("--d", cfg.verify_dims, "Dimensions")->expected(1, -1);
    verify->add_option("--max-norm", cfg.verify_max_norm, "Largest box size in the corpus");
    verify->add_option("--samples", cfg.axiom_samples, "Relaxed-order axiom samples per corpus");
    add_common(verify);

    std::vector<const char*> argv{"gnstool"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageOrLimit;
    }

    if (analyze->parsed()) cfg.command = Command::Analyze;
    if (enumerate->parsed()) cfg.command = Command::Enumerate;
    if (construct->parsed()) cfg.command = Command::Construct;
    if (bounds->parsed()) cfg.command = Command::Bounds;
    if (verify->parsed()) cfg.command = Command::Verify;
    if (format == "json") cfg.format = Format::Json;
    if (format == "csv") cfg.format = Format::Csv;
    if (format == "plain") cfg.format = Format::Plain;
    return run(cfg, out, err);
}

}  // namespace gns::cli
