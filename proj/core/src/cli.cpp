// Copyright 2026 The fqcover Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fqcover/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqcover/bounds.hpp"
#include "fqcover/covering.hpp"
#include "fqcover/distortion.hpp"
#include "fqcover/errors.hpp"
#include "fqcover/poly_text.hpp"
#include "fqcover/prime_tables.hpp"
#include "fqcover/report_json.hpp"
#include "fqcover/search.hpp"

namespace fqcover::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

json rat_json(const Rat& value) {
    return json{{"num", numerator(value).str()},
                {"den", denominator(value).str()},
                {"decimal", decimal_string(value)}};
}

std::vector<Rat> parse_rational_list(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw ParseError("expected a comma-separated list of rationals");
    return out;
}

CoveringInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

PiMode parse_mode(const std::string& mode) {
    if (mode == "gff") return PiMode::GenusUpperBound;
    if (mode == "fqx") return PiMode::ExactPolynomialCounts;
    throw ParseError("mode must be 'gff' or 'fqx', got '" + mode + "'");
}

// ---- pi-table ------------------------------------------------------------

struct PiTableOptions {
    std::uint64_t q = 0;
    unsigned max_n = 0;
    int genus = -1;  // bound column only when >= 0
    bool as_json = false;
};

int run_pi_table(const PiTableOptions& opt, std::ostream& out) {
    // Any integer q >= 2 is accepted: the count formula is the exact
    // irreducible count when q is a prime power and the pipeline's
    // anchor expression otherwise (e.g. q = 70).
    if (opt.q < 2) throw ParseError("--q must be at least 2");
    PrimeCountTable table = PrimeCountTable::build(opt.q, opt.max_n);
    if (opt.as_json) {
        json rows = json::array();
        for (const auto& [n, count] : table.counts) {
            json row{{"n", n}, {"exact", count.str()}};
            if (opt.genus >= 0)
                row["upper"] = rat_json(pi_upper_bound(opt.q, static_cast<std::uint32_t>(opt.genus), n).value);
            rows.push_back(row);
        }
        json j{{"q", opt.q}, {"rows", rows}};
        if (opt.genus >= 0) j["genus"] = opt.genus;
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "n\tpi_exact(q=" << opt.q << ")";
    if (opt.genus >= 0) out << "\tupper(genus=" << opt.genus << ")";
    out << "\n";
    for (const auto& [n, count] : table.counts) {
        out << n << "\t" << count.str();
        if (opt.genus >= 0)
            out << "\t" << decimal_string(pi_upper_bound(opt.q, static_cast<std::uint32_t>(opt.genus), n).value);
        out << "\n";
    }
    return kExitOk;
}

// ---- check-cover ----------------------------------------------------------

int run_check_cover(const std::string& path, std::uint64_t budget, bool as_json, std::ostream& out) {
    CoveringInstance instance = load_instance(path);
    CoverReport report = check_cover_exhaustive(instance, budget);
    if (as_json) {
        out << cover_report_json(report) << "\n";
        return kExitOk;
    }
    out << "Q = " << to_text(report.lcm) << "\n";
    out << "covers: " << (report.covers ? "yes" : "no") << "\n";
    out << "multiplicity: " << report.multiplicity << "\n";
    out << "covered_fraction: " << numerator(report.covered_fraction) << "/"
        << denominator(report.covered_fraction) << "\n";
    if (report.witness) out << "witness (uncovered): " << to_text(*report.witness) << "\n";
    return kExitOk;
}

// ---- distort ----------------------------------------------------------------

struct DistortOptions {
    std::string path;
    std::string deltas;
    std::string deltas_by_degree;
    std::uint64_t budget = kDefaultResidueBudget;
    bool trace = false;
    bool as_json = false;
};

int run_distort(const DistortOptions& opt, std::ostream& out, std::ostream& err) {
    CoveringInstance instance = load_instance(opt.path);
    DistortionEngine engine(instance, opt.budget);
    DeltaSchedule schedule = DeltaSchedule::by_degree({Rat(17, 100), Rat(1, 4)});
    if (!opt.deltas.empty() && !opt.deltas_by_degree.empty())
        throw ParseError("--delta and --delta-by-degree are mutually exclusive");
    if (!opt.deltas.empty()) schedule = DeltaSchedule::explicit_steps(parse_rational_list(opt.deltas));
    if (!opt.deltas_by_degree.empty())
        schedule = DeltaSchedule::by_degree(parse_rational_list(opt.deltas_by_degree));

    bool trace = opt.trace;
    if (trace && degree_nonzero(engine.common_modulus()) > 4) {
        err << "note: --trace is limited to deg Q <= 4; omitting the trace\n";
        trace = false;
    }
    DistortionReport report = engine.run(schedule, trace);
    if (opt.as_json) {
        out << distortion_report_json(report, trace) << "\n";
        return kExitOk;
    }
    out << "Q = " << to_text(report.lcm) << " (" << engine.residues() << " residues, "
        << report.steps.size() << " steps)\n";
    for (const auto& s : report.steps) {
        out << "step " << s.step << ": prime " << to_text(s.prime) << "^" << s.exponent
            << " delta=" << decimal_string(s.delta, 6)
            << " M2=" << decimal_string(s.second_moment, 6)
            << " weight=" << decimal_string(s.weight, 6) << "\n";
    }
    out << "weighted_sum = " << decimal_string(report.weighted_sum) << "\n";
    out << "certified_noncover: " << (report.certified_noncover ? "yes" : "no") << "\n";
    out << "uncovered_mass = " << decimal_string(report.uncovered_mass) << "\n";
    if (report.witness) out << "uncovered witness: " << to_text(*report.witness) << "\n";
    if (trace) {
        for (const auto& state : report.trace) {
            out << "P_" << state.step << ":";
            for (const auto& w : state.weights)
                out << " " << numerator(w) << "/" << denominator(w);
            out << "\n";
        }
    }
    return kExitOk;
}

// ---- bound -------------------------------------------------------------------

struct BoundOptions {
    std::uint64_t q = 70;
    unsigned genus = 0;
    unsigned s = 1;
    std::string t1 = "0.17";
    std::string trest = "0.25";
    int trunc = 12;
    std::string mode = "gff";
    bool as_json = false;
};

BoundParams to_params(const BoundOptions& opt) {
    BoundParams params;
    params.q = opt.q;
    params.genus = opt.genus;
    params.multiplicity = opt.s;
    Rat t1 = parse_rational(opt.t1);
    Rat trest = parse_rational(opt.trest);
    params.deltas = DeltaByDegree{t1, trest, trest};
    params.truncation = opt.trunc;
    params.mode = parse_mode(opt.mode);
    return params;
}

int run_bound(const BoundOptions& opt, std::ostream& out) {
    BoundCertificate cert = weighted_sum_upper(to_params(opt));
    if (opt.as_json) {
        out << bound_certificate_json(cert) << "\n";
        return kExitOk;
    }
    out << "series upper bound at q=" << opt.q << " genus=" << opt.genus
        << " mode=" << opt.mode << ":\n";
    out << "  n=1 term : " << decimal_string(cert.first_term.value) << "\n";
    out << "  head     : " << decimal_string(cert.head.value) << "\n";
    out << "  tail     : " << decimal_string(cert.tail.value) << "\n";
    out << "  total    : " << decimal_string(cert.total.value) << "\n";
    out << "  total*s^2/q < 1: " << (cert.passes ? "yes (no covering system of multiplicity s)" : "no")
        << "\n";
    return kExitOk;
}

// ---- optimize-t1 ---------------------------------------------------------------

int run_optimize(std::uint64_t q, unsigned genus, const std::string& mode, bool as_json,
                 std::ostream& out) {
    OptimizeResult result = optimize_t1(q, genus, parse_mode(mode));
    if (as_json) {
        out << optimize_result_json(result) << "\n";
        return kExitOk;
    }
    out << "t1* = " << decimal_string(result.t_star, 6)
        << "  objective <= " << decimal_string(result.value.value) << "\n";
    return kExitOk;
}

// ---- certify-paper ---------------------------------------------------------------

struct CertifyRow {
    std::string name;
    std::string computed;
    std::string reference;
    bool pass = false;
};

std::vector<CertifyRow> certify_rows() {
    std::vector<CertifyRow> rows;

    for (std::uint32_t genus : {0u, 1u, 2u}) {
        for (std::uint32_t s : {1u, 2u}) {
            ThresholdCertificate cert = certify_multiplicity_threshold(genus, s);
            rows.push_back({"threshold(genus=" + std::to_string(genus) + ",s=" + std::to_string(s) + ")",
                            decimal_string(cert.threshold.value),
                            "<= " + decimal_string(cert.reference), cert.within_reference});
        }
    }

    DistinctModuliCertificate dm = certify_distinct_moduli();
    rows.push_back({"distinct-moduli series total", decimal_string(dm.computed_total.value),
                    "<= " + decimal_string(dm.certified_constant), dm.constant_verified});
    rows.push_back({"distinct-moduli q_min", std::to_string(dm.q_min), "78", dm.q_min == 78});
    rows.push_back({"distinct-moduli q_final", std::to_string(dm.q_final), "73", dm.q_final == 73});
    rows.push_back({"prime powers strictly between", std::to_string(dm.gap_scan.size()) + " found",
                    "none", dm.gap_scan.empty()});

    OptimizeResult t1 = minimize_first_term_objective(UpperReal(Rat(261, 1000)), UpperReal(Rat(3117, 1000)));
    rows.push_back({"degree-1 delta optimum", decimal_string(t1.t_star, 6), "0.1732 +/- 0.001",
                    boost::multiprecision::abs(t1.t_star - Rat(1732, 10000)) <= Rat(1, 1000)});
    OptimizeResult t2 = minimize_first_term_objective(UpperReal(Rat(1)), UpperReal(Rat(3, 2)));
    rows.push_back({"degree-2 delta optimum", decimal_string(t2.t_star, 6), "0.25 +/- 0.001",
                    boost::multiprecision::abs(t2.t_star - Rat(1, 4)) <= Rat(1, 1000)});

    bool envelopes = verify_term_envelopes(70, 12);
    rows.push_back({"term envelopes at anchor (n=2..12)", envelopes ? "hold" : "violated", "hold",
                    envelopes});
    return rows;
}

int run_certify(bool as_json, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    std::vector<CertifyRow> rows = certify_rows();
    bool overall = true;
    for (const auto& r : rows) overall = overall && r.pass;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();

    if (as_json) {
        json jrows = json::array();
        for (const auto& r : rows)
            jrows.push_back(json{{"name", r.name},
                                 {"computed", r.computed},
                                 {"reference", r.reference},
                                 {"pass", r.pass}});
        json j{{"rows", jrows}, {"overall_pass", overall}, {"runtime", json{{"ms", ms}}}};
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : rows) {
            out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << ": computed " << r.computed
                << ", reference " << r.reference << "\n";
        }
        out << (overall ? "overall: PASS" : "overall: FAIL") << " (" << ms << " ms)\n";
    }
    return overall ? kExitOk : kExitVerificationFailed;
}

// ---- search ---------------------------------------------------------------------

struct SearchOptions {
    std::uint64_t q = 2;
    unsigned k = 1;
    int max_deg = 2;
    std::uint64_t budget = 200000;
    std::string strategy = "dfs";
    std::string out_path;
    bool as_json = false;
};

int run_search(const SearchOptions& opt, std::ostream& out) {
    SearchConfig config;
    std::uint64_t p = opt.q;
    if (opt.k > 1) {
        // The field size is q = p^k; recover p.
        p = 0;
        for (std::uint64_t c = 2; ; ++c) {
            std::uint64_t power = checked_pow_u64(c, opt.k, std::uint64_t{1} << 62);
            if (power == 0 || power > opt.q) break;
            if (power == opt.q) {
                p = c;
                break;
            }
        }
        if (p == 0) throw ParseError("--q must equal p^k for the given --k");
    }
    config.field = field_make(p, opt.k);
    config.max_degree = opt.max_deg;
    config.node_budget = opt.budget;
    if (opt.strategy == "dfs") {
        config.strategy = SearchStrategy::DfsBacktrack;
    } else if (opt.strategy == "greedy") {
        config.strategy = SearchStrategy::GreedyDensity;
    } else {
        throw ParseError("--strategy must be 'dfs' or 'greedy'");
    }

    SearchOutcome outcome = search_distinct_cover(config);
    if (opt.as_json) {
        json j{{"found", outcome.instance.has_value()},
               {"nodes_visited", outcome.nodes_visited},
               {"budget_exhausted", outcome.budget_exhausted}};
        if (outcome.instance) j["instance"] = format_instance(*outcome.instance);
        out << j.dump(2) << "\n";
    } else if (outcome.instance) {
        out << format_instance(*outcome.instance);
    } else {
        out << "# no distinct-moduli cover found ("
            << (outcome.budget_exhausted ? "node budget exhausted" : "search space exhausted")
            << ", " << outcome.nodes_visited << " nodes)\n";
    }
    if (outcome.instance && !opt.out_path.empty()) {
        std::ofstream file(opt.out_path);
        if (!file) throw ParseError("cannot write instance file '" + opt.out_path + "'");
        file << format_instance(*outcome.instance);
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact covering-system verification and certified bounds over F_q[x]"};
    app.require_subcommand(1);

    PiTableOptions pi_opt;
    auto* pi = app.add_subcommand("pi-table", "exact irreducible counts and the genus bound");
    pi->add_option("--q", pi_opt.q, "field size (prime power)")->required();
    pi->add_option("--max-n", pi_opt.max_n, "largest degree to tabulate")->required();
    pi->add_option("--genus", pi_opt.genus, "add the genus-parameterized bound column");
    pi->add_flag("--json", pi_opt.as_json, "emit JSON");

    std::string cover_path;
    std::uint64_t cover_budget = kDefaultResidueBudget;
    bool cover_json = false;
    auto* cover = app.add_subcommand("check-cover", "exhaustively decide whether an instance covers");
    cover->add_option("file", cover_path, "instance file")->required();
    cover->add_option("--budget", cover_budget, "residue enumeration budget");
    cover->add_flag("--json", cover_json, "emit JSON");

    DistortOptions distort_opt;
    auto* distort = app.add_subcommand("distort", "run the measure-distortion pipeline");
    distort->add_option("file", distort_opt.path, "instance file")->required();
    distort->add_option("--delta", distort_opt.deltas, "explicit per-step deltas d1,d2,...");
    distort->add_option("--delta-by-degree", distort_opt.deltas_by_degree,
                        "per-degree deltas t1,t2,... (last repeats)");
    distort->add_option("--budget", distort_opt.budget, "residue enumeration budget");
    distort->add_flag("--trace", distort_opt.trace, "dump per-step measures (deg Q <= 4)");
    distort->add_flag("--json", distort_opt.as_json, "emit JSON");

    BoundOptions bound_opt;
    auto* bound = app.add_subcommand("bound", "certified upper bound on the weighted moment series");
    bound->add_option("--q", bound_opt.q, "field size (default: the q = 70 anchor)");
    bound->add_option("--genus", bound_opt.genus, "genus parameter");
    bound->add_option("--s", bound_opt.s, "multiplicity");
    bound->add_option("--t1", bound_opt.t1, "degree-1 delta (exact rational or decimal)");
    bound->add_option("--trest", bound_opt.trest, "delta for degrees >= 2");
    bound->add_option("--trunc", bound_opt.trunc, "series truncation point N");
    bound->add_option("--mode", bound_opt.mode, "'gff' (genus bound) or 'fqx' (exact counts)");
    bound->add_flag("--json", bound_opt.as_json, "emit JSON");

    std::uint64_t opt_q = 70;
    unsigned opt_genus = 0;
    std::string opt_mode = "gff";
    bool opt_json = false;
    auto* optimize = app.add_subcommand("optimize-t1", "minimize the degree-1 series term over t1");
    optimize->add_option("--q", opt_q, "field size (default: the q = 70 anchor)");
    optimize->add_option("--genus", opt_genus, "genus parameter");
    optimize->add_option("--mode", opt_mode, "'gff' or 'fqx'");
    optimize->add_flag("--json", opt_json, "emit JSON");

    bool certify_json = false;
    auto* certify = app.add_subcommand("certify-paper",
                                       "verify the certified constants against the published reference values");
    certify->add_flag("--json", certify_json, "emit JSON");

    SearchOptions search_opt;
    auto* search = app.add_subcommand("search", "search for a distinct-moduli covering system");
    search->add_option("--q", search_opt.q, "field size (prime power)")->required();
    search->add_option("--k", search_opt.k, "extension degree (q = p^k)");
    search->add_option("--max-deg", search_opt.max_deg, "modulus degree cap");
    search->add_option("--budget", search_opt.budget, "node budget");
    search->add_option("--strategy", search_opt.strategy, "'dfs' or 'greedy'");
    search->add_option("--out", search_opt.out_path, "write the found instance to a file");
    search->add_flag("--json", search_opt.as_json, "emit JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (pi->parsed()) return run_pi_table(pi_opt, out);
        if (cover->parsed()) return run_check_cover(cover_path, cover_budget, cover_json, out);
        if (distort->parsed()) return run_distort(distort_opt, out, err);
        if (bound->parsed()) return run_bound(bound_opt, out);
        if (optimize->parsed()) return run_optimize(opt_q, opt_genus, opt_mode, opt_json, out);
        if (certify->parsed()) return run_certify(certify_json, out);
        if (search->parsed()) return run_search(search_opt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no subcommand selected\n";
    return kExitUsage;
}

}  // namespace fqcover::cli
