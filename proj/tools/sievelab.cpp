// sievelab: exact desk-scale evaluation of large-sieve sums over square
// moduli, Farey point counts, the Heath-Brown square sieve, and the
// Gauss/Jacobi/Poisson identities behind them, with measured-constant
// reports in CSV or JSON.

#include "CLI11.hpp"
#include "json.hpp"

#include "sievelab/arith.hpp"
#include "sievelab/bounds.hpp"
#include "sievelab/common.hpp"
#include "sievelab/farey.hpp"
#include "sievelab/poisson.hpp"
#include "sievelab/sieve.hpp"
#include "sievelab/trigpoly.hpp"
#include "sievelab/verify.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace sievelab;
using nlohmann::json;

namespace {

std::string fmt_g17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

int thread_cap() {
    if (const char* env = std::getenv("SIEVELAB_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return (int)std::min<long>(v, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return (int)std::clamp<unsigned>(hw, 1, 8);
}

// runs tasks 0..n-1 on up to thread_cap() workers; results land in slot
// order, so output is independent of scheduling
template <typename Fn>
void run_indexed(int64_t n, Fn&& fn) {
    int workers = (int)std::min<int64_t>(thread_cap(), n);
    if (workers <= 1) {
        for (int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve((size_t)workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int64_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

struct SeqSpec {
    enum class Kind { ones, random_pm1, point_mass, file } kind = Kind::ones;
    double beta = 0.0;
    std::string path;
};

SeqSpec parse_seq(const std::string& s) {
    SeqSpec spec;
    if (s == "ones") {
        spec.kind = SeqSpec::Kind::ones;
    } else if (s == "random_pm1") {
        spec.kind = SeqSpec::Kind::random_pm1;
    } else if (s.rfind("point_mass:", 0) == 0) {
        spec.kind = SeqSpec::Kind::point_mass;
        spec.beta = std::stod(s.substr(11));
        if (!(spec.beta >= 0.0) || spec.beta >= 1.0)
            throw std::domain_error("point_mass beta must lie in [0, 1)");
    } else if (s.rfind("file:", 0) == 0) {
        spec.kind = SeqSpec::Kind::file;
        spec.path = s.substr(5);
    } else {
        throw std::domain_error("unknown sequence spec: " + s +
                                " (expected ones | random_pm1 | point_mass:<beta> | file:<path>)");
    }
    return spec;
}

TrigPolynomial make_poly(const SeqSpec& spec, int64_t M, int64_t N, uint64_t seed) {
    switch (spec.kind) {
        case SeqSpec::Kind::ones: return make_ones(M, N);
        case SeqSpec::Kind::random_pm1: return make_random_pm1(M, N, seed);
        case SeqSpec::Kind::point_mass: return make_point_mass(M, N, spec.beta);
        case SeqSpec::Kind::file: return load_sequence_file(spec.path, M);
    }
    throw std::domain_error("bad sequence spec");
}

struct OutputSink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
            os = &file;
        }
    }
    std::ostream& stream() { return *os; }
};

void emit_header_comment(std::ostream& os, const std::string& invocation,
                         bool reproducible) {
    if (reproducible) return;
    std::time_t now = std::time(nullptr);
    char stamp[64];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    os << "# sievelab " << invocation << " at " << stamp << "\n";
}

std::vector<std::pair<int64_t, int64_t>> build_grid(const std::vector<int64_t>& Qs,
                                                    const std::vector<int64_t>& Ns,
                                                    bool paired) {
    std::vector<std::pair<int64_t, int64_t>> grid;
    if (paired) {
        if (Qs.size() != Ns.size())
            throw std::domain_error("--paired needs equally long --Q and --N lists");
        for (size_t i = 0; i < Qs.size(); ++i) grid.emplace_back(Qs[i], Ns[i]);
    } else {
        for (int64_t q : Qs)
            for (int64_t n : Ns) grid.emplace_back(q, n);
    }
    if (grid.empty()) throw std::domain_error("empty (Q, N) grid");
    return grid;
}

// ------------------------------------------------------------------ lhs

int cmd_lhs(const std::vector<int64_t>& Qs, const std::vector<int64_t>& Ns, bool paired,
            int64_t M, const std::string& seq, int64_t trials, uint64_t seed,
            const std::string& format, const std::string& out_path, bool reproducible,
            const std::string& invocation) {
    SeqSpec spec = parse_seq(seq);
    auto grid = build_grid(Qs, Ns, paired);

    struct Row {
        int64_t Q, N;
        double Z, lhs;
        uint64_t seed;
    };
    int64_t tasks = (int64_t)grid.size() * trials;
    std::vector<Row> rows((size_t)tasks);
    run_indexed(tasks, [&](int64_t i) {
        auto [Q, N] = grid[(size_t)(i / trials)];
        int64_t trial = i % trials;
        uint64_t s = seed + (uint64_t)trial;
        TrigPolynomial poly = make_poly(spec, M, N, s);
        rows[(size_t)i] = {Q, poly.size(), poly.norm_Z(),
                           lhs_square_moduli(poly, Q, QRange::full), s};
    });

    OutputSink sink(out_path);
    if (format == "json") {
        json arr = json::array();
        for (const Row& r : rows)
            arr.push_back({{"Q", r.Q},
                           {"N", r.N},
                           {"Z", r.Z},
                           {"lhs", r.lhs},
                           {"seed", r.seed}});
        sink.stream() << arr.dump(2) << "\n";
    } else {
        emit_header_comment(sink.stream(), invocation, reproducible);
        sink.stream() << "Q,N,Z,lhs,seed\n";
        for (const Row& r : rows)
            sink.stream() << r.Q << ',' << r.N << ',' << fmt_g17(r.Z) << ','
                          << fmt_g17(r.lhs) << ',' << r.seed << "\n";
    }
    return 0;
}

// ------------------------------------------------------------- ratio-grid

int cmd_ratio_grid(const std::vector<int64_t>& Qs, const std::vector<int64_t>& Ns,
                   bool paired, int64_t M, const std::string& seq,
                   const std::vector<std::string>& bound_names, int64_t trials,
                   uint64_t seed, const std::string& format, const std::string& out_path,
                   bool reproducible, const std::string& invocation) {
    SeqSpec spec = parse_seq(seq);
    auto grid = build_grid(Qs, Ns, paired);
    std::vector<BoundName> bounds;
    for (const std::string& s : bound_names) bounds.push_back(bound_from_string(s));

    int64_t tasks = (int64_t)grid.size() * trials;
    std::vector<std::vector<BoundReport>> cells((size_t)tasks);
    run_indexed(tasks, [&](int64_t i) {
        auto [Q, N] = grid[(size_t)(i / trials)];
        int64_t trial = i % trials;
        TrigPolynomial poly = make_poly(spec, M, N, seed + (uint64_t)trial);
        double lhs = lhs_square_moduli(poly, Q, QRange::full);
        for (BoundName bn : bounds)
            cells[(size_t)i].push_back(make_report(Q, poly.size(), poly.norm_Z(), lhs, bn));
    });

    std::vector<double> max_ratio(bounds.size(), 0.0);
    for (const auto& cell : cells)
        for (size_t bi = 0; bi < cell.size(); ++bi)
            if (!cell[bi].degenerate) max_ratio[bi] = std::max(max_ratio[bi], cell[bi].ratio);

    OutputSink sink(out_path);
    if (format == "json") {
        json arr = json::array();
        for (const auto& cell : cells)
            for (const BoundReport& r : cell)
                arr.push_back({{"Q", r.Q},
                               {"N", r.N},
                               {"Z", r.Z},
                               {"bound_name", to_string(r.name)},
                               {"lhs", r.lhs},
                               {"bound_value", r.bound},
                               {"ratio", r.ratio},
                               {"log2NQ", r.log2NQ},
                               {"degenerate", r.degenerate}});
        json summary = json::array();
        for (size_t bi = 0; bi < bounds.size(); ++bi)
            summary.push_back(
                {{"bound_name", to_string(bounds[bi])}, {"max_ratio", max_ratio[bi]}});
        sink.stream() << json{{"rows", arr}, {"summary", summary}}.dump(2) << "\n";
    } else {
        emit_header_comment(sink.stream(), invocation, reproducible);
        sink.stream() << BoundReport::csv_header() << "\n";
        for (const auto& cell : cells)
            for (const BoundReport& r : cell) sink.stream() << r.csv_row() << "\n";
        // summary rows: Q = N = 0, bound name suffixed with :max
        for (size_t bi = 0; bi < bounds.size(); ++bi)
            sink.stream() << "0,0,0," << to_string(bounds[bi]) << ":max,0,0,"
                          << fmt_g17(max_ratio[bi]) << ",0\n";
    }
    return 0;
}

// ---------------------------------------------------------------- count

int cmd_count(const std::string& alpha_str, int64_t Q, double delta,
              const std::string& mode) {
    std::optional<ReducedFraction> rat;
    double alpha_real = 0.0;
    if (alpha_str.find('/') != std::string::npos) {
        size_t slash = alpha_str.find('/');
        rat = ReducedFraction(std::stoll(alpha_str.substr(0, slash)),
                              std::stoll(alpha_str.substr(slash + 1)));
        alpha_real = rat->value();
    } else {
        alpha_real = std::stod(alpha_str);
    }

    if (mode == "max") {
        MaxPResult mp = max_P_over_alpha(Q, delta);
        std::cout << "max_P = " << mp.count << " at witness alpha = " << fmt_g17(mp.witness)
                  << "\n";
        if (mp.near_boundary > 0)
            std::cout << "note: " << mp.near_boundary
                      << " window boundaries within the 1e-15 guard band\n";
        return 0;
    }

    CountWindow w = rat ? CountWindow::at(*rat, Q, delta)
                        : CountWindow::at(alpha_real, Q, delta);
    CountResult res = count_P(w);
    std::cout << "count_P = " << res.count << (rat ? " (exact rational comparison)" : "")
              << "\n";
    if (res.near_boundary > 0)
        std::cout << "note: " << res.near_boundary
                  << " points within the 1e-15 guard band of the window boundary\n";
    auto uv = in_major_arc(alpha_real, MajorArcParams{Q, delta});
    if (uv)
        std::cout << "arc: major (u/v = " << uv->first << "/" << uv->second << ")\n";
    else if (major_arc_vmax(MajorArcParams{Q, delta}) == 0)
        std::cout << "arc: minor (major-arc family empty: 500 Q^2 delta > 1)\n";
    else
        std::cout << "arc: minor\n";
    return 0;
}

// --------------------------------------------------------------- verify

int cmd_verify(const std::string& suite) {
    std::vector<verify::Check> checks = verify::run_suite(suite);
    for (const verify::Check& c : checks) std::cout << verify::format_check(c) << "\n";
    bool ok = verify::all_pass(checks);
    std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << " (" << checks.size()
              << " checks)\n";
    return ok ? 0 : 1;
}

// -------------------------------------------------------- sieve-estimate

int cmd_sieve_estimate(int64_t b, int64_t r, int64_t Q, double delta, double R_opt,
                       double T) {
    BumpPair bumps = make_bumps();
    ChosenR cr = choose_R(Q, delta);
    double R = R_opt > 0.0 ? R_opt : cr.value;
    std::cout << "R = " << fmt_g17(R) << (R_opt > 0.0 ? " (given)" : " (Q^2 sqrt(delta))")
              << (R < 2.0 ? "  [warning: prime window likely empty]" : "") << "\n";

    SieveEstimate est = sieve_estimate_P(b, r, Q, delta, R, bumps);
    std::cout << "prime window P = " << est.P
              << (est.support_within_eP ? "" : "  [warning: support exceeds e^P]") << "\n";
    std::cout << "term1 = " << fmt_g17(est.term1) << "\nterm2 = " << fmt_g17(est.term2)
              << "\nestimate = " << fmt_g17(est.estimate) << "\n";

    double wc = weighted_count(b, r, Q, delta, bumps);
    CountResult cp = count_P(CountWindow::at(ReducedFraction(b, r), Q,
                                             std::min(2.0 * delta, 1.0)));
    std::cout << "weighted_count = " << fmt_g17(wc) << "\ncount_P(b/r, 2 delta) = "
              << cp.count << "\n";

    FourierTable ft(bumps, 1e-10);
    PairSumChain chain = pair_sum_chain(Q, delta, b, r, R, T, ft);
    std::cout << "pair-sum total = " << fmt_g17(chain.total) << " (tail "
              << fmt_g17(chain.tail) << ")\n";
    std::cout << "reference magnitudes: Q^4 d R = " << fmt_g17(chain.q4dR)
              << ", Q^2 d R^3 = " << fmt_g17(chain.q2dR3) << ", R^3 = " << fmt_g17(chain.R3)
              << ", Q^4 d / R = " << fmt_g17(chain.q4d_over_R)
              << ", final = " << fmt_g17(chain.final_combo) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sievelab: desk-scale large-sieve sums over square moduli"};
    app.require_subcommand(1);

    std::vector<int64_t> Qs{4};
    std::vector<int64_t> Ns{256};
    int64_t M = 0, trials = 1, Q_single = 4;
    uint64_t seed = 1;
    bool paired = false, reproducible = false;
    std::string seq = "ones", format = "csv", out_path, alpha_str = "0", mode = "point";
    double delta = 1e-3, Rv = 0.0, Tv = 64.0;
    int64_t b = 1, r = 3;
    std::string suite = "all";
    std::vector<std::string> bound_names = {"theorem1_min", "goal", "classical_q4",
                                            "per_modulus_sum"};

    auto add_grid_flags = [&](CLI::App* cmd) {
        cmd->add_option("--Q", Qs, "moduli bases (comma separated)")->delimiter(',');
        cmd->add_option("--N", Ns, "sequence lengths (comma separated)")->delimiter(',');
        cmd->add_flag("--paired", paired, "zip --Q and --N instead of crossing them");
        cmd->add_option("--M", M, "coefficient window offset");
        cmd->add_option("--seq", seq,
                        "sequence: ones | random_pm1 | point_mass:<beta> | file:<path>");
        cmd->add_option("--trials", trials, "trials per grid point")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed, "base seed; trial t uses seed + t");
        cmd->add_option("--format", format, "csv | json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out_path, "output path (default stdout)");
        cmd->add_flag("--reproducible", reproducible, "suppress the timestamp header line");
    };

    CLI::App* lhs_cmd = app.add_subcommand("lhs", "exact left-hand side per (Q, N, trial)");
    add_grid_flags(lhs_cmd);

    CLI::App* grid_cmd =
        app.add_subcommand("ratio-grid", "measured lhs/bound ratios over a grid");
    add_grid_flags(grid_cmd);
    grid_cmd->add_option("--bounds", bound_names,
                         "bound names: theorem1_min goal classical_q4 per_modulus_sum")
        ->delimiter(',');

    CLI::App* count_cmd =
        app.add_subcommand("count", "Farey point count near alpha, or its maximum");
    count_cmd->add_option("--alpha", alpha_str, "real number or exact fraction p/q");
    count_cmd->add_option("--Q", Q_single, "dyadic base: moduli Q < q <= 2Q");
    count_cmd->add_option("--delta", delta, "window half-width, 0 < delta <= 1");
    count_cmd->add_option("--mode", mode, "point | max")
        ->check(CLI::IsMember({"point", "max"}));

    CLI::App* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
    verify_cmd->add_option("suite", suite,
                           "identities | poisson | sieve | spacing | arcs | all");

    CLI::App* est_cmd = app.add_subcommand(
        "sieve-estimate", "square-sieve estimate and dual-side chain for one b/r");
    est_cmd->add_option("--b", b, "numerator");
    est_cmd->add_option("--r", r, "denominator (coprime to b)");
    est_cmd->add_option("--Q", Q_single, "dyadic base");
    est_cmd->add_option("--delta", delta, "window half-width");
    est_cmd->add_option("--R", Rv, "prime window base (default Q^2 sqrt(delta))");
    est_cmd->add_option("--T", Tv, "dual-side truncation threshold");

    std::string invocation;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) invocation += ' ';
        invocation += argv[i];
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (lhs_cmd->parsed())
            return cmd_lhs(Qs, Ns, paired, M, seq, trials, seed, format, out_path,
                           reproducible, invocation);
        if (grid_cmd->parsed())
            return cmd_ratio_grid(Qs, Ns, paired, M, seq, bound_names, trials, seed, format,
                                  out_path, reproducible, invocation);
        if (count_cmd->parsed()) return cmd_count(alpha_str, Q_single, delta, mode);
        if (verify_cmd->parsed()) return cmd_verify(suite);
        if (est_cmd->parsed()) return cmd_sieve_estimate(b, r, Q_single, delta, Rv, Tv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
