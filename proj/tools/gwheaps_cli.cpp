// gwheaps: command-line driver for the heap-sorting and particle-system experiments.
//
// Exit codes: 0 success, 1 invariant violation (check), 2 usage or validation error.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gwheaps/checks.hpp"
#include "gwheaps/errors.hpp"
#include "gwheaps/estimator.hpp"
#include "gwheaps/hammersley.hpp"
#include "gwheaps/heap_sorter.hpp"
#include "gwheaps/io.hpp"

namespace fs = std::filesystem;
using namespace gwheaps;

namespace {

constexpr std::uint64_t kDefaultSeed = 1;
constexpr std::size_t kForestMaxN = 100000;
constexpr const char* kOutputDirEnv = "GWHEAPS_OUTPUT_DIR";

struct Common {
    std::string mu = "dirac:2";
    std::uint64_t seed = kDefaultSeed;
    std::string out;
    int jobs = 0;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--mu", c.mu, "Offspring law: dirac:<k> | geom:<p> | pmf:<p1>,<p2>,...")->capture_default_str();
    cmd->add_option("--seed", c.seed, "Base seed; replica i uses seed+i")->capture_default_str();
    cmd->add_option("--out", c.out, std::string("Output directory (default: $") + kOutputDirEnv + " or .)");
    cmd->add_option("--jobs", c.jobs, "Replica threads, 0 = OpenMP default; outputs do not depend on it")
        ->capture_default_str();
}

fs::path output_dir(const Common& c) {
    fs::path dir = c.out;
    if (dir.empty()) {
        const char* env = std::getenv(kOutputDirEnv);
        dir = env != nullptr && *env != '\0' ? fs::path(env) : fs::path(".");
    }
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::string dump(const io::json& j) { return j.dump(2) + "\n"; }

/// Widths: comma list of numbers, `e<k>` / `e^<k>` for exp(k), or `e<i>..e<j>`.
std::vector<double> parse_widths(const std::string& text) {
    auto exponent_of = [&](std::string tok) -> std::optional<double> {
        if (tok.empty() || tok[0] != 'e') return std::nullopt;
        tok.erase(0, tok[1] == '^' ? 2 : 1);
        try {
            std::size_t used = 0;
            const double k = std::stod(tok, &used);
            if (used != tok.size()) throw ParseError("bad width '" + text + "'");
            return k;
        } catch (const std::logic_error&) {
            throw ParseError("bad width token in '" + text + "'");
        }
    };
    std::vector<double> out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (auto dots = tok.find(".."); dots != std::string::npos) {
            const auto lo = exponent_of(tok.substr(0, dots));
            const auto hi = exponent_of(tok.substr(dots + 2));
            if (!lo || !hi) throw ParseError("width range must look like e1..e5, got '" + tok + "'");
            for (int k = static_cast<int>(*lo); k <= static_cast<int>(*hi); ++k) out.push_back(window_edge(k));
        } else if (auto k = exponent_of(tok)) {
            out.push_back(std::exp(*k));
        } else {
            try {
                std::size_t used = 0;
                out.push_back(std::stod(tok, &used));
                if (used != tok.size()) throw ParseError("bad width '" + tok + "'");
            } catch (const std::logic_error&) {
                throw ParseError("bad width '" + tok + "'");
            }
        }
    }
    if (out.empty()) throw ParseError("no widths given");
    return out;
}

// ---------------------------------------------------------------- sort

struct SortArgs {
    Common common;
    std::size_t n = 1000;
    std::string sequence_file;
    std::size_t forest_max_n = kForestMaxN;
};

int cmd_sort(const SortArgs& args) {
    std::vector<SequenceItem> sequence;
    if (!args.sequence_file.empty()) {
        std::ifstream in(args.sequence_file);
        if (!in) throw ParseError("cannot read sequence file " + args.sequence_file);
        sequence = io::read_sequence_csv(in);
    } else {
        if (args.n < 1) throw DomainError("--n must be >= 1");
        sequence = generate_sequence(parse_spec(args.common.mu), args.n, args.common.seed);
    }
    const auto dir = output_dir(args.common);
    SortTrace trace;
    const bool keep_forest = sequence.size() <= args.forest_max_n;
    if (keep_forest) {
        auto result = run(sequence);
        write_file(dir / "forest.json", dump(io::forest_to_json(result.forest)));
        trace = std::move(result.trace);
    } else {
        trace.r_values = count_trees_all(sequence);
    }
    std::ostringstream csv;
    io::write_trace_csv(csv, trace);
    write_file(dir / "trace.csv", csv.str());
    std::ostringstream seq;
    io::write_sequence_csv(seq, sequence);
    write_file(dir / "sequence.csv", seq.str());
    const auto r = trace.r_values.empty() ? 0 : trace.r_values.back();
    std::cout << "n=" << sequence.size() << " R(n)=" << r << (keep_forest ? "" : " (trace only)") << '\n';
    return 0;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
    Common common;
    double a = 0.0;
    double b = 1.0;
    double horizon = 1.0;
    bool svg = false;
    int width_px = 1200;
    int height_px = 600;
};

int cmd_simulate(const SimulateArgs& args) {
    const auto field = sample_field(args.a, args.b, args.horizon, parse_spec(args.common.mu), args.common.seed);
    const auto rep = simulate(field);
    const auto dir = output_dir(args.common);
    write_file(dir / "rep.json", dump(io::rep_to_json(rep)));
    write_file(dir / "atoms.csv", atoms_csv(field));
    if (args.svg) write_file(dir / "rep.svg", render_svg(rep, field, args.width_px, args.height_px));
    std::cout << "atoms=" << field.size() << " roots=" << count_roots(rep, 0.0, rep.horizon) << '\n';
    return 0;
}

// ---------------------------------------------------------------- estimate

struct EstimateArgs {
    Common common;
    std::string method = "slope";
    std::size_t n = 100000;
    std::string widths = "e1..e5";
    std::size_t replicas = 30;
    bool uncoupled = false;
    double window_lo = 1.0;
    double window_hi = std::numbers::e;
};

int cmd_estimate(const EstimateArgs& args) {
    const auto dist = parse_spec(args.common.mu);
    const auto dir = output_dir(args.common);
    if (args.method == "strip") {
        const auto e = estimate_r_inf(dist, parse_widths(args.widths), args.replicas, args.common.seed,
                                      !args.uncoupled, args.window_lo, args.window_hi, args.common.jobs);
        write_file(dir / "estimate.json", dump(io::to_json(e)));
        write_file(dir / "estimate.csv", io::to_csv(e));
        write_file(dir / "estimate_replicas.csv", io::replicas_csv(e));
        for (const auto& x : e.estimates) {
            std::cout << "W=" << io::fmt17(x.n_or_width) << " mean=" << x.point << " ci=[" << x.ci_low << ","
                      << x.ci_high << "]\n";
        }
        return 0;
    }
    const auto e = estimate_c_discrete(dist, args.n, args.replicas, args.common.seed, args.common.jobs);
    auto j = io::to_json(e);
    const bool ratio = args.method == "ratio";
    j["selected"] = ratio ? "ratio" : "slope";
    write_file(dir / "estimate.json", dump(j));
    write_file(dir / "estimate.csv", io::to_csv(e));
    const auto& pick = ratio ? e.ratio : e.slope;
    std::cout << method_name(pick.method) << " point=" << pick.point << " ci=[" << pick.ci_low << "," << pick.ci_high
              << "]\n";
    if (e.warning && ratio) std::cerr << "warning: " << *e.warning << '\n';
    return 0;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
    Common common;
    std::string suite;
    std::size_t trials = 100;
    std::size_t ulam_n = 10000;
    double horizon = 50.0;
};

int cmd_check(const CheckArgs& args) {
    checks::CheckOptions opt;
    opt.trials = args.trials;
    opt.seed = args.common.seed;
    opt.mu_spec = args.common.mu;
    opt.ulam_n = args.ulam_n;
    opt.horizon = args.horizon;
    const auto suite = checks::parse_suite(args.suite);
    parse_spec(opt.mu_spec);
    const auto result = checks::run_suite(suite, opt);
    std::cout << checks::suite_name(suite) << ": " << result.passed << "/" << result.trials << " trials passed -> "
              << (result.ok() ? "PASS" : "FAIL") << '\n';
    if (result.ok()) return 0;

    const auto& cx = *result.counterexample;
    const auto dir = output_dir(args.common);
    io::json meta = {{"suite", checks::suite_name(suite)}, {"trial", cx.trial},       {"seed", cx.seed},
                     {"mu", opt.mu_spec},                  {"description", cx.description}};
    if (!cx.sequence.empty()) {
        std::ostringstream seq;
        io::write_sequence_csv(seq, cx.sequence);
        write_file(dir / "counterexample_sequence.csv", seq.str());
    }
    if (cx.field) {
        write_file(dir / "counterexample_field.csv", atoms_csv(*cx.field));
        meta["field"] = {{"a", cx.field->a()}, {"b", cx.field->b()}, {"horizon", cx.field->horizon()}};
    }
    if (cx.rep) write_file(dir / "counterexample_rep.json", dump(io::rep_to_json(*cx.rep)));
    write_file(dir / "counterexample.json", dump(meta));
    std::cerr << "counterexample (trial " << cx.trial << ", seed " << cx.seed << "): " << cx.description << '\n';
    return 1;
}

// ---------------------------------------------------------------- diagnose

struct DiagnoseArgs {
    Common common;
    std::string kind;
    double width = std::exp(6.0);
    int i_min = 1;
    int i_max = 4;
    int lag_max = 3;
    std::size_t replicas = 100;
    double a = 0.0;
    double b = 5.0;
    double horizon = 5.0;
    double c = std::numbers::e;
    std::size_t ks_pairs = 1000;
    std::size_t n_max = 1000000;
    int per_decade = 10;
};

int cmd_diagnose(const DiagnoseArgs& args) {
    const auto dist = parse_spec(args.common.mu);
    const auto dir = output_dir(args.common);
    if (args.kind == "stationarity") {
        const auto r = stationarity_report(dist, args.width, args.i_min, args.i_max, args.replicas, args.common.seed,
                                           args.common.jobs);
        write_file(dir / "stationarity.json", dump(io::to_json(r)));
        write_file(dir / "stationarity.csv", io::to_csv(r));
        std::cout << "max |z| = " << r.max_abs_z << '\n';
    } else if (args.kind == "decorrelation") {
        const auto r = decorrelation_report(dist, args.width, args.i_min, args.lag_max, args.replicas,
                                            args.common.seed, args.common.jobs);
        write_file(dir / "decorrelation.json", dump(io::to_json(r)));
        write_file(dir / "decorrelation.csv", io::to_csv(r));
    } else if (args.kind == "scaling") {
        const auto r = scaling_check(dist, args.a, args.b, args.horizon, args.c, args.common.seed, args.ks_pairs,
                                     args.common.jobs);
        write_file(dir / "scaling.json", dump(io::to_json(r)));
        std::cout << "coupling " << (r.coupling.equal ? "equal" : "DIFFERENT") << ", KS " << r.ks_statistic << " < "
                  << r.ks_threshold << (r.ks_pass ? "" : " FAILED") << '\n';
        return r.pass ? 0 : 1;
    } else if (args.kind == "trajectory") {
        const auto s = trajectory(dist, args.n_max, args.per_decade, args.common.seed);
        write_file(dir / "trajectory.json", dump(io::to_json(s)));
        write_file(dir / "trajectory.csv", io::to_csv(s));
        std::cout << "final-decade spread " << final_decade_spread(s) << '\n';
    } else {
        throw ParseError("unknown diagnostic kind '" + args.kind + "'");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galton-Watson heap sorting and Hammersley tree process experiments.\n"
                 "Default seed is " + std::to_string(kDefaultSeed) + "; identical arguments give identical files."};
    app.require_subcommand(1);

    SortArgs sort_args;
    auto* sort = app.add_subcommand("sort", "Sort a random or given sequence into heaps; writes trace.csv, sequence.csv, forest.json");
    add_common(sort, sort_args.common);
    sort->add_option("--n", sort_args.n, "Sequence length")->capture_default_str();
    sort->add_option("--sequence-file", sort_args.sequence_file, "CSV `label,capacity` to replay instead of sampling");
    sort->add_option("--forest-max-n", sort_args.forest_max_n, "forest.json is skipped above this length")
        ->capture_default_str();

    SimulateArgs sim_args;
    auto* sim = app.add_subcommand("simulate", "Simulate the particle system on a strip; writes rep.json, atoms.csv, rep.svg");
    add_common(sim, sim_args.common);
    sim->add_option("--a", sim_args.a, "Left strip bound")->capture_default_str();
    sim->add_option("--b", sim_args.b, "Right strip bound")->capture_default_str();
    sim->add_option("--horizon", sim_args.horizon, "Time horizon")->capture_default_str();
    sim->add_flag("--svg", sim_args.svg, "Also write rep.svg");
    sim->add_option("--width-px", sim_args.width_px)->capture_default_str();
    sim->add_option("--height-px", sim_args.height_px)->capture_default_str();

    EstimateArgs est_args;
    auto* est = app.add_subcommand("estimate", "Monte Carlo estimates of the growth constant; writes estimate.json, estimate.csv");
    add_common(est, est_args.common);
    est->add_option("--method", est_args.method, "ratio | slope | strip")
        ->check(CLI::IsMember({"ratio", "slope", "strip"}))
        ->capture_default_str();
    est->add_option("--n", est_args.n, "Sequence length for ratio/slope")->capture_default_str();
    est->add_option("--widths", est_args.widths, "Strip widths: numbers, e<k>, or e<i>..e<j>")->capture_default_str();
    est->add_option("--replicas", est_args.replicas, "Independent replicas (>= 2)")->capture_default_str();
    est->add_flag("--uncoupled", est_args.uncoupled, "Sample each strip width independently");
    est->add_option("--window-lo", est_args.window_lo)->capture_default_str();
    est->add_option("--window-hi", est_args.window_hi)->capture_default_str();

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Run a coupling/oracle suite; exit 1 with counterexample files on failure");
    add_common(check, check_args.common);
    check->add_option("--suite", check_args.suite, "optimality | ulam | scaling | monotonicity | restriction | timechange")
        ->required();
    check->add_option("--trials", check_args.trials)->capture_default_str();
    check->add_option("--ulam-n", check_args.ulam_n, "Sequence length for the ulam suite")->capture_default_str();
    check->add_option("--horizon", check_args.horizon, "Box height for the timechange suite")->capture_default_str();

    DiagnoseArgs diag_args;
    auto* diag = app.add_subcommand("diagnose", "Stationarity, decorrelation, scaling and trajectory reports");
    add_common(diag, diag_args.common);
    diag->add_option("--kind", diag_args.kind, "stationarity | decorrelation | scaling | trajectory")->required();
    diag->add_option("--width", diag_args.width, "Strip width")->capture_default_str();
    diag->add_option("--i-min", diag_args.i_min)->capture_default_str();
    diag->add_option("--i-max", diag_args.i_max)->capture_default_str();
    diag->add_option("--lag-max", diag_args.lag_max)->capture_default_str();
    diag->add_option("--replicas", diag_args.replicas)->capture_default_str();
    diag->add_option("--a", diag_args.a)->capture_default_str();
    diag->add_option("--b", diag_args.b)->capture_default_str();
    diag->add_option("--horizon", diag_args.horizon)->capture_default_str();
    diag->add_option("--c", diag_args.c, "Scale factor")->capture_default_str();
    diag->add_option("--ks-pairs", diag_args.ks_pairs)->capture_default_str();
    diag->add_option("--n-max", diag_args.n_max)->capture_default_str();
    diag->add_option("--per-decade", diag_args.per_decade)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*sort) return cmd_sort(sort_args);
        if (*sim) return cmd_simulate(sim_args);
        if (*est) return cmd_estimate(est_args);
        if (*check) return cmd_check(check_args);
        if (*diag) return cmd_diagnose(diag_args);
    } catch (const std::invalid_argument& e) {  // ParseError, ValidationError
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
