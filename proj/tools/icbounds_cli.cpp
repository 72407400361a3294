// Command-line front end: computes outer/inner regions, cross-sections,
// one-bit-gap certifications, layered random-coding regions and lattice
// verifications, and serializes them as JSON or CSV.
//
// Exit codes: 0 success (including the trivial certification case),
// 1 certification failures, 2 configuration errors, 3 precondition
// violations.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "icbounds/appendix.hpp"
#include "icbounds/certify.hpp"
#include "icbounds/lattice.hpp"
#include "icbounds/outer.hpp"
#include "icbounds/rng.hpp"
#include "icbounds/serialize.hpp"
#include "icbounds/side_info.hpp"

namespace {

constexpr uint64_t kDefaultSeed = 20240901;

struct CommonArgs {
    int type = 1;
    double power = 100.0;
    std::vector<double> noise{1.0, 4.0, 16.0};
    uint64_t seed = kDefaultSeed;
    std::string out_path;
    std::string format;  // resolved at dispatch: csv for cross-section
};

void add_channel_flags(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--type", args.type, "channel type (1-5)")
        ->check(CLI::Range(1, 5));
    cmd->add_option("--power", args.power, "transmit power P (linear)");
    cmd->add_option("--noise", args.noise,
                    "noise variances N1,N2,N3 (linear)")
        ->delimiter(',')
        ->expected(3);
    cmd->add_option("--seed", args.seed, "rng seed");
    cmd->add_option("--output", args.out_path,
                    "output file (default stdout; relative paths resolve "
                    "against $ICBOUNDS_OUT_DIR when set)");
    cmd->add_option("--out", args.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
}

icb::ChannelParams make_params(const CommonArgs& args) {
    return icb::ChannelParams(args.power,
                              {args.noise[0], args.noise[1], args.noise[2]});
}

void write_output(const CommonArgs& args, const std::string& text) {
    if (args.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::string path = args.out_path;
    const char* dir = std::getenv("ICBOUNDS_OUT_DIR");
    if (dir && dir[0] != '\0' && path.front() != '/') {
        path = std::string(dir) + "/" + path;
    }
    std::ofstream out(path);
    if (!out) throw icb::ConfigError("cannot open output file: " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"capacity-region bounds for partially connected three-user "
                 "Gaussian interference channels"};
    app.require_subcommand(1);

    CommonArgs args;

    auto* outer = app.add_subcommand(
        "outer", "exact and relaxed outer bound constraint rows");
    add_channel_flags(outer, args);

    auto* inner = app.add_subcommand(
        "inner", "achievable corner cloud over an alpha grid");
    add_channel_flags(inner, args);
    int inner_grid = 64;
    inner->add_option("--grid", inner_grid, "alpha grid points per axis");

    auto* cross = app.add_subcommand(
        "cross-section", "2-D cross-section of the relaxed outer bound");
    add_channel_flags(cross, args);
    int cs_axis = 2;
    double cs_value = 0.0;
    cross->add_option("--axis", cs_axis, "fixed axis (1-3)")
        ->check(CLI::Range(1, 3));
    cross->add_option("--value", cs_value, "fixed rate in bits")->required();

    auto* certify = app.add_subcommand(
        "certify", "one-bit gap certification against the exact outer bound");
    add_channel_flags(certify, args);
    int cert_samples = 2000;
    int cert_grid = 64;
    certify->add_option("--samples", cert_samples, "boundary samples");
    certify->add_option("--grid", cert_grid, "alpha grid points per axis");

    auto* deltas = app.add_subcommand(
        "deltas", "per-section gap constants at the witness power splits");
    add_channel_flags(deltas, args);

    auto* graph = app.add_subcommand(
        "graph-bounds", "acyclic-subset sum-rate bounds from the side "
                        "information graph");
    add_channel_flags(graph, args);

    auto* appendix = app.add_subcommand(
        "appendix", "layered random-coding region and closed-form inclusion "
                    "(types 4 and 5)");
    add_channel_flags(appendix, args);

    auto* lattice = app.add_subcommand(
        "lattice-verify", "randomized checks of the lattice algebra and the "
                          "effective-noise variance");
    int trials = 10000;
    int dim = 8;
    lattice->add_option("--trials", trials, "randomized instances per check");
    lattice->add_option("--dim", dim, "vector lattice dimension");
    lattice->add_option("--seed", args.seed, "rng seed");
    lattice->add_option("--output", args.out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (args.format.empty()) {
            args.format = app.got_subcommand(cross) ? "csv" : "json";
        }
        if (args.format == "csv" && !app.got_subcommand(cross)) {
            throw icb::ConfigError("csv output exists only for cross-section");
        }
        if (app.got_subcommand(outer)) {
            const auto params = make_params(args);
            const auto t = icb::channel_type_from_int(args.type);
            const auto set = icb::outer_bound_set(t, params);
            write_output(args,
                         icb::dump_json(icb::outer_set_to_json(set, params,
                                                               args.seed)));
        } else if (app.got_subcommand(inner)) {
            const auto params = make_params(args);
            const auto t = icb::channel_type_from_int(args.type);
            icb::GridSpec grid;
            grid.points_per_axis = inner_grid;
            const auto region = icb::inner_region(t, params, grid);
            write_output(args, icb::dump_json(icb::inner_region_to_json(
                                   t, params, region, grid, args.seed)));
        } else if (app.got_subcommand(cross)) {
            const auto params = make_params(args);
            const auto t = icb::channel_type_from_int(args.type);
            const auto cs =
                icb::outer_cross_section(t, params, cs_axis, cs_value);
            if (args.format == "csv") {
                write_output(args, icb::cross_section_to_csv(cs));
            } else {
                write_output(args, icb::dump_json(icb::cross_section_to_json(
                                       t, params, cs, args.seed)));
            }
        } else if (app.got_subcommand(certify)) {
            const auto params = make_params(args);
            const auto t = icb::channel_type_from_int(args.type);
            icb::CertOptions opts;
            opts.samples = cert_samples;
            opts.grid.points_per_axis = cert_grid;
            opts.seed = args.seed;
            const auto rep = icb::certify(t, params, opts);
            write_output(args, icb::dump_json(icb::cert_report_to_json(rep)));
            if (!rep.trivial_case && !rep.passed()) return 1;
        } else if (app.got_subcommand(deltas)) {
            const auto params = make_params(args);
            const auto t = icb::channel_type_from_int(args.type);
            const auto entries = icb::delta_report(t, params);
            write_output(args, icb::dump_json(icb::delta_report_to_json(
                                   t, params, entries)));
        } else if (app.got_subcommand(graph)) {
            const auto params = make_params(args);
            const auto t = icb::channel_type_from_int(args.type);
            const auto region =
                icb::theorem1_region(icb::side_info_graph(t), params);
            write_output(args,
                         icb::dump_json(icb::region_to_json(t, params, region,
                                                            args.seed)));
        } else if (app.got_subcommand(appendix)) {
            const auto params = make_params(args);
            const auto t = icb::channel_type_from_int(args.type);
            const auto layered = icb::appendix_rates(t, params);
            const auto closed = icb::appendix_closed_form(t, params);
            const auto inclusion = icb::check_inclusion(layered, closed);
            write_output(args, icb::dump_json(icb::layered_to_json(
                                   layered, params, inclusion, args.seed)));
        } else if (app.got_subcommand(lattice)) {
            // Lemma suite on scalar and vector lattices plus the MMSE
            // effective-noise Monte Carlo, summarized as JSON.
            int lemma_failures = 0;
            for (int n : {1, dim}) {
                const icb::NestedChain chain(1.0, 4.0, 12.0, n);
                for (int i = 0; i < trials; ++i) {
                    icb::Rng rng(args.seed, static_cast<uint64_t>(i) * 2 +
                                                (n == 1 ? 0 : 1));
                    icb::Vec t11(static_cast<size_t>(n)), t3(t11), d11(t11),
                        d3(t11);
                    for (int k = 0; k < n; ++k) {
                        t11[static_cast<size_t>(k)] =
                            std::floor(rng.uniform(-50.0, 50.0));
                        t3[static_cast<size_t>(k)] =
                            std::floor(rng.uniform(-50.0, 50.0));
                        d11[static_cast<size_t>(k)] = rng.uniform(-2.0, 2.0);
                        d3[static_cast<size_t>(k)] = rng.uniform(-6.0, 6.0);
                    }
                    if (!icb::lemma1_check(chain, t11, t3, d11, d3)) {
                        ++lemma_failures;
                    }
                    if (!icb::lemma3_check(chain, t11, t3, d11, d3)) {
                        ++lemma_failures;
                    }
                    icb::Vec x(static_cast<size_t>(n));
                    for (auto& v : x) v = rng.uniform(-100.0, 100.0);
                    if (!icb::lemma2_check(chain.shape1(), chain.shape3(), x)) {
                        ++lemma_failures;
                    }
                }
            }
            nlohmann::json mc = nlohmann::json::array();
            for (auto [S, N] : std::vector<std::pair<double, double>>{
                     {1.0, 1.0}, {100.0, 4.0}, {1000.0, 1.0}}) {
                const double est =
                    icb::effective_noise_mc(S, N, 100000, args.seed);
                const double expect = S * N / (S + N);
                mc.push_back(nlohmann::json{
                    {"S", S},
                    {"N", N},
                    {"estimate", icb::round_sig(est)},
                    {"expected", icb::round_sig(expect)},
                    {"rel_err", icb::round_sig(std::abs(est - expect) /
                                               expect)}});
            }
            const nlohmann::json j{{"trials", trials},
                                   {"dims", nlohmann::json::array({1, dim})},
                                   {"lemma_failures", lemma_failures},
                                   {"effective_noise", mc},
                                   {"meta", icb::meta_json(args.seed)}};
            write_output(args, icb::dump_json(j));
            if (lemma_failures > 0) return 1;
        }
    } catch (const icb::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const icb::PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
