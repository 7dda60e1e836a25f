// Copyright (c) 2026 the nrange authors
//
// Licensed under the Apache License, Version 2.0; you may not use this file
// except in compliance with the License. You may obtain a copy of the
// License at http://www.apache.org/licenses/LICENSE-2.0

#include "nrange/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <ostream>
#include <sstream>

#include "nrange/cnum.hpp"
#include "nrange/dilation.hpp"
#include "nrange/errors.hpp"
#include "nrange/io.hpp"
#include "nrange/linalg.hpp"
#include "nrange/parallel.hpp"
#include "nrange/rank_k.hpp"
#include "nrange/verify.hpp"

namespace nrange {

namespace {

struct CliState {
    JobConfig job;
    int shift_n = 0;          // range/oracle: build the n-dimensional shift
    int oracle_n = 0, oracle_k = 1;
    std::string weights;      // cnum: comma-separated reals
    int samples = 1000;
    std::string kind = "halmos"; // dilate
    double theta = 0.0;
    std::string lambda_spec;  // dilate prescribed: "re,im" or "re,im:mult;..."
    std::string eigs_spec;    // verify normal: "re,im;re,im;..."
    std::string generator = "diag-harmonic"; // verify trunc
    int n_max = 32;
    int n_trunc = 40;
    std::string k_list = "1,2,3";
    int threads = 0;
};

RankIndex parse_rank(const std::string& spec) {
    if (spec == "inf") return RankIndex::inf();
    try {
        std::size_t consumed = 0;
        const int k = std::stoi(spec, &consumed);
        if (consumed == spec.size() && k >= 1) return RankIndex::finite(k);
    } catch (...) {
    }
    throw Error(ErrorCode::InvalidArgument, "--k must be a positive integer or \"inf\"");
}

std::vector<Complex> parse_complex_list(const std::string& spec) {
    std::vector<Complex> out;
    std::stringstream stream(spec);
    std::string item;
    while (std::getline(stream, item, ';')) {
        if (item.empty()) continue;
        double re = 0, im = 0;
        if (std::sscanf(item.c_str(), "%lf,%lf", &re, &im) != 2)
            throw Error(ErrorCode::ParseError, "expected \"re,im\" but got \"" + item + "\"");
        out.emplace_back(re, im);
    }
    if (out.empty()) throw Error(ErrorCode::ParseError, "empty complex list");
    return out;
}

std::vector<double> parse_real_list(const std::string& spec) {
    std::vector<double> out;
    std::stringstream stream(spec);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stod(item));
        } catch (...) {
            throw Error(ErrorCode::ParseError, "bad number \"" + item + "\"");
        }
    }
    if (out.empty()) throw Error(ErrorCode::ParseError, "empty list");
    return out;
}

std::vector<int> parse_int_list(const std::string& spec) {
    std::vector<int> out;
    for (double v : parse_real_list(spec)) out.push_back(static_cast<int>(v));
    return out;
}

ComplexMatrix require_matrix(const MatrixOrModel& input) {
    if (const auto* M = std::get_if<ComplexMatrix>(&input)) return *M;
    throw Error(ErrorCode::InvalidArgument, "this command needs a matrix input");
}

ComplexMatrix load_matrix(const CliState& state) {
    if (state.shift_n >= 2) return shift_matrix(state.shift_n);
    if (state.job.input_path.empty())
        throw Error(ErrorCode::InvalidArgument, "provide --input FILE or --shift N");
    return require_matrix(parse_matrix_file(state.job.input_path));
}

void write_region_artifacts(const CliState& state, const ConvexRegion& region,
                            bool unit_circle, std::ostream& out) {
    const std::string& prefix = state.job.output;
    const bool narrowed = state.job.format.has_value();
    const std::string fmt = state.job.format.value_or("");
    if (!narrowed || fmt == "csv") {
        write_file(prefix + ".csv", region_to_csv(region));
        out << "wrote " << prefix << ".csv\n";
    }
    if (!narrowed || fmt == "svg") {
        SvgOptions svg;
        svg.unit_circle = unit_circle;
        write_file(prefix + ".svg", region_to_svg(region, svg));
        out << "wrote " << prefix << ".svg\n";
    }
    if (fmt == "json") {
        write_file(prefix + ".json", region_to_json(region));
        out << "wrote " << prefix << ".json\n";
    }
}

int run_range(const CliState& state, std::ostream& out) {
    const RankIndex rank = parse_rank(state.job.k_spec);
    MatrixOrModel input = state.shift_n >= 2
                              ? MatrixOrModel(shift_matrix(state.shift_n))
                              : parse_matrix_file(state.job.input_path);
    ConvexRegion region;
    bool unit_circle = false;
    if (const auto* M = std::get_if<ComplexMatrix>(&input)) {
        if (rank.infinite) {
            region = omega_inf(*M, state.job.grid);
        } else {
            region = omega_region(*M, rank.k, state.job.grid);
        }
        unit_circle = is_contraction(*M);
    } else {
        region = spectral_V_k(std::get<SpectralModel>(input), rank, state.job.grid);
        unit_circle = true;
    }
    write_region_artifacts(state, region, unit_circle, out);
    return 0;
}

int run_oracle(const CliState& state, std::ostream& out) {
    const ConvexRegion region = shift_oracle(state.oracle_n, state.oracle_k, state.job.grid);
    write_region_artifacts(state, region, true, out);
    return 0;
}

int run_cnum(const CliState& state, std::ostream& out) {
    if (state.weights.empty())
        throw Error(ErrorCode::InvalidArgument, "--weights is required for cnum");
    const CWeights c = CWeights::from_real(parse_real_list(state.weights));
    const ComplexMatrix A = load_matrix(state);
    const std::string& prefix = state.job.output;

    const std::vector<Complex> cloud = c_sampled(c, A, state.samples, state.job.seed);
    write_file(prefix + ".cloud.csv", points_to_csv(cloud));
    out << "wrote " << prefix << ".cloud.csv\n";

    if (c.sorted_real()) {
        const ConvexRegion region = c_region(c, A, state.job.grid);
        write_file(prefix + ".region.csv", region_to_csv(region));
        SvgOptions svg;
        svg.unit_circle = is_contraction(A);
        write_file(prefix + ".region.svg", region_to_svg(region, svg));
        out << "wrote " << prefix << ".region.csv\n";
        out << "wrote " << prefix << ".region.svg\n";
        if ((A - A.adjoint()).norm() <= 1e-10 * std::max(1.0, A.norm())) {
            const auto [alpha, beta] = c_interval_hermitian(c, A);
            write_file(prefix + ".interval.json",
                       "{\"alpha\":" + format_double(alpha) + ",\"beta\":" +
                           format_double(beta) + "}");
            out << "wrote " << prefix << ".interval.json\n";
        }
    }
    return 0;
}

int run_dilate(const CliState& state, std::ostream& out) {
    const ComplexMatrix A = load_matrix(state);
    const std::string& prefix = state.job.output;
    Rng rng = make_rng(state.job.seed);
    std::string payload;

    if (state.kind == "halmos") {
        const ComplexMatrix U = halmos_dilation(A);
        payload = dilation_to_json(DilationKind::Halmos, U, {},
                                   {{"unitarity", (U.adjoint() * U -
                                                   ComplexMatrix::Identity(U.rows(), U.rows()))
                                                      .norm()}});
    } else if (state.kind == "family") {
        const ComplexMatrix Uo = haar_unitary(static_cast<int>(A.rows()), rng);
        const ComplexMatrix U = dilation_from_parameter(A, Uo);
        payload = dilation_to_json(DilationKind::FamilyUo, U, {{"Uo", Uo}},
                                   {{"unitarity", (U.adjoint() * U -
                                                   ComplexMatrix::Identity(U.rows(), U.rows()))
                                                      .norm()}});
    } else if (state.kind == "minimal") {
        const int d = defect_data(A).defect_rank;
        const ComplexMatrix V =
            d > 0 ? haar_unitary(d, rng) : ComplexMatrix::Identity(0, 0);
        const ComplexMatrix W =
            d > 0 ? haar_unitary(d, rng) : ComplexMatrix::Identity(0, 0);
        const ComplexMatrix U = minimal_dilation(A, V, W);
        payload = dilation_to_json(DilationKind::MinimalVW, U, {{"V", V}, {"W", W}},
                                   {{"unitarity", (U.adjoint() * U -
                                                   ComplexMatrix::Identity(U.rows(), U.rows()))
                                                      .norm()}});
    } else if (state.kind == "extremal") {
        const RankIndex rank = parse_rank(state.job.k_spec);
        if (rank.infinite) throw Error(ErrorCode::InvalidArgument, "extremal needs finite k");
        ExtremalOptions options;
        options.restarts = state.job.budget;
        options.seed = state.job.seed;
        const ExtremalResult result = extremal_dilation(A, rank.k, state.theta, options);
        payload = dilation_to_json(DilationKind::MinimalVW, result.U,
                                   {{"V", result.V}, {"W", result.W}},
                                   {{"gap", result.gap},
                                    {"converged", result.converged ? 1.0 : 0.0}});
    } else if (state.kind == "prescribed") {
        if (state.lambda_spec.empty())
            throw Error(ErrorCode::InvalidArgument, "--lambda is required for prescribed");
        EigenvaluePrescription prescription;
        const int N = defect_data(A).defect_rank;
        std::stringstream stream(state.lambda_spec);
        std::string item;
        while (std::getline(stream, item, ';')) {
            if (item.empty()) continue;
            double re = 0, im = 0;
            int mult = 0;
            if (std::sscanf(item.c_str(), "%lf,%lf:%d", &re, &im, &mult) == 3) {
                prescription.targets.push_back({Complex(re, im), mult});
            } else if (std::sscanf(item.c_str(), "%lf,%lf", &re, &im) == 2) {
                prescription.targets.push_back({Complex(re, im), N});
            } else {
                throw Error(ErrorCode::ParseError, "bad --lambda item \"" + item + "\"");
            }
        }
        NDilationOptions options;
        options.restarts = state.job.budget;
        options.seed = state.job.seed;
        const NDilationResult result = prescribed_eigenvalue_ndilation(A, prescription, options);
        std::vector<std::pair<std::string, double>> residuals = {
            {"converged", result.converged ? 1.0 : 0.0}};
        for (std::size_t j = 0; j < result.residuals.size(); ++j)
            residuals.push_back({"target_" + std::to_string(j), result.residuals[j]});
        payload = dilation_to_json(DilationKind::MinimalVW, result.U,
                                   {{"V", result.V}, {"W", result.W}}, residuals);
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown dilation kind " + state.kind);
    }

    write_file(prefix + ".dilation.json", payload);
    out << "wrote " << prefix << ".dilation.json\n";
    return 0;
}

int finish_verify(const CliState& state, const VerifyReport& report, std::ostream& out,
                  std::ostream& err) {
    const std::string& prefix = state.job.output;
    // Timing goes to the log, not the artifact: output files must be
    // byte-identical across runs for a fixed seed.
    VerifyReport stable = report;
    stable.runtime_ms = 0;
    write_file(prefix + ".report.json", report_to_json(stable));
    out << "wrote " << prefix << ".report.json\n";
    if (!report.per_direction.empty()) {
        write_file(prefix + ".gaps.csv", report_to_csv(report));
        out << "wrote " << prefix << ".gaps.csv\n";
    }
    out << (report.passed ? "PASSED" : "FAILED") << " " << report.theorem_id << " ("
        << report.runtime_ms << " ms)\n";
    if (!report.passed) {
        err << error_to_json("VerificationFailed", report.theorem_id + ": " + report.instance)
            << "\n";
        return 1;
    }
    return 0;
}

int run_verify(const CliState& state, bool grid_given, std::ostream& out,
               std::ostream& err) {
    HarnessOptions options;
    options.grid_size = grid_given ? state.job.grid : 90; // harness default
    options.budget = state.job.budget;
    options.seed = state.job.seed;

    const std::string& mode = state.job.verify_mode;
    if (mode == "glw") {
        const RankIndex rank = parse_rank(state.job.k_spec);
        if (rank.infinite) throw Error(ErrorCode::InvalidArgument, "glw needs finite k");
        return finish_verify(state, verify_glw(load_matrix(state), rank.k, options), out, err);
    }
    if (mode == "bt") {
        const RankIndex rank = parse_rank(state.job.k_spec);
        if (rank.infinite) throw Error(ErrorCode::InvalidArgument, "bt needs finite k");
        return finish_verify(state, verify_bt(load_matrix(state), rank.k, options), out, err);
    }
    if (mode == "trunc") {
        const RankIndex rank = parse_rank(state.job.k_spec);
        OperatorGenerator gen;
        if (state.generator == "diag-harmonic") {
            gen = OperatorGenerator::diagonal([](int m) { return Complex(1.0 - 1.0 / m, 0.0); });
        } else if (state.generator == "unit-shift") {
            gen = OperatorGenerator::weighted_shift([](int) { return Complex(1.0, 0.0); });
        } else if (state.generator == "example-blocks") {
            gen = OperatorGenerator::block_direct_sum([](int j) {
                const int n = j + 1;
                ComplexMatrix block = ComplexMatrix::Zero(2, 2);
                block(0, 0) = Complex(-1.0 / n, 0.0);
                block(1, 1) = std::polar(1.0 / n, M_PI / n);
                return block;
            });
        } else {
            throw Error(ErrorCode::InvalidArgument, "unknown generator " + state.generator);
        }
        return finish_verify(state, truncation_convergence(gen, rank.k, state.n_max), out, err);
    }
    if (mode == "normal") {
        const RankIndex rank = parse_rank(state.job.k_spec);
        std::vector<Complex> eigs;
        if (!state.eigs_spec.empty()) {
            eigs = parse_complex_list(state.eigs_spec);
        } else {
            const ComplexMatrix M = load_matrix(state);
            for (Eigen::Index j = 0; j < M.rows(); ++j) eigs.push_back(M(j, j));
        }
        return finish_verify(state, verify_normal_equivalence(eigs, rank.k, state.job.grid),
                             out, err);
    }
    if (mode == "cnum-gap") {
        return finish_verify(state, counterexample_gap(state.samples, state.job.seed), out,
                             err);
    }
    if (mode == "inf-example") {
        return finish_verify(
            state,
            example_counterexample_inf(parse_int_list(state.k_list), state.n_trunc, options),
            out, err);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown verify mode " + mode);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliState state;
    CLI::App app{"higher-rank numerical ranges and unitary dilations"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may appear after the subcommand
    app.add_option("--threads", state.threads,
                   "worker threads (default: machine parallelism, env NRANGE_THREADS)");

    std::vector<CLI::Option*> grid_options;
    auto add_common = [&](CLI::App* cmd, bool with_k) {
        grid_options.push_back(
            cmd->add_option("--grid", state.job.grid, "direction grid size (verify glw/bt default: 90)")
                ->capture_default_str());
        cmd->add_option("--seed", state.job.seed, "RNG seed")->capture_default_str();
        cmd->add_option("--budget", state.job.budget, "optimizer restart budget")
            ->capture_default_str();
        cmd->add_option("--output,-o", state.job.output, "output path prefix")
            ->capture_default_str();
        if (with_k)
            cmd->add_option("--k", state.job.k_spec,
                            "rank: positive integer, or \"inf\" (spectral models and the "
                            "matrix rank-n region)")
                ->capture_default_str();
    };

    CLI::App* range = app.add_subcommand("range", "rank-k numerical range of a matrix/model");
    range->fallthrough();
    range->add_option("--input", state.job.input_path, "matrix or model JSON file");
    range->add_option("--shift", state.shift_n, "use the n-dimensional shift instead");
    range->add_option("--format", state.job.format, "svg | csv | json (default: svg+csv)");
    add_common(range, true);

    CLI::App* cnum = app.add_subcommand("cnum", "c-numerical range: interval/region/cloud");
    cnum->fallthrough();
    cnum->add_option("--input", state.job.input_path, "matrix JSON file");
    cnum->add_option("--shift", state.shift_n, "use the n-dimensional shift instead");
    cnum->add_option("--weights", state.weights, "comma-separated real weights")->required();
    cnum->add_option("--samples", state.samples, "Monte-Carlo samples")->capture_default_str();
    add_common(cnum, false);

    CLI::App* dilate = app.add_subcommand("dilate", "construct a unitary dilation");
    dilate->fallthrough();
    dilate->add_option("--input", state.job.input_path, "matrix JSON file");
    dilate->add_option("--shift", state.shift_n, "use the n-dimensional shift instead");
    dilate->add_option("--kind", state.kind,
                       "halmos | family | minimal | extremal | prescribed")
        ->capture_default_str();
    dilate->add_option("--theta", state.theta, "direction for extremal")->capture_default_str();
    dilate->add_option("--lambda", state.lambda_spec,
                       "prescribed eigenvalues \"re,im[:mult];...\" (mult defaults to N)");
    add_common(dilate, true);

    CLI::App* verify = app.add_subcommand("verify", "run a verification harness");
    verify->fallthrough();
    verify->require_subcommand(1);
    for (const char* mode : {"glw", "bt", "trunc", "normal", "cnum-gap", "inf-example"}) {
        CLI::App* sub = verify->add_subcommand(mode);
        sub->fallthrough();
        sub->add_option("--input", state.job.input_path, "matrix JSON file");
        sub->add_option("--shift", state.shift_n, "use the n-dimensional shift instead");
        add_common(sub, true);
        if (std::string(mode) == "trunc") {
            sub->add_option("--gen", state.generator,
                            "diag-harmonic | unit-shift | example-blocks")
                ->capture_default_str();
            sub->add_option("--n-max", state.n_max, "largest section")->capture_default_str();
        }
        if (std::string(mode) == "normal")
            sub->add_option("--eigs", state.eigs_spec, "eigenvalues \"re,im;re,im;...\"");
        if (std::string(mode) == "cnum-gap")
            sub->add_option("--samples", state.samples, "dilation samples")
                ->capture_default_str();
        if (std::string(mode) == "inf-example") {
            sub->add_option("--n-trunc", state.n_trunc, "model truncation")
                ->capture_default_str();
            sub->add_option("--k-list", state.k_list, "comma-separated ranks")
                ->capture_default_str();
        }
    }

    CLI::App* oracle = app.add_subcommand("oracle", "closed-form regions");
    oracle->fallthrough();
    CLI::App* oracle_shift = oracle->add_subcommand("shift", "shift range from the formula");
    oracle_shift->fallthrough();
    oracle_shift->add_option("n", state.oracle_n, "dimension")->required();
    oracle_shift->add_option("k", state.oracle_k, "rank")->required();
    add_common(oracle_shift, false);
    oracle->require_subcommand(1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << error_to_json("UsageError", e.what()) << "\n";
        return 2;
    }

    set_thread_count(state.threads); // 0 resets to env/hardware default

    try {
        if (range->parsed()) return run_range(state, out);
        if (cnum->parsed()) return run_cnum(state, out);
        if (dilate->parsed()) return run_dilate(state, out);
        if (verify->parsed()) {
            for (CLI::App* sub : verify->get_subcommands()) state.job.verify_mode = sub->get_name();
            state.job.command = "verify";
            bool grid_given = false;
            for (const CLI::Option* option : grid_options)
                if (option->count() > 0) grid_given = true;
            return run_verify(state, grid_given, out, err);
        }
        if (oracle->parsed()) return run_oracle(state, out);
        err << error_to_json("UsageError", "no command given") << "\n";
        return 2;
    } catch (const Error& e) {
        err << error_to_json(error_code_name(e.code()), e.what()) << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << error_to_json("InternalError", e.what()) << "\n";
        return 2;
    }
}

} // namespace nrange
