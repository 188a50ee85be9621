// rotcost: rotation move counts, cost-model curves and number-theoretic checks.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "blockcycle/harness.hpp"

namespace h = blockcycle::harness;

namespace {

// Runs `emit` against stdout for "-" and against a file otherwise.
template <class Emit>
int with_output(const std::string& path, Emit emit) {
    if (path == "-") {
        return emit(std::cout);
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::ios_base::failure("cannot open " + path + " for writing");
    }
    const int code = emit(file);
    file.flush();
    if (!file) {
        throw std::ios_base::failure("write to " + path + " failed");
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Block cycle rotation: move accounting and cost analysis"};
    app.require_subcommand(1);

    h::VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run the rotation verification suites");
    verify_cmd->add_option("--max-n", verify.max_n, "Largest array length")->check(CLI::Range(2, 1 << 20));
    verify_cmd->add_option("--buffer", verify.buffer, "Early-exit capacity")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--batch", verify.batch, "Batch capacity")->check(CLI::PositiveNumber);

    std::uint64_t count_n = 0;
    std::uint64_t count_k = 0;
    std::size_t count_buffer = 1;
    auto* count_cmd = app.add_subcommand("count", "Instrumented block cycle move count for one (n, k)");
    count_cmd->add_option("n", count_n, "Array length")->required();
    count_cmd->add_option("k", count_k, "Left shift, 0 <= k <= n")->required();
    count_cmd->add_option("--buffer", count_buffer, "Early-exit capacity")->check(CLI::PositiveNumber);

    std::optional<double> curve_beta;
    std::size_t curve_samples = 4096;
    std::string curve_out = "-";
    auto* curve_cmd = app.add_subcommand("curve", "Emit f or f_beta as two-column plot data");
    curve_cmd->add_option("--beta", curve_beta, "Buffer scale in (0, 1]; omit for f");
    curve_cmd->add_option("--samples", curve_samples, "Grid points on (0, 1/2)");
    curve_cmd->add_option("--out,-o", curve_out, "Output path, - for stdout");

    std::uint64_t constant_limit = 100000;
    std::string constant_method = "both";
    auto* constant_cmd = app.add_subcommand("constant", "Bracket the average-cost constant");
    constant_cmd->add_option("--limit,-X", constant_limit, "Series cutoff X >= 2");
    constant_cmd->add_option("--method", constant_method, "both, lower or upper")
        ->check(CLI::IsMember({"both", "lower", "upper"}));

    std::uint64_t avg_n = 0;
    std::uint64_t avg_step = 0;
    auto* avg_cmd = app.add_subcommand("avgcost", "Table of A(m)/m");
    avg_cmd->add_option("n", avg_n, "Largest length")->required();
    avg_cmd->add_option("--step", avg_step, "Row spacing (default about n/20)");

    std::uint64_t heil_max = 300;
    auto* heil_cmd = app.add_subcommand("heilbronn", "Check the Heilbronn identities for 2 <= n <= max_n");
    heil_cmd->add_option("max_n", heil_max, "Largest n");

    int moment_order = 1;
    std::size_t moment_samples = 1 << 16;
    auto* moments_cmd = app.add_subcommand("moments", "Moments of f(X), X uniform on [0, 1/2]");
    moments_cmd->add_option("order", moment_order, "Moment order >= 0");
    moments_cmd->add_option("--samples", moment_samples, "Grid points");

    h::BenchOptions bench;
    std::string bench_out = "-";
    auto* bench_cmd = app.add_subcommand("bench", "Time the rotation algorithms (CSV)");
    bench_cmd->add_option("--elem-bytes", bench.elem_bytes, "Element width")
        ->check(CLI::IsMember({1, 2, 4, 8, 16}));
    bench_cmd->add_option("--max-bytes", bench.max_bytes, "Largest array in bytes");
    bench_cmd->add_option("--min-bytes", bench.min_bytes, "Smallest array in bytes");
    bench_cmd->add_option("--seed", bench.seed, "Seed for the shift generator");
    bench_cmd->add_option("--repetitions", bench.repetitions, "Timed repetitions (>= 5)");
    bench_cmd->add_option("--out,-o", bench_out, "Output path, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? h::kSuccess : h::kUsageError;
    }

    try {
        if (*verify_cmd) {
            const auto reports = h::run_verify(verify);
            for (const auto& r : reports) {
                h::print_report(std::cout, r);
            }
            return h::combined_exit_code(reports);
        }
        if (*count_cmd) {
            const h::CountResult r = h::count_moves(count_n, count_k, count_buffer);
            h::print_count(std::cout, r);
            return r.match() ? h::kSuccess : h::kVerificationFailure;
        }
        if (*curve_cmd) {
            const h::CurveFile curve = h::make_curve(curve_beta, curve_samples);
            return with_output(curve_out, [&](std::ostream& os) {
                curve.write(os);
                return h::kSuccess;
            });
        }
        if (*constant_cmd) {
            const auto method = constant_method == "lower"   ? h::ConstantMethod::kLower
                                : constant_method == "upper" ? h::ConstantMethod::kUpper
                                                             : h::ConstantMethod::kBoth;
            h::print_constant(std::cout, constant_limit, method);
            return h::kSuccess;
        }
        if (*avg_cmd) {
            h::print_avgcost(std::cout, avg_n, avg_step);
            return h::kSuccess;
        }
        if (*heil_cmd) {
            return h::print_heilbronn(std::cout, heil_max);
        }
        if (*moments_cmd) {
            h::print_moments(std::cout, moment_order, moment_samples);
            return h::kSuccess;
        }
        if (*bench_cmd) {
            return with_output(bench_out, [&](std::ostream& os) {
                h::run_bench(os, bench);
                return h::kSuccess;
            });
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "rotcost: " << e.what() << '\n';
        return h::kUsageError;
    } catch (const std::out_of_range& e) {
        std::cerr << "rotcost: " << e.what() << '\n';
        return h::kUsageError;
    } catch (const std::domain_error& e) {
        std::cerr << "rotcost: " << e.what() << '\n';
        return h::kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "rotcost: " << e.what() << '\n';
        return 3;
    }
    return h::kUsageError;
}
