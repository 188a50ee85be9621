#pragma once

// Verification suites and report/plot emitters behind the rotcost CLI.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blockcycle/cost_model.hpp"
#include "blockcycle/move_ledger.hpp"

namespace blockcycle::harness {

/// Process exit codes shared by every command.
enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

struct CaseDetail {
    std::string case_id;
    std::string expected;
    std::string actual;
};

/// Outcome of one verification suite. Only failing cases are kept in
/// `details`, capped at `kMaxDetails`.
struct RunReport {
    static constexpr std::size_t kMaxDetails = 20;

    std::string suite;
    std::uint64_t checks_passed = 0;
    std::uint64_t checks_failed = 0;
    std::vector<CaseDetail> details;

    RunReport() = default;
    explicit RunReport(std::string name) : suite(std::move(name)) {}

    void check(bool ok, const std::string& case_id, const std::string& expected,
               const std::string& actual);
    [[nodiscard]] bool ok() const noexcept { return checks_failed == 0; }
    [[nodiscard]] int exit_code() const noexcept { return ok() ? kSuccess : kVerificationFailure; }
};

/// One summary line, followed by one indented line per recorded failure.
void print_report(std::ostream& os, const RunReport& report);

[[nodiscard]] int combined_exit_code(const std::vector<RunReport>& reports);

// ---------------------------------------------------------------------------
// Rotation suites

struct VerifyOptions {
    std::uint64_t max_n = 64;
    std::size_t buffer = 1;
    std::size_t batch = 1;
};

/// Every algorithm against rotate_oracle for all n <= max_n, 0 <= k <= n
/// (0 < k < n for the Dolphin rotation), on pairwise-distinct markers.
[[nodiscard]] RunReport verify_oracle_equivalence(const VerifyOptions& options);

/// Block cycle ledger against the discrete cost recurrence; with buffer 1
/// also type A = 2 remainder_sum and type B = n - gcd.
[[nodiscard]] RunReport verify_ledger_exactness(const VerifyOptions& options);

/// Block cycle total <= 3n - 3 gcd(n, k).
[[nodiscard]] RunReport verify_worst_case_bound(const VerifyOptions& options);

/// Block cycle ledger totals equal for k and n - k.
[[nodiscard]] RunReport verify_symmetry(const VerifyOptions& options);

/// Ledgers at options.batch identical to ledgers at batch 1.
[[nodiscard]] RunReport verify_batch_neutrality(const VerifyOptions& options);

/// Dolphin total = n + gcd and block-swap swaps = n - gcd for 0 < k < n.
[[nodiscard]] RunReport verify_reference_counts(const VerifyOptions& options);

/// Fibonacci pairs (F_m, F_{m+2}) with n <= max_n cost exactly 3n - 5.
[[nodiscard]] RunReport verify_fibonacci_worst_case(std::uint64_t max_n);

[[nodiscard]] std::vector<RunReport> run_verify(const VerifyOptions& options);

// ---------------------------------------------------------------------------
// Counting

struct CountResult {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::size_t buffer = 1;
    MoveLedger ledger;
    std::uint64_t formula = 0;

    [[nodiscard]] bool match() const noexcept { return ledger.total_moves() == formula; }
};

/// Instrumented block cycle run next to the closed form (buffer 1) or the
/// discrete recurrence (larger buffers).
[[nodiscard]] CountResult count_moves(std::uint64_t n, std::uint64_t k, std::size_t buffer = 1);

void print_count(std::ostream& os, const CountResult& result);

// ---------------------------------------------------------------------------
// Curves

/// Two-column plot data, x strictly increasing.
struct CurveFile {
    std::vector<std::pair<double, double>> rows;

    /// "x value\n" per row, fixed 12-digit decimals.
    void write(std::ostream& os) const;
};

/// f (no beta) or f_beta sampled on sample_grid(samples).
[[nodiscard]] CurveFile make_curve(std::optional<double> beta, std::size_t samples,
                                   const SeriesDepthPolicy& policy = {});

// ---------------------------------------------------------------------------
// Constants, averages, identities, moments

enum class ConstantMethod { kBoth, kLower, kUpper };

/// Cutoffs 2, 4, 8, ... below `limit`, then `limit` itself.
[[nodiscard]] std::vector<std::uint64_t> cutoff_ladder(std::uint64_t limit);

void print_constant(std::ostream& os, std::uint64_t limit, ConstantMethod method);

/// Rows (m, A(m)/m) for m = step, 2 step, ..., n (the last row is always n).
[[nodiscard]] std::vector<std::pair<std::uint64_t, double>> avgcost_table(std::uint64_t n,
                                                                          std::uint64_t step);

void print_avgcost(std::ostream& os, std::uint64_t n, std::uint64_t step);

/// Identities around the Heilbronn correspondence for one n >= 2.
struct HeilbronnCase {
    std::uint64_t n = 0;
    bool coprime_identity = false;
    bool unrestricted_identity = false;
    bool bijection = false;
    bool mobius_inversion = false;
    bool divisor_sum = false;

    [[nodiscard]] bool ok() const noexcept {
        return coprime_identity && unrestricted_identity && bijection && mobius_inversion && divisor_sum;
    }
};

[[nodiscard]] HeilbronnCase check_heilbronn(std::uint64_t n);

/// One pass/fail line per n in [2, max_n]; returns the exit code.
int print_heilbronn(std::ostream& os, std::uint64_t max_n);

void print_moments(std::ostream& os, int order, std::size_t samples);

// ---------------------------------------------------------------------------
// Benchmark

struct BenchOptions {
    std::size_t elem_bytes = 8;
    std::size_t max_bytes = std::size_t{1} << 22;
    std::size_t min_bytes = 64;
    std::uint64_t seed = 20260102;
    int repetitions = 5;
    int warmup = 1;
    std::size_t buffer_items = 256;
    std::size_t batch_bytes = 32;
};

/// Array sizes in bytes: min_bytes, 2 min_bytes, ... up to max_bytes.
[[nodiscard]] std::vector<std::size_t> bench_sizes(const BenchOptions& options);

/// Shifts drawn per size from a generator seeded with options.seed.
[[nodiscard]] std::vector<std::size_t> bench_shifts(const BenchOptions& options);

/// Names of the benchmarked algorithms, in output order.
[[nodiscard]] const std::vector<std::string>& bench_algorithms();

/// CSV: a "# ..." comment line with seed and settings, then the header
/// "bytes,ns_per_byte,algorithm" and one row per (size, algorithm).
void run_bench(std::ostream& os, const BenchOptions& options);

}  // namespace blockcycle::harness
