#include "blockcycle/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockcycle/constants.hpp"
#include "blockcycle/continuant.hpp"
#include "blockcycle/euclid.hpp"
#include "blockcycle/rotation.hpp"

namespace blockcycle::harness {

namespace {

std::string case_name(std::uint64_t n, std::uint64_t k) {
    return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

std::string fixed(double v, int digits = 10) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::vector<std::uint32_t> markers(std::size_t n) {
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 0u);
    return v;
}

std::string describe(std::span<const std::uint32_t> v) {
    std::string out = "[";
    const std::size_t shown = std::min<std::size_t>(v.size(), 12);
    for (std::size_t i = 0; i < shown; ++i) {
        out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out + (shown < v.size() ? ",...]" : "]");
}

MoveLedger block_cycle_ledger(std::size_t n, std::size_t k, std::size_t buffer, std::size_t batch) {
    std::vector<std::uint32_t> v = markers(n);
    MoveLedger ledger;
    rotate_block_cycle(std::span<std::uint32_t>(v), k, BlockCycleConfig{buffer, batch}, ledger);
    return ledger;
}

std::string ledger_text(const MoveLedger& l) {
    return "A=" + std::to_string(l.type_a_moves) + " B=" + std::to_string(l.type_b_moves) +
           " swaps=" + std::to_string(l.swap_count) + " total=" + std::to_string(l.total_moves());
}

void require_max_n(std::uint64_t max_n) {
    if (max_n < 2) {
        throw std::invalid_argument("max_n must be >= 2");
    }
}

}  // namespace

void RunReport::check(bool ok, const std::string& case_id, const std::string& expected,
                      const std::string& actual) {
    if (ok) {
        ++checks_passed;
        return;
    }
    ++checks_failed;
    if (details.size() < kMaxDetails) {
        details.push_back({case_id, expected, actual});
    }
}

void print_report(std::ostream& os, const RunReport& report) {
    os << report.suite << ": " << (report.ok() ? "PASS" : "FAIL") << " (" << report.checks_passed
       << " passed, " << report.checks_failed << " failed)\n";
    for (const CaseDetail& d : report.details) {
        os << "  " << d.case_id << ": expected " << d.expected << ", got " << d.actual << '\n';
    }
}

int combined_exit_code(const std::vector<RunReport>& reports) {
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const RunReport& r) { return r.ok(); });
    return ok ? kSuccess : kVerificationFailure;
}

RunReport verify_oracle_equivalence(const VerifyOptions& options) {
    require_max_n(options.max_n);
    RunReport report{"oracle-equivalence"};
    const BlockCycleConfig config{options.buffer, options.batch};
    for (std::size_t n = 1; n <= options.max_n; ++n) {
        const std::vector<std::uint32_t> input = markers(n);
        for (std::size_t k = 0; k <= n; ++k) {
            const std::vector<std::uint32_t> want = rotate_oracle(std::span<const std::uint32_t>(input), k);
            auto run = [&](const char* name, auto&& rotate) {
                std::vector<std::uint32_t> v = input;
                rotate(std::span<std::uint32_t>(v));
                report.check(v == want, std::string(name) + " " + case_name(n, k), describe(want), describe(v));
            };
            run("block_cycle", [&](std::span<std::uint32_t> s) { rotate_block_cycle(s, k, config); });
            run("block_swap", [&](std::span<std::uint32_t> s) { rotate_block_swap(s, k); });
            run("triple_reverse", [&](std::span<std::uint32_t> s) { rotate_triple_reverse(s, k); });
            run("trinity", [&](std::span<std::uint32_t> s) { rotate_trinity(s, k, config); });
            if (k > 0 && k < n) {
                run("dolphin", [&](std::span<std::uint32_t> s) { rotate_dolphin(s, k); });
            }
        }
    }
    return report;
}

RunReport verify_ledger_exactness(const VerifyOptions& options) {
    require_max_n(options.max_n);
    RunReport report{"ledger-exactness"};
    for (std::size_t n = 1; n <= options.max_n; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            const MoveLedger l = block_cycle_ledger(n, k, options.buffer, options.batch);
            const std::uint64_t want = block_cycle_cost(n, k, options.buffer);
            report.check(l.total_moves() == want, case_name(n, k), "total=" + std::to_string(want),
                         ledger_text(l));
            if (options.buffer == 1 && k > 0 && k < n) {
                const std::uint64_t g = std::gcd(n, k);
                const std::uint64_t a = 2 * remainder_sum(n, std::min(k, n - k));
                report.check(l.type_a_moves == a && l.type_b_moves == n - g, case_name(n, k) + " split",
                             "A=" + std::to_string(a) + " B=" + std::to_string(n - g), ledger_text(l));
            }
        }
    }
    return report;
}

RunReport verify_worst_case_bound(const VerifyOptions& options) {
    require_max_n(options.max_n);
    RunReport report{"worst-case-bound"};
    for (std::size_t n = 1; n <= options.max_n; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            const MoveLedger l = block_cycle_ledger(n, k, options.buffer, options.batch);
            const std::uint64_t bound = 3 * n - 3 * std::gcd(n, k);
            report.check(l.total_moves() <= bound, case_name(n, k), "<= " + std::to_string(bound),
                         std::to_string(l.total_moves()));
        }
    }
    return report;
}

RunReport verify_symmetry(const VerifyOptions& options) {
    require_max_n(options.max_n);
    RunReport report{"symmetry"};
    for (std::size_t n = 1; n <= options.max_n; ++n) {
        for (std::size_t k = 0; k <= n / 2; ++k) {
            const MoveLedger left = block_cycle_ledger(n, k, options.buffer, options.batch);
            const MoveLedger right = block_cycle_ledger(n, n - k, options.buffer, options.batch);
            report.check(left.total_moves() == right.total_moves(), case_name(n, k),
                         std::to_string(left.total_moves()), std::to_string(right.total_moves()));
        }
    }
    return report;
}

RunReport verify_batch_neutrality(const VerifyOptions& options) {
    require_max_n(options.max_n);
    RunReport report{"batch-neutrality"};
    std::vector<std::size_t> batches{2, 3, 8, 32};
    if (std::find(batches.begin(), batches.end(), options.batch) == batches.end() && options.batch != 1) {
        batches.push_back(options.batch);
    }
    for (std::size_t n = 1; n <= options.max_n; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            const MoveLedger base = block_cycle_ledger(n, k, options.buffer, 1);
            for (std::size_t batch : batches) {
                const MoveLedger l = block_cycle_ledger(n, k, options.buffer, batch);
                report.check(l == base, case_name(n, k) + " batch=" + std::to_string(batch), ledger_text(base),
                             ledger_text(l));
            }
        }
    }
    return report;
}

RunReport verify_reference_counts(const VerifyOptions& options) {
    require_max_n(options.max_n);
    RunReport report{"reference-counts"};
    for (std::size_t n = 2; n <= options.max_n; ++n) {
        for (std::size_t k = 1; k < n; ++k) {
            const std::uint64_t g = std::gcd(n, k);
            std::vector<std::uint32_t> v = markers(n);
            MoveLedger dolphin;
            rotate_dolphin(std::span<std::uint32_t>(v), k, dolphin);
            report.check(dolphin.total_moves() == n + g, "dolphin " + case_name(n, k), std::to_string(n + g),
                         std::to_string(dolphin.total_moves()));
            v = markers(n);
            MoveLedger swaps;
            rotate_block_swap(std::span<std::uint32_t>(v), k, swaps);
            report.check(swaps.swap_count == n - g, "block_swap " + case_name(n, k), std::to_string(n - g),
                         std::to_string(swaps.swap_count));
        }
    }
    return report;
}

RunReport verify_fibonacci_worst_case(std::uint64_t max_n) {
    RunReport report{"fibonacci-worst-case"};
    // (k, n) = (F_m, F_{m+2}) starting from (1, 3).
    std::uint64_t k = 1;
    std::uint64_t mid = 2;
    std::uint64_t n = 3;
    while (n <= max_n) {
        const MoveLedger l = block_cycle_ledger(n, k, 1, 1);
        report.check(l.total_moves() == 3 * n - 5, case_name(n, k), std::to_string(3 * n - 5),
                     std::to_string(l.total_moves()));
        k = mid;
        mid = n;
        n = k + mid;
    }
    return report;
}

std::vector<RunReport> run_verify(const VerifyOptions& options) {
    std::vector<RunReport> reports;
    reports.push_back(verify_oracle_equivalence(options));
    reports.push_back(verify_ledger_exactness(options));
    reports.push_back(verify_worst_case_bound(options));
    reports.push_back(verify_symmetry(options));
    reports.push_back(verify_batch_neutrality(options));
    if (options.buffer == 1) {
        reports.push_back(verify_fibonacci_worst_case(std::max<std::uint64_t>(options.max_n, 100000)));
    }
    return reports;
}

CountResult count_moves(std::uint64_t n, std::uint64_t k, std::size_t buffer) {
    if (k > n) {
        throw std::out_of_range("count: k must lie in [0, n]");
    }
    if (buffer == 0) {
        throw std::invalid_argument("count: buffer must be >= 1");
    }
    CountResult out;
    out.n = n;
    out.k = k;
    out.buffer = buffer;
    out.ledger = block_cycle_ledger(n, k, buffer, 1);
    out.formula = buffer == 1 ? move_count(n, k) : block_cycle_cost(n, k, buffer);
    return out;
}

void print_count(std::ostream& os, const CountResult& r) {
    os << "n=" << r.n << " k=" << r.k << " buffer=" << r.buffer << '\n'
       << "type_a " << r.ledger.type_a_moves << '\n'
       << "type_b " << r.ledger.type_b_moves << '\n'
       << "swaps " << r.ledger.swap_count << '\n'
       << "total " << r.ledger.total_moves() << '\n'
       << "formula " << r.formula << '\n'
       << (r.match() ? "match" : "MISMATCH") << '\n';
}

void CurveFile::write(std::ostream& os) const {
    char line[96];
    for (const auto& [x, v] : rows) {
        std::snprintf(line, sizeof line, "%.12f %.12f\n", x, v);
        os << line;
    }
}

CurveFile make_curve(std::optional<double> beta, std::size_t samples, const SeriesDepthPolicy& policy) {
    if (samples < 2) {
        throw std::invalid_argument("curve: samples must be >= 2");
    }
    if (beta && !(*beta > 0.0 && *beta <= 1.0)) {
        throw std::invalid_argument("curve: beta must lie in (0, 1]");
    }
    CurveFile out;
    out.rows.reserve(samples);
    for (double x : sample_grid(samples)) {
        out.rows.emplace_back(x, beta ? rel_cost_buffered(x, *beta) : rel_cost(x, policy));
    }
    return out;
}

std::vector<std::uint64_t> cutoff_ladder(std::uint64_t limit) {
    if (limit < 2) {
        throw std::invalid_argument("constant: cutoff must be >= 2");
    }
    std::vector<std::uint64_t> ladder;
    for (std::uint64_t c = 2; c < limit; c *= 2) {
        ladder.push_back(c);
    }
    ladder.push_back(limit);
    return ladder;
}

void print_constant(std::ostream& os, std::uint64_t limit, ConstantMethod method) {
    if (method == ConstantMethod::kLower || method == ConstantMethod::kUpper) {
        const bool lower = method == ConstantMethod::kLower;
        os << (lower ? "# cutoff truncated_lower accelerated_lower\n" : "# cutoff truncated_upper accelerated_upper\n");
        for (std::uint64_t c : cutoff_ladder(limit)) {
            const SeriesEstimate e = constant_C(c);
            os << c << ' ' << fixed(lower ? e.truncated_lower : e.truncated_upper, 12) << ' '
               << fixed(lower ? e.lower : e.upper, 12) << '\n';
        }
        return;
    }
    (void)cutoff_ladder(limit);
    const SeriesEstimate e = constant_C(limit);
    const Bracket d{1.0 + 4.0 * e.lower, 1.0 + 4.0 * e.upper};
    os << "cutoff " << limit << '\n'
       << "C_truncated [" << fixed(e.truncated_lower, 12) << ", " << fixed(e.truncated_upper, 12) << "]\n"
       << "C [" << fixed(e.lower, 12) << ", " << fixed(e.upper, 12) << "] width " << fixed(e.bracket().width(), 12)
       << '\n'
       << "D [" << fixed(d.lower, 12) << ", " << fixed(d.upper, 12) << "] width " << fixed(d.width(), 12) << '\n';
}

std::vector<std::pair<std::uint64_t, double>> avgcost_table(std::uint64_t n, std::uint64_t step) {
    if (n == 0) {
        throw std::invalid_argument("avgcost: n must be >= 1");
    }
    if (step == 0) {
        step = std::max<std::uint64_t>(1, n / 20);
    }
    std::vector<std::pair<std::uint64_t, double>> rows;
    for (std::uint64_t m = step; m < n; m += step) {
        rows.emplace_back(m, avg_cost(m).per_element());
    }
    rows.emplace_back(n, avg_cost(n).per_element());
    return rows;
}

void print_avgcost(std::ostream& os, std::uint64_t n, std::uint64_t step) {
    for (const auto& [m, v] : avgcost_table(n, step)) {
        os << m << ' ' << fixed(v) << '\n';
    }
}

HeilbronnCase check_heilbronn(std::uint64_t n) {
    if (n < 2) {
        throw std::invalid_argument("heilbronn: n must be >= 2");
    }
    HeilbronnCase out;
    out.n = n;
    const HeilbronnIdentity id = heilbron_identity_check(n);
    out.coprime_identity = id.coprime_form();
    out.unrestricted_identity = id.unrestricted_form();

    std::vector<HeilbronnQuadruple> mapped;
    bool valid = true;
    for (const MarkedExpansion& e : heilbronn_expansions(n)) {
        const HeilbronnQuadruple q = quadruple_from_expansion(e);
        valid = valid && q.x * q.x_prime + q.y * q.y_prime == n && q.x > q.y && q.x_prime > q.y_prime;
        mapped.push_back(q);
    }
    std::sort(mapped.begin(), mapped.end());
    const bool injective = std::adjacent_find(mapped.begin(), mapped.end()) == mapped.end();
    out.bijection = valid && injective && mapped == heilbronn_quadruples(n, true);

    out.mobius_inversion = static_cast<std::int64_t>(big_g_star(n)) == big_g_star_mobius(n);
    std::uint64_t divisor_sum = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0) {
            divisor_sum += big_g_star(n / d);
        }
    }
    out.divisor_sum = divisor_sum == big_g(n);
    return out;
}

int print_heilbronn(std::ostream& os, std::uint64_t max_n) {
    require_max_n(max_n);
    auto word = [](bool ok) { return ok ? "pass" : "FAIL"; };
    bool all = true;
    for (std::uint64_t n = 2; n <= max_n; ++n) {
        const HeilbronnCase c = check_heilbronn(n);
        all = all && c.ok();
        os << "n=" << n << ' ' << word(c.ok()) << " coprime=" << word(c.coprime_identity)
           << " unrestricted=" << word(c.unrestricted_identity) << " bijection=" << word(c.bijection)
           << " mobius=" << word(c.mobius_inversion) << " divisor_sum=" << word(c.divisor_sum) << '\n';
    }
    return all ? kSuccess : kVerificationFailure;
}

void print_moments(std::ostream& os, int order, std::size_t samples) {
    if (order < 0) {
        throw std::invalid_argument("moments: order must be >= 0");
    }
    const CostDistribution dist = cost_distribution(samples);
    os << "samples " << samples << '\n'
       << "moment " << order << ' ' << fixed(moment(order, samples)) << '\n'
       << "mean " << fixed(dist.mean) << '\n'
       << "std_dev " << fixed(dist.standard_deviation) << '\n';
}

}  // namespace blockcycle::harness
