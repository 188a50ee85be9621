#include <doctest.h>

#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockcycle/harness.hpp"

using namespace blockcycle::harness;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST_CASE("run report exit status") {
    RunReport r("demo");
    CHECK(r.exit_code() == kSuccess);
    r.check(true, "a", "1", "1");
    CHECK(r.ok());
    r.check(false, "b", "1", "2");
    CHECK(r.exit_code() == kVerificationFailure);
    CHECK(r.details.size() == 1);
    std::ostringstream os;
    print_report(os, r);
    CHECK(os.str() == "demo: FAIL (1 passed, 1 failed)\n  b: expected 1, got 2\n");
    for (int i = 0; i < 50; ++i) {
        r.check(false, "c", "x", "y");
    }
    CHECK(r.details.size() == RunReport::kMaxDetails);
    CHECK(r.checks_failed == 51);
}

TEST_CASE("verify suites pass with default and buffered settings") {
    for (const VerifyOptions& o : {VerifyOptions{}, VerifyOptions{48, 4, 32}, VerifyOptions{2, 1, 1}}) {
        const auto reports = run_verify(o);
        CHECK(reports.size() >= 5);
        for (const RunReport& r : reports) {
            INFO(r.suite);
            CHECK(r.ok());
            CHECK(r.checks_passed > 0);
        }
        CHECK(combined_exit_code(reports) == kSuccess);
    }
    CHECK(verify_reference_counts(VerifyOptions{}).ok());
    CHECK_THROWS_AS((void)run_verify(VerifyOptions{1, 1, 1}), std::invalid_argument);
}

TEST_CASE("count command") {
    const CountResult r = count_moves(21, 8);
    CHECK(r.match());
    CHECK(r.ledger.total_moves() == 58);
    CHECK(r.formula == 58);
    CHECK(count_moves(2, 1).ledger.total_moves() == 3);
    CHECK(count_moves(34, 13).ledger.total_moves() == 97);
    CHECK(count_moves(12, 0).ledger.total_moves() == 0);
    CHECK(count_moves(40, 13, 5).match());
    std::ostringstream os;
    print_count(os, r);
    CHECK(os.str() == "n=21 k=8 buffer=1\ntype_a 38\ntype_b 20\nswaps 0\ntotal 58\nformula 58\nmatch\n");
    CHECK_THROWS_AS((void)count_moves(3, 4), std::out_of_range);
}

TEST_CASE("curve files") {
    const CurveFile f = make_curve(std::nullopt, 2);
    std::ostringstream os;
    f.write(os);
    const auto rows = lines_of(os.str());
    REQUIRE(rows.size() == 2);
    CHECK(os.str().back() == '\n');
    CHECK(f.rows[0].first < f.rows[1].first);
    CHECK(rows[0].find(' ') != std::string::npos);

    const CurveFile plain = make_curve(std::nullopt, 4096);
    double top = 0.0;
    for (std::size_t i = 1; i < plain.rows.size(); ++i) {
        REQUIRE(plain.rows[i - 1].first < plain.rows[i].first);
    }
    for (const auto& row : plain.rows) {
        top = std::max(top, row.second);
    }
    CHECK(top >= 2.99);
    CHECK(top <= 3.0);

    for (const auto& [x, v] : make_curve(0.5, 128).rows) {
        REQUIRE(v == doctest::Approx(1.0 + x).epsilon(1e-15));
    }

    std::ostringstream a;
    std::ostringstream b;
    make_curve(0.2, 300).write(a);
    make_curve(0.2, 300).write(b);
    CHECK(a.str() == b.str());

    CHECK_THROWS_AS((void)make_curve(std::nullopt, 1), std::invalid_argument);
    CHECK_THROWS_AS((void)make_curve(0.0, 16), std::invalid_argument);
    CHECK_THROWS_AS((void)make_curve(1.5, 16), std::invalid_argument);
}

TEST_CASE("constant command") {
    CHECK(cutoff_ladder(10) == std::vector<std::uint64_t>{2, 4, 8, 10});
    CHECK(cutoff_ladder(2) == std::vector<std::uint64_t>{2});
    CHECK_THROWS_AS((void)cutoff_ladder(1), std::invalid_argument);

    std::ostringstream both;
    print_constant(both, 1000, ConstantMethod::kBoth);
    const auto rows = lines_of(both.str());
    REQUIRE(rows.size() == 4);
    CHECK(rows[3].rfind("D [", 0) == 0);

    std::ostringstream lower;
    print_constant(lower, 1000, ConstantMethod::kLower);
    const auto ladder = lines_of(lower.str());
    CHECK(ladder.size() == cutoff_ladder(1000).size() + 1);
    double previous = 0.0;
    for (std::size_t i = 1; i < ladder.size(); ++i) {
        std::istringstream is(ladder[i]);
        std::uint64_t cutoff = 0;
        double truncated = 0.0;
        is >> cutoff >> truncated;
        CHECK(truncated > previous);
        previous = truncated;
    }
}

TEST_CASE("avgcost table") {
    const auto two = avgcost_table(2, 0);
    REQUIRE(two.back().first == 2);
    CHECK(two.back().second == doctest::Approx(0.75));
    const auto one = avgcost_table(1, 0);
    REQUIRE(one.size() == 1);
    CHECK(one[0].second == 0.0);
    const auto t = avgcost_table(100, 30);
    REQUIRE(t.size() == 4);
    CHECK(t[0].first == 30);
    CHECK(t[3].first == 100);
    CHECK_THROWS_AS((void)avgcost_table(0, 1), std::invalid_argument);
}

TEST_CASE("heilbronn and moments commands") {
    std::ostringstream os;
    CHECK(print_heilbronn(os, 40) == kSuccess);
    const auto rows = lines_of(os.str());
    CHECK(rows.size() == 39);
    CHECK(rows.front().rfind("n=2 pass", 0) == 0);
    CHECK_THROWS_AS((void)check_heilbronn(1), std::invalid_argument);

    std::ostringstream m;
    print_moments(m, 1, 4096);
    const auto mrows = lines_of(m.str());
    REQUIRE(mrows.size() == 4);
    CHECK(mrows[1].rfind("moment 1 1.84", 0) == 0);
}

TEST_CASE("bench ladder, shifts and CSV layout") {
    BenchOptions o;
    o.elem_bytes = 4;
    o.min_bytes = 64;
    o.max_bytes = 1024;
    CHECK(bench_sizes(o) == std::vector<std::size_t>{64, 128, 256, 512, 1024});
    const auto shifts = bench_shifts(o);
    CHECK(shifts == bench_shifts(o));
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        CHECK(shifts[i] >= 1);
        CHECK(shifts[i] < bench_sizes(o)[i] / o.elem_bytes);
    }
    o.max_bytes = 256;
    std::ostringstream os;
    run_bench(os, o);
    const auto rows = lines_of(os.str());
    REQUIRE(rows.size() == 2 + 3 * bench_algorithms().size());
    CHECK(rows[0].rfind("# seed=", 0) == 0);
    CHECK(rows[1] == "bytes,ns_per_byte,algorithm");
    std::set<std::string> names;
    std::size_t previous = 0;
    for (std::size_t i = 2; i < rows.size(); ++i) {
        const std::size_t bytes = std::stoul(rows[i].substr(0, rows[i].find(',')));
        CHECK(bytes >= previous);
        previous = bytes;
        names.insert(rows[i].substr(rows[i].rfind(',') + 1));
    }
    CHECK(names.size() == 7);

    BenchOptions bad;
    bad.elem_bytes = 3;
    CHECK_THROWS_AS((void)bench_sizes(bad), std::invalid_argument);
    bad.elem_bytes = 8;
    bad.repetitions = 3;
    CHECK_THROWS_AS((void)bench_sizes(bad), std::invalid_argument);
}
