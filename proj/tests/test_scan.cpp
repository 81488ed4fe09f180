#include "doctest.h"

#include <sstream>
#include <stdexcept>

#include "morley/scan.hpp"

using namespace morley;

namespace {

std::vector<CheckId> all_checks_vec() {
    auto s = all_check_ids();
    return {s.begin(), s.end()};
}

std::string run_to_string(ScanConfig cfg, ScanSummary* summary = nullptr) {
    std::ostringstream out;
    ScanSummary s = run_scan(cfg, out, nullptr);
    if (summary)
        *summary = s;
    return out.str();
}

} // namespace

TEST_CASE("scan: csv shape, summary counts, exit code") {
    ScanConfig cfg{PrimeRange(5, 100), {CheckId::morley}, OutputFormat::csv, 1, false, false};
    ScanSummary s;
    std::string out = run_to_string(cfg, &s);
    CHECK(s.primes == 23);
    CHECK(s.passed == 23);
    CHECK(s.failed == 0);
    CHECK(s.residual_zeros == 0);
    CHECK(exit_code_for(s) == 0);

    std::istringstream lines(out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == std::string(csv_header));
    REQUIRE(std::getline(lines, line));
    CHECK(line == "5,morley,true,6,6");
    REQUIRE(std::getline(lines, line));
    CHECK(line == "7,morley,true,323,323");
    std::size_t rows = 2;
    while (std::getline(lines, line))
        ++rows;
    CHECK(rows == 23);
}

TEST_CASE("scan: empty prime range gives records-free output and exit 0") {
    ScanConfig cfg{PrimeRange(24, 28), all_checks_vec(), OutputFormat::text, 1, false, true};
    ScanSummary s;
    std::string out = run_to_string(cfg, &s);
    CHECK(out.empty());
    CHECK(s.primes == 0);
    CHECK(exit_code_for(s) == 0);
    // csv keeps its fixed header even with no rows
    cfg.format = OutputFormat::csv;
    CHECK(run_to_string(cfg) == std::string(csv_header) + "\n");
}

TEST_CASE("scan: validation failures fire before any output") {
    std::ostringstream out;
    ScanConfig no_checks{PrimeRange(5, 10), {}, OutputFormat::text, 1, false, true};
    CHECK_THROWS_AS(run_scan(no_checks, out, nullptr), std::invalid_argument);
    ScanConfig over_cap{PrimeRange(5, u64{1} << 21), {CheckId::morley}, OutputFormat::csv, 1,
                        false, true};
    CHECK_THROWS_AS(run_scan(over_cap, out, nullptr), std::range_error);
    CHECK(out.str().empty());
}

TEST_CASE("scan: jobs=4 payload is byte-identical to jobs=1 (timing zeroed)") {
    for (OutputFormat f : {OutputFormat::json, OutputFormat::csv, OutputFormat::text}) {
        ScanConfig cfg{PrimeRange(5, 700), all_checks_vec(), f, 1, false, false};
        std::string sequential = run_to_string(cfg);
        cfg.jobs = 4;
        std::string parallel = run_to_string(cfg);
        CHECK(sequential == parallel);
    }
}

TEST_CASE("scan: records come out in ascending p order under parallelism") {
    ScanConfig cfg{PrimeRange(5, 2000), {CheckId::fermat_little}, OutputFormat::json, 3,
                   false, false};
    std::istringstream lines(run_to_string(cfg));
    std::string line;
    u64 prev = 0;
    std::size_t n = 0;
    while (std::getline(lines, line)) {
        CongruenceReport r = report_from_json_line(line);
        CHECK(r.p.value() > prev);
        prev = r.p.value();
        ++n;
    }
    CHECK(n == 301); // primes in [5, 2000], excluding 2 and 3
}

TEST_CASE("json records round-trip identically on data fields") {
    ScanConfig cfg{PrimeRange(5, 100), all_checks_vec(), OutputFormat::json, 1, false, false};
    std::istringstream lines(run_to_string(cfg));
    std::string line;
    while (std::getline(lines, line)) {
        CongruenceReport r = report_from_json_line(line);
        CHECK(report_to_json_line(r, false) == line);
    }
}

TEST_CASE("json residual field is null past the mod-p^4 cap") {
    ScanConfig cfg{PrimeRange(32771, 32800), {CheckId::morley}, OutputFormat::json, 1, false,
                   false};
    std::string out = run_to_string(cfg);
    CHECK(out.find("\"residual_mod_p\":null") != std::string::npos);
    CongruenceReport r = report_from_json_line(out.substr(0, out.find('\n')));
    CHECK_FALSE(r.residual.has_value());
    // and text says n/a
    cfg.format = OutputFormat::text;
    CHECK(run_to_string(cfg).find("residual_mod_p = n/a") != std::string::npos);
}

TEST_CASE("report_from_json_line rejects malformed records") {
    CHECK_THROWS_AS(report_from_json_line("{not json"), std::invalid_argument);
    CHECK_THROWS_AS(report_from_json_line("{\"p\":7}"), std::invalid_argument);
    CHECK_THROWS_AS(report_from_json_line(
                        R"({"p":7,"checks":{"bogus":{"holds":true,"lhs":1,"rhs":1}}})"),
                    std::invalid_argument);
}

TEST_CASE("text report shape") {
    CongruenceReport r = full_report(OddPrime(7), std::vector<CheckId>{CheckId::morley});
    std::ostringstream out;
    write_report_text(out, r, false);
    std::string text = out.str();
    CHECK(text.find("p = 7") != std::string::npos);
    CHECK(text.find("morley") != std::string::npos);
    CHECK(text.find("lhs=323 rhs=323") != std::string::npos);
    CHECK(text.find("residual_mod_p = 2") != std::string::npos);
    CHECK(text.find("all 1 checks hold") != std::string::npos);
    CHECK(text.find(" us)") == std::string::npos); // timing suppressed
}

TEST_CASE("residuals: rows, zero flag wiring, cap, summary") {
    std::ostringstream out;
    ResidualSummary s = run_residuals(PrimeRange(5, 11), OutputFormat::csv, false, out);
    CHECK(s.primes == 3);
    CHECK(s.zeros == 0);
    std::istringstream lines(out.str());
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == std::string(residual_csv_header));
    REQUIRE(std::getline(lines, line));
    CHECK(line == "5,3,false");
    REQUIRE(std::getline(lines, line));
    CHECK(line == "7,2,false");
    REQUIRE(std::getline(lines, line));
    CHECK(line == "11,4,false");

    std::ostringstream json_out;
    run_residuals(PrimeRange(5, 7), OutputFormat::json, false, json_out);
    CHECK(json_out.str().find("\"residual_mod_p\":3") != std::string::npos);
    CHECK(json_out.str().find("\"zero\":false") != std::string::npos);

    std::ostringstream sink;
    CHECK_THROWS_AS(run_residuals(PrimeRange(5, u64{1} << 15), OutputFormat::text, true, sink),
                    std::range_error);
    ResidualSummary empty = run_residuals(PrimeRange(24, 28), OutputFormat::text, true, sink);
    CHECK(empty.primes == 0);
}

TEST_CASE("exit_code_for reports 1 exactly when some check failed") {
    CongruenceReport ok = full_report(OddPrime(5), std::vector<CheckId>{CheckId::morley});
    CHECK(exit_code_for(ok) == 0);
    setenv("MORLEYSCAN_FAULT_INJECT", "morley", 1);
    CongruenceReport bad = full_report(OddPrime(5), std::vector<CheckId>{CheckId::morley});
    unsetenv("MORLEYSCAN_FAULT_INJECT");
    CHECK(exit_code_for(bad) == 1);
    ScanSummary s;
    s.primes = 2;
    s.passed = 1;
    s.failed = 1;
    CHECK(exit_code_for(s) == 1);
}
