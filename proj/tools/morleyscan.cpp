// morleyscan — exact verification of Morley-type congruences over prime ranges.
//
//   morleyscan verify --prime 7
//   morleyscan scan --from 5 --to 10000 --checks morley --format csv --jobs 4
//   morleyscan residuals --from 5 --to 2000 --format json
//
// Exit codes: 0 every check holds, 1 at least one check failed (a bug or a
// discovery — the report says which), 2 usage or range errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "morley/checks.hpp"
#include "morley/scan.hpp"

namespace {

using namespace morley;

std::vector<CheckId> parse_checks_arg(const std::string& arg) {
    std::vector<CheckId> out;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        if (item == "all") {
            auto all = all_check_ids();
            out.insert(out.end(), all.begin(), all.end());
            continue;
        }
        std::optional<CheckId> id = parse_check_id(item);
        if (!id) {
            std::ostringstream msg;
            msg << "unknown check id '" << item << "'; valid ids:";
            for (CheckId c : all_check_ids())
                msg << ' ' << check_name(c);
            throw std::invalid_argument(msg.str());
        }
        out.push_back(*id);
    }
    if (out.empty())
        throw std::invalid_argument("no checks requested");
    return out;
}

OutputFormat parse_format(const std::string& s, bool allow_csv) {
    if (s == "text")
        return OutputFormat::text;
    if (s == "json")
        return OutputFormat::json;
    if (s == "csv" && allow_csv)
        return OutputFormat::csv;
    throw std::invalid_argument("unknown format '" + s + "'");
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::invalid_argument("cannot open output file '" + path + "'");
    return f;
}

int cmd_verify(u64 prime, const std::string& checks_arg, const std::string& format,
               bool no_timing) {
    std::vector<CheckId> checks = parse_checks_arg(checks_arg);
    OutputFormat f = parse_format(format, /*allow_csv=*/false);
    OddPrime p(prime); // throws with the hypothesis message on bad input
    CongruenceReport report = full_report(p, checks);
    write_report(std::cout, report, f, !no_timing);
    return exit_code_for(report);
}

int cmd_scan(u64 from, u64 to, const std::string& checks_arg, const std::string& format,
             const std::string& out_path, unsigned jobs, bool progress, bool no_timing) {
    ScanConfig cfg{PrimeRange(from, to), parse_checks_arg(checks_arg),
                   parse_format(format, /*allow_csv=*/true), jobs, progress, !no_timing};
    std::ofstream file;
    std::ostream* payload = &std::cout;
    if (!out_path.empty()) {
        file = open_out(out_path);
        payload = &file;
    }
    ScanSummary s = run_scan(cfg, *payload, &std::cerr);
    std::cerr << "summary: primes=" << s.primes << " passed=" << s.passed
              << " failed=" << s.failed << " residual_zeros=" << s.residual_zeros << '\n';
    return exit_code_for(s);
}

int cmd_residuals(u64 from, u64 to, const std::string& format, const std::string& out_path,
                  bool no_timing) {
    OutputFormat f = parse_format(format, /*allow_csv=*/true);
    PrimeRange range(from, to);
    std::ofstream file;
    std::ostream* payload = &std::cout;
    if (!out_path.empty()) {
        file = open_out(out_path);
        payload = &file;
    }
    ResidualSummary s = run_residuals(range, f, !no_timing, *payload);
    std::cerr << "summary: primes=" << s.primes << " zeros=" << s.zeros << '\n';
    return 0; // zeros are findings, not failures
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"morleyscan — exact congruence checks for primes p > 3\n"
                 "Moduli run up to p^3 (requires p < 2^21); the residual report\n"
                 "peeks one power further mod p^4 (requires p < 2^15)."};
    app.require_subcommand(1);

    // verify
    u64 prime = 0;
    std::string checks = "all";
    std::string format = "text";
    bool no_timing = false;
    CLI::App* verify = app.add_subcommand("verify", "check a single prime");
    verify->add_option("--prime", prime, "prime p > 3")->required();
    verify->add_option("--checks", checks, "comma list of check ids, or 'all'");
    verify->add_option("--format", format, "text|json");
    verify->add_flag("--no-timing", no_timing, "zero the timing fields");

    // scan
    u64 from = 0, to = 0;
    std::string scan_checks = "all";
    std::string scan_format = "text";
    std::string out_path;
    unsigned jobs = 1;
    bool progress = false;
    bool scan_no_timing = false;
    CLI::App* scan = app.add_subcommand("scan", "check every prime in a range");
    scan->add_option("--from", from, "inclusive lower bound")->required();
    scan->add_option("--to", to, "inclusive upper bound (< 2^21)")->required();
    scan->add_option("--checks", scan_checks, "comma list of check ids, or 'all'");
    scan->add_option("--format", scan_format, "text|json|csv");
    scan->add_option("--out", out_path, "write records to this file instead of stdout");
    scan->add_option("--jobs", jobs, "worker threads; output order is unaffected")
        ->check(CLI::PositiveNumber);
    scan->add_flag("--progress", progress, "progress lines on stderr");
    scan->add_flag("--no-timing", scan_no_timing, "zero the timing fields");

    // residuals
    u64 r_from = 0, r_to = 0;
    std::string r_format = "text";
    std::string r_out;
    bool r_no_timing = false;
    CLI::App* residuals = app.add_subcommand(
        "residuals", "Morley residual mod p per prime (zeros flagged; needs p < 2^15)");
    residuals->add_option("--from", r_from, "inclusive lower bound")->required();
    residuals->add_option("--to", r_to, "inclusive upper bound (< 2^15)")->required();
    residuals->add_option("--format", r_format, "text|json|csv");
    residuals->add_option("--out", r_out, "write records to this file instead of stdout");
    residuals->add_flag("--no-timing", r_no_timing, "zero the timing fields");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed())
            return cmd_verify(prime, checks, format, no_timing);
        if (scan->parsed())
            return cmd_scan(from, to, scan_checks, scan_format, out_path, jobs, progress,
                            scan_no_timing);
        return cmd_residuals(r_from, r_to, r_format, r_out, r_no_timing);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::range_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
