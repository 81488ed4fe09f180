#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "morley/checks.hpp"
#include "morley/primes.hpp"

namespace morley {

enum class OutputFormat : u8 { text, json, csv };

/// One scan job: which primes, which checks, how to emit them.
struct ScanConfig {
    PrimeRange range;
    std::vector<CheckId> checks;
    OutputFormat format = OutputFormat::text;
    unsigned jobs = 1;
    bool progress = false;
    bool with_timing = true;
};

struct ScanSummary {
    u64 primes = 0;
    u64 passed = 0;
    u64 failed = 0;
    u64 residual_zeros = 0;
    bool all_hold() const noexcept { return failed == 0; }
};

// --- record formatting -----------------------------------------------------

/// One line-delimited JSON object:
/// {"p":..,"checks":{"<id>":{"holds":..,"lhs":..,"rhs":..},..},
///  "residual_mod_p":<int or null>,"elapsed_us":..}
std::string report_to_json_line(const CongruenceReport& r, bool with_timing);

/// Inverse of report_to_json_line; round-trips all data fields.
/// Throws std::invalid_argument on malformed records or unknown check ids.
CongruenceReport report_from_json_line(std::string_view line);

inline constexpr std::string_view csv_header = "p,check,holds,lhs,rhs";

void write_report_csv_rows(std::ostream& out, const CongruenceReport& r);
void write_report_text(std::ostream& out, const CongruenceReport& r, bool with_timing);
void write_report(std::ostream& out, const CongruenceReport& r, OutputFormat f,
                  bool with_timing);

// --- engines ----------------------------------------------------------------

/// Scans the range, emitting one record per prime in ascending order whatever
/// the jobs count (bounded reorder buffer). The payload stream receives only
/// records (plus the CSV header); progress lines, when enabled, go to diag.
/// Cap violations throw std::range_error before any work.
ScanSummary run_scan(const ScanConfig& cfg, std::ostream& payload, std::ostream* diag);

struct ResidualSummary {
    u64 primes = 0;
    u64 zeros = 0;
};

inline constexpr std::string_view residual_csv_header = "p,residual,zero";

/// Emits (p, morley residual mod p) rows; zero residuals are flagged, they
/// are findings, not failures. Range must sit inside the mod-p⁴ cap.
ResidualSummary run_residuals(const PrimeRange& range, OutputFormat f, bool with_timing,
                              std::ostream& payload);

/// 0 when everything holds, 1 when at least one check failed.
int exit_code_for(const ScanSummary& s);
int exit_code_for(const CongruenceReport& r);

} // namespace morley
