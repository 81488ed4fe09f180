#include "morley/scan.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace morley {

namespace {

using ordered_json = nlohmann::ordered_json;

} // namespace

std::string report_to_json_line(const CongruenceReport& r, bool with_timing) {
    ordered_json j;
    j["p"] = r.p.value();
    ordered_json checks = ordered_json::object();
    for (const CheckResult& c : r.results) {
        ordered_json one;
        one["holds"] = c.holds;
        one["lhs"] = c.lhs.value();
        one["rhs"] = c.rhs.value();
        checks[std::string(check_name(c.id))] = std::move(one);
    }
    j["checks"] = std::move(checks);
    if (r.residual)
        j["residual_mod_p"] = r.residual->value();
    else
        j["residual_mod_p"] = nullptr;
    j["elapsed_us"] = with_timing ? r.elapsed_us : 0;
    return j.dump();
}

CongruenceReport report_from_json_line(std::string_view line) {
    ordered_json j;
    try {
        j = ordered_json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report record: ") + e.what());
    }
    if (!j.is_object() || !j.contains("p") || !j.contains("checks"))
        throw std::invalid_argument("malformed report record: missing p/checks");
    OddPrime p(j.at("p").get<u64>());
    CongruenceReport report{p, {}, {}, std::nullopt, 0};
    for (const auto& [name, body] : j.at("checks").items()) {
        std::optional<CheckId> id = parse_check_id(name);
        if (!id)
            throw std::invalid_argument("unknown check id in record: " + name);
        Modulus m(p, check_modulus_power(*id));
        CheckResult r = make_check_result(*id, Residue(body.at("lhs").get<u64>(), m),
                                          Residue(body.at("rhs").get<u64>(), m));
        if (r.holds != body.at("holds").get<bool>())
            throw std::invalid_argument("inconsistent holds flag in record for " + name);
        report.results.push_back(std::move(r));
        report.check_elapsed_us.push_back(0);
    }
    if (j.contains("residual_mod_p") && !j.at("residual_mod_p").is_null())
        report.residual = Residue(j.at("residual_mod_p").get<u64>(), Modulus(p, 1));
    if (j.contains("elapsed_us"))
        report.elapsed_us = j.at("elapsed_us").get<i64>();
    return report;
}

void write_report_csv_rows(std::ostream& out, const CongruenceReport& r) {
    for (const CheckResult& c : r.results) {
        out << r.p.value() << ',' << check_name(c.id) << ',' << (c.holds ? "true" : "false")
            << ',' << c.lhs.value() << ',' << c.rhs.value() << '\n';
    }
}

void write_report_text(std::ostream& out, const CongruenceReport& r, bool with_timing) {
    out << "p = " << r.p.value() << '\n';
    std::size_t failed = 0;
    for (std::size_t i = 0; i < r.results.size(); ++i) {
        const CheckResult& c = r.results[i];
        if (!c.holds)
            ++failed;
        out << "  " << std::left << std::setw(21) << check_name(c.id)
            << (c.holds ? "ok  " : "FAIL") << "  lhs=" << c.lhs.value()
            << " rhs=" << c.rhs.value();
        if (with_timing && i < r.check_elapsed_us.size())
            out << "  (" << r.check_elapsed_us[i] << " us)";
        if (!c.note.empty())
            out << "  # " << c.note;
        out << '\n';
    }
    out << "  residual_mod_p = ";
    if (r.residual) {
        out << r.residual->value();
        if (r.residual->value() == 0)
            out << "  # zero: the congruence holds mod p^4 here";
    } else {
        out << "n/a (needs p < 2^15)";
    }
    out << '\n';
    if (failed == 0)
        out << "  all " << r.results.size() << " checks hold\n";
    else
        out << "  " << failed << " of " << r.results.size() << " checks FAILED\n";
}

void write_report(std::ostream& out, const CongruenceReport& r, OutputFormat f,
                  bool with_timing) {
    switch (f) {
    case OutputFormat::text:
        write_report_text(out, r, with_timing);
        break;
    case OutputFormat::json:
        out << report_to_json_line(r, with_timing) << '\n';
        break;
    case OutputFormat::csv:
        write_report_csv_rows(out, r);
        break;
    }
}

namespace {

void tally(ScanSummary& s, const CongruenceReport& r) {
    ++s.primes;
    bool all = true;
    for (const CheckResult& c : r.results)
        all &= c.holds;
    if (all)
        ++s.passed;
    else
        ++s.failed;
    if (r.residual && r.residual->value() == 0)
        ++s.residual_zeros;
}

class ProgressMeter {
public:
    ProgressMeter(std::ostream* diag, bool enabled, std::size_t total)
        : diag_(diag), enabled_(enabled && diag != nullptr), total_(total) {}

    void emitted(std::size_t done) {
        if (!enabled_)
            return;
        auto now = std::chrono::steady_clock::now();
        if (done != total_ && now - last_ < std::chrono::milliseconds(400))
            return;
        last_ = now;
        *diag_ << "progress: " << done << "/" << total_ << " primes\n" << std::flush;
    }

private:
    std::ostream* diag_;
    bool enabled_;
    std::size_t total_;
    std::chrono::steady_clock::time_point last_{};
};

} // namespace

ScanSummary run_scan(const ScanConfig& cfg, std::ostream& payload, std::ostream* diag) {
    if (cfg.checks.empty())
        throw std::invalid_argument("scan: no checks requested");
    if (cfg.jobs < 1)
        throw std::invalid_argument("scan: jobs must be >= 1");

    // Range (and cap) validation happens before any arithmetic.
    const std::vector<OddPrime> primes = primes_in_range(cfg.range);

    if (cfg.format == OutputFormat::csv)
        payload << csv_header << '\n';

    ScanSummary summary;
    ProgressMeter progress(diag, cfg.progress, primes.size());

    if (cfg.jobs == 1 || primes.size() <= 1) {
        for (std::size_t i = 0; i < primes.size(); ++i) {
            CongruenceReport r = full_report(primes[i], cfg.checks);
            tally(summary, r);
            write_report(payload, r, cfg.format, cfg.with_timing);
            progress.emitted(i + 1);
        }
        return summary;
    }

    // Fan-out over primes; a bounded reorder buffer restores ascending
    // emission. Workers stall only when they run too far ahead of the
    // emitter, so memory stays O(jobs · report size).
    const std::size_t capacity = static_cast<std::size_t>(cfg.jobs) * 4;
    std::mutex mu;
    std::condition_variable cv_space, cv_ready;
    std::map<std::size_t, CongruenceReport> ready;
    std::size_t next_emit = 0;
    std::atomic<std::size_t> next_index{0};
    std::exception_ptr failure;

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next_index.fetch_add(1);
            if (i >= primes.size())
                return;
            try {
                CongruenceReport r = full_report(primes[i], cfg.checks);
                std::unique_lock lock(mu);
                cv_space.wait(lock, [&] {
                    return failure != nullptr || i < next_emit + capacity;
                });
                if (failure)
                    return;
                ready.emplace(i, std::move(r));
                cv_ready.notify_all();
            } catch (...) {
                std::unique_lock lock(mu);
                if (!failure)
                    failure = std::current_exception();
                cv_ready.notify_all();
                cv_space.notify_all();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(cfg.jobs);
    for (unsigned t = 0; t < cfg.jobs; ++t)
        pool.emplace_back(worker);

    {
        std::unique_lock lock(mu);
        while (next_emit < primes.size()) {
            cv_ready.wait(lock, [&] {
                return failure != nullptr || ready.count(next_emit) != 0;
            });
            if (failure)
                break;
            CongruenceReport r = std::move(ready.at(next_emit));
            ready.erase(next_emit);
            ++next_emit;
            cv_space.notify_all();
            lock.unlock();
            tally(summary, r);
            write_report(payload, r, cfg.format, cfg.with_timing);
            progress.emitted(next_emit);
            lock.lock();
        }
    }
    for (std::thread& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return summary;
}

ResidualSummary run_residuals(const PrimeRange& range, OutputFormat f, bool with_timing,
                              std::ostream& payload) {
    if (range.hi >= prime_limit_pow4)
        throw std::range_error("residuals need the mod p^4 width: hi=" +
                               std::to_string(range.hi) +
                               " exceeds the tightened cap (p < 2^15)");
    if (f == OutputFormat::csv)
        payload << residual_csv_header << '\n';
    ResidualSummary summary;
    for_each_prime(range, [&](OddPrime p) {
        const auto t0 = std::chrono::steady_clock::now();
        Residue r = morley_residual(p);
        const auto t1 = std::chrono::steady_clock::now();
        const i64 us = with_timing
                           ? std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0)
                                 .count()
                           : 0;
        const bool zero = r.value() == 0;
        ++summary.primes;
        if (zero)
            ++summary.zeros;
        switch (f) {
        case OutputFormat::text:
            payload << "p = " << p.value() << "  residual_mod_p = " << r.value();
            if (zero)
                payload << "  # zero: holds mod p^4";
            payload << '\n';
            break;
        case OutputFormat::json: {
            ordered_json j;
            j["p"] = p.value();
            j["residual_mod_p"] = r.value();
            j["zero"] = zero;
            j["elapsed_us"] = us;
            payload << j.dump() << '\n';
            break;
        }
        case OutputFormat::csv:
            payload << p.value() << ',' << r.value() << ',' << (zero ? "true" : "false")
                    << '\n';
            break;
        }
    });
    return summary;
}

int exit_code_for(const ScanSummary& s) {
    return s.all_hold() ? 0 : 1;
}

int exit_code_for(const CongruenceReport& r) {
    for (const CheckResult& c : r.results)
        if (!c.holds)
            return 1;
    return 0;
}

} // namespace morley
