#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morley/harmonic.hpp"
#include "morley/modular.hpp"

namespace morley {

/// Every congruence this library can verify. The enumerator order is the
/// canonical order used by `--checks all` and by reports.
enum class CheckId : u8 {
    morley,
    morley_mod_p2,
    fermat_little,
    wilson,
    lucas_spot,
    wolstenholme,
    lemma1,
    lemma2a,
    lemma2b,
    eq2_expansion,
    eq3_lh,
    eq4_rh,
    eq5_reduction,
    parity_decomposition,
    bas_exact,
    granville_identity,
    skula,
    rq_chain,
    skula_route_morley,
};

inline constexpr std::size_t check_id_count = 19;

std::span<const CheckId> all_check_ids();
std::string_view check_name(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view name);

/// The k of the modulus p^k the check's witnesses live under.
int check_modulus_power(CheckId id);

/// Which inverse tables a check wants from the shared per-prime cache.
struct CacheNeeds {
    bool mod_p = false;
    bool mod_p_squared = false;
};
CacheNeeds cache_needs(CheckId id);
CacheNeeds cache_needs(std::span<const CheckId> ids);

/// Outcome of one check: holds iff lhs and rhs are equal canonical residues.
/// A failure is data, not an error — the witnesses say what went wrong.
struct CheckResult {
    CheckId id;
    bool holds;
    Residue lhs;
    Residue rhs;
    std::string note; // optional diagnostic (failing index, injected fault, ...)
};

CheckResult make_check_result(CheckId id, const Residue& lhs, const Residue& rhs,
                              std::string note = {});

/// Run one check against the shared cache (which must have been built with
/// at least cache_needs(id)).
CheckResult run_check(CheckId id, const HarmonicCache& cache);

/// sign·C(p-1,(p-1)/2) ≡ 2^(2p-2) (mod p³), sign = (-1)^((p-1)/2).
CheckResult morley_check(OddPrime p);

/// (Σ_{even i} 1/i)² ≡ Σ_{0<j<i<p} (-1)^i/(ij) (mod p).
CheckResult eq5_reduction_check(OddPrime p);

/// fermat_little, wilson and lucas_spot, in that order.
std::vector<CheckResult> classical_suite(OddPrime p);

/// True when p is inside the tightened mod-p⁴ cap (p < 2^15) that the
/// residual needs.
bool residual_supported(OddPrime p);

/// ((sign·C(p-1,(p-1)/2) - 2^(2p-2)) / p³) mod p, computed from both
/// quantities mod p⁴. Zero flags a coincidence one power of p past the
/// theorem. Throws std::range_error outside the p < 2^15 cap; not_divisible
/// would contradict the theorem and therefore signals a bug.
Residue morley_residual(OddPrime p);

/// Per-prime record: the requested checks in request order, their witnesses
/// and timings, and the residual when p is inside the mod-p⁴ cap.
struct CongruenceReport {
    OddPrime p;
    std::vector<CheckResult> results;
    std::vector<i64> check_elapsed_us; // parallel to results
    std::optional<Residue> residual;   // mod p; nullopt when p >= 2^15
    i64 elapsed_us = 0;
};

/// Runs every requested check over one shared cache. Never aborts on a
/// failed check. Honors the MORLEYSCAN_FAULT_INJECT=<check_id> environment
/// hook (testing aid: perturbs that check's rhs by one).
CongruenceReport full_report(OddPrime p, std::span<const CheckId> checks);

} // namespace morley
