#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wildram/criterion.hpp"

namespace wildram {

/// One swept series zeta + a1 zeta^2 + a2 zeta^3 + a3 zeta^4 + a4 zeta^5:
/// brute-force i_0, i_1 side by side with the closed-form verdict.
/// agreement = (verdict is two-ramified) <=> (i_1 = 2(1+p)); at the sweep's
/// working precision this is always decidable even when i_1 is only a
/// lower bound, because the bound already exceeds 2(1+p).
struct CensusRow {
    std::uint64_t p;
    std::uint64_t a1, a2, a3, a4;
    long long i0;
    bool i0_exact;
    long long i1;
    bool i1_exact;
    Verdict verdict;
    std::uint64_t criterion_value;
    bool agreement;
};

struct CensusOptions {
    Prime p;
    bool sweep_a1 = false; // also sweep a1 over F_p instead of pinning a1 = 0
    std::uint64_t cap = 20'000;
    // sample {count} rows with an mt19937_64 seeded by {seed} instead of
    // sweeping exhaustively
    std::optional<std::pair<std::uint64_t, std::uint64_t>> random = std::nullopt;
};

/// Sweep (a2,a3,a4) in F_p^3 with a2 != 0 (plus a1 when requested) in
/// lexicographic order; p in {3, 5, 7} only; refuses sweeps larger than cap.
std::vector<CensusRow> run_census(const CensusOptions& options);

/// Header p,a1,a2,a3,a4,i0,i0_exact,i1,i1_exact,verdict,criterion_value,agreement
/// plus one line per row; byte-deterministic for fixed options.
std::string census_csv(const std::vector<CensusRow>& rows);

} // namespace wildram
