#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "wildram/fpseries.hpp"

namespace wildram {

enum class Exactness { exact, lower_bound, identity };

std::string to_string(Exactness e);

/// One level of the ramification sequence. `i` is i_n when exact, a bound
/// i_n >= i when lower_bound, and meaningless when the series is the
/// identity (every iterate fixes everything).
struct LevelResult {
    long long n;
    long long i;
    Exactness exactness;
};

struct RamificationReport {
    std::uint64_t p;
    std::string series_description;
    bool identity;                           // input is exactly the series zeta
    std::vector<LevelResult> levels;         // levels 0..n_max
    std::vector<std::optional<bool>> sen_ok; // [0] is null; null when a side is inexact
    bool two_ramified_pattern;               // i_n = 2(1+p+...+p^n) at every level, all exact
};

/// Working precision that pins i_n for a candidate 2-ramified series:
/// 2(1+p+...+p^n) + 2.
long long default_precision(const Prime& p, long long n_max);

/// i_n(g) = order(g^{p^n} - zeta) - 1 by brute-force iteration. The p^n-th
/// iterate is built as n successive p-fold self-compositions. Precision
/// defaults to default_precision and never exceeds what g knows.
LevelResult lower_ramification(const FpSeries& g, long long n,
                               std::optional<long long> precision = std::nullopt);

/// All levels 0..n_max plus congruence checks and the pattern verdict.
RamificationReport ramification_sequence(const FpSeries& g, long long n_max,
                                         std::optional<long long> precision = std::nullopt,
                                         const std::string& series_description = "");

/// Congruence i_n = i_{n-1} (mod p^n) per level; null where undecidable.
std::vector<std::optional<bool>> sen_check(const RamificationReport& report);

/// i_n = i_0 + (p^n - 1)/(p - 1) * (i_1 - i_0), valid when p does not
/// divide i_0 and i_1 < (p^2 - p + 1) i_0; violations throw naming the
/// failed hypothesis.
mpz_class laubie_saine_extrapolate(long long i0, long long i1, const Prime& p, long long n);

} // namespace wildram
