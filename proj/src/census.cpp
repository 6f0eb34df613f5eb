#include "wildram/census.hpp"

#include <random>
#include <stdexcept>

#include "wildram/ramification.hpp"

namespace wildram {

namespace {

CensusRow census_row(const Prime& p, std::uint64_t a1, std::uint64_t a2, std::uint64_t a3,
                     std::uint64_t a4) {
    std::vector<FieldElement> coeffs{
        FieldElement(0, p), FieldElement(1, p),
        FieldElement(static_cast<std::int64_t>(a1), p), FieldElement(static_cast<std::int64_t>(a2), p),
        FieldElement(static_cast<std::int64_t>(a3), p), FieldElement(static_cast<std::int64_t>(a4), p)};
    FpSeries g(std::move(coeffs), /*exact_tail=*/true);

    Classification cls = classify_two_ramified(g);
    RamificationReport brute = ramification_sequence(g, 1, default_precision(p, 1));

    const LevelResult& l0 = brute.levels[0];
    const LevelResult& l1 = brute.levels[1];
    long long target = 2 * (1 + static_cast<long long>(p.value()));
    bool brute_two_ramified_at_one = l1.exactness == Exactness::exact && l1.i == target;
    if (l1.exactness == Exactness::lower_bound && l1.i <= target)
        throw std::logic_error("census_row: precision too low to decide i1 against 2(1+p)");

    CensusRow row;
    row.p = p.value();
    row.a1 = a1;
    row.a2 = a2;
    row.a3 = a3;
    row.a4 = a4;
    row.i0 = l0.i;
    row.i0_exact = l0.exactness == Exactness::exact;
    row.i1 = l1.i;
    row.i1_exact = l1.exactness == Exactness::exact;
    row.verdict = cls.verdict;
    row.criterion_value = cls.criterion_value.value().value();
    row.agreement = (cls.verdict == Verdict::two_ramified) == brute_two_ramified_at_one;
    return row;
}

} // namespace

std::vector<CensusRow> run_census(const CensusOptions& options) {
    std::uint64_t pv = options.p.value();
    if (pv != 3 && pv != 5 && pv != 7)
        throw std::invalid_argument("run_census: p must be 3, 5 or 7");

    std::vector<CensusRow> rows;

    if (options.random) {
        auto [count, seed] = *options.random;
        if (count > options.cap)
            throw std::invalid_argument("run_census: sample count exceeds cap " +
                                        std::to_string(options.cap));
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint64_t> any(0, pv - 1);
        std::uniform_int_distribution<std::uint64_t> nonzero(1, pv - 1);
        rows.reserve(count);
        for (std::uint64_t k = 0; k < count; ++k)
            rows.push_back(census_row(options.p, options.sweep_a1 ? any(rng) : 0, nonzero(rng),
                                      any(rng), any(rng)));
        return rows;
    }

    std::uint64_t size = (options.sweep_a1 ? pv : 1) * (pv - 1) * pv * pv;
    if (size > options.cap)
        throw std::invalid_argument("run_census: sweep of " + std::to_string(size) +
                                    " rows exceeds cap " + std::to_string(options.cap));
    rows.reserve(size);
    for (std::uint64_t a1 = 0; a1 < (options.sweep_a1 ? pv : 1); ++a1)
        for (std::uint64_t a2 = 1; a2 < pv; ++a2)
            for (std::uint64_t a3 = 0; a3 < pv; ++a3)
                for (std::uint64_t a4 = 0; a4 < pv; ++a4)
                    rows.push_back(census_row(options.p, a1, a2, a3, a4));
    return rows;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
    std::string out = "p,a1,a2,a3,a4,i0,i0_exact,i1,i1_exact,verdict,criterion_value,agreement\n";
    for (const CensusRow& r : rows) {
        out += std::to_string(r.p) + ',' + std::to_string(r.a1) + ',' + std::to_string(r.a2) + ',' +
               std::to_string(r.a3) + ',' + std::to_string(r.a4) + ',' + std::to_string(r.i0) + ',' +
               (r.i0_exact ? "true" : "false") + ',' + std::to_string(r.i1) + ',' +
               (r.i1_exact ? "true" : "false") + ',' + to_string(r.verdict) + ',' +
               std::to_string(r.criterion_value) + ',' + (r.agreement ? "true" : "false") + '\n';
    }
    return out;
}

} // namespace wildram
