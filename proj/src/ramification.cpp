#include "wildram/ramification.hpp"

#include <stdexcept>

namespace wildram {

namespace {

constexpr long long kPrecisionLimit = 50'000'000;

void require_tangent(const FpSeries& g, const char* context) {
    if (!g.coeff(0).is_zero())
        throw std::domain_error(std::string(context) + ": series must have zero constant term");
    if (g.stored_degree() < 1 || !g.coeff(1).is_one())
        throw std::domain_error(std::string(context) + ": series must have linear coefficient 1");
}

long long clamp_to_known(const FpSeries& g, long long precision) {
    auto known = g.precision();
    return known ? std::min(precision, *known) : precision;
}

} // namespace

std::string to_string(Exactness e) {
    switch (e) {
        case Exactness::exact: return "exact";
        case Exactness::lower_bound: return "lower-bound";
        case Exactness::identity: return "identity";
    }
    throw std::logic_error("to_string(Exactness): unreachable");
}

long long default_precision(const Prime& p, long long n_max) {
    if (n_max < 0) throw std::invalid_argument("default_precision: negative level");
    long long sum = 0, power = 1;
    for (long long k = 0; k <= n_max; ++k) {
        sum += power;
        if (sum > kPrecisionLimit)
            throw std::invalid_argument("default_precision: level " + std::to_string(n_max) +
                                        " needs infeasible precision for p = " + std::to_string(p.value()));
        if (k < n_max) power *= static_cast<long long>(p.value());
    }
    return 2 * sum + 2;
}

namespace {

LevelResult level_from_difference(const FpSeries& h, const FpSeries& id, long long n) {
    SeriesOrder o = order(h - id);
    switch (o.kind) {
        case OrderKind::finite: return {n, o.value - 1, Exactness::exact};
        case OrderKind::lower_bound: return {n, o.value - 1, Exactness::lower_bound};
        case OrderKind::infinite: return {n, 0, Exactness::identity};
    }
    throw std::logic_error("level_from_difference: unreachable");
}

} // namespace

LevelResult lower_ramification(const FpSeries& g, long long n, std::optional<long long> precision) {
    if (n < 0) throw std::invalid_argument("lower_ramification: negative level");
    require_tangent(g, "lower_ramification");
    Prime p = series_modulus(g);
    if (g.exact() && g.is_identity()) return {n, 0, Exactness::identity};
    long long prec = clamp_to_known(g, precision.value_or(default_precision(p, n)));
    FpSeries h = g.at_precision(prec);
    for (long long k = 0; k < n; ++k) h = iterate(h, static_cast<long long>(p.value()), prec);
    return level_from_difference(h, FpSeries::identity(g.coeff(1)).at_precision(prec), n);
}

RamificationReport ramification_sequence(const FpSeries& g, long long n_max,
                                         std::optional<long long> precision,
                                         const std::string& series_description) {
    if (n_max < 0) throw std::invalid_argument("ramification_sequence: negative level");
    require_tangent(g, "ramification_sequence");
    Prime p = series_modulus(g);

    RamificationReport report;
    report.p = p.value();
    report.series_description = series_description;
    report.identity = g.exact() && g.is_identity();
    report.two_ramified_pattern = false;

    if (report.identity) {
        for (long long n = 0; n <= n_max; ++n) {
            report.levels.push_back({n, 0, Exactness::identity});
            report.sen_ok.emplace_back(std::nullopt);
        }
        return report;
    }

    long long prec = clamp_to_known(g, precision.value_or(default_precision(p, n_max)));
    FpSeries h = g.at_precision(prec);
    FpSeries id = FpSeries::identity(g.coeff(1)).at_precision(prec);
    for (long long n = 0; n <= n_max; ++n) {
        if (n > 0) h = iterate(h, static_cast<long long>(p.value()), prec);
        report.levels.push_back(level_from_difference(h, id, n));
    }
    report.sen_ok = sen_check(report);

    bool pattern = true;
    long long expected = 0, power = 1;
    for (const auto& level : report.levels) {
        expected += 2 * power;
        power *= static_cast<long long>(p.value());
        if (level.exactness != Exactness::exact || level.i != expected) pattern = false;
    }
    report.two_ramified_pattern = pattern;
    return report;
}

std::vector<std::optional<bool>> sen_check(const RamificationReport& report) {
    std::vector<std::optional<bool>> ok;
    mpz_class modulus = 1; // p^n at level n
    for (std::size_t n = 0; n < report.levels.size(); ++n) {
        if (n == 0) {
            ok.emplace_back(std::nullopt);
            continue;
        }
        modulus *= report.p;
        const auto& prev = report.levels[n - 1];
        const auto& cur = report.levels[n];
        if (prev.exactness != Exactness::exact || cur.exactness != Exactness::exact) {
            ok.emplace_back(std::nullopt);
            continue;
        }
        mpz_class diff = mpz_class(static_cast<long>(cur.i)) - mpz_class(static_cast<long>(prev.i));
        ok.emplace_back(mpz_class(diff % modulus) == 0);
    }
    return ok;
}

mpz_class laubie_saine_extrapolate(long long i0, long long i1, const Prime& p, long long n) {
    if (i0 < 1 || i1 < 1) throw std::invalid_argument("laubie_saine_extrapolate: levels must be positive");
    if (n < 0) throw std::invalid_argument("laubie_saine_extrapolate: negative target level");
    mpz_class pv(static_cast<unsigned long>(p.value()));
    mpz_class z0(static_cast<long>(i0)), z1(static_cast<long>(i1));
    if (z0 % pv == 0)
        throw std::domain_error("laubie_saine_extrapolate: hypothesis violated: p divides i0");
    mpz_class bound = (pv * pv - pv + 1) * z0;
    if (z1 >= bound)
        throw std::domain_error("laubie_saine_extrapolate: hypothesis violated: i1 >= (p^2-p+1)*i0");
    mpz_class pn;
    mpz_pow_ui(pn.get_mpz_t(), pv.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_class geometric = (pn - 1) / (pv - 1);
    return z0 + geometric * (z1 - z0);
}

} // namespace wildram
