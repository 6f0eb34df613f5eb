#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wildram/census.hpp"
#include "wildram/criterion.hpp"
#include "wildram/identities.hpp"
#include "wildram/multipoly.hpp"
#include "wildram/parse.hpp"
#include "wildram/ramification.hpp"
#include "wildram/recurrence.hpp"

using json = nlohmann::ordered_json;
using namespace wildram;

namespace {

json classification_json(std::uint64_t p, const std::string& series, const std::string& mode,
                         const Classification& cls) {
    json reasons = json::array();
    for (Reason r : cls.reasons) reasons.push_back(to_string(r));
    json out;
    out["p"] = p;
    out["series"] = series;
    out["mode"] = mode;
    out["verdict"] = to_string(cls.verdict);
    if (cls.criterion_value)
        out["criterion_value"] = cls.criterion_value->value();
    else
        out["criterion_value"] = nullptr;
    out["reasons"] = reasons;
    return out;
}

int verdict_exit_code(Verdict v) {
    switch (v) {
        case Verdict::two_ramified: return 0;
        case Verdict::not_two_ramified: return 1;
        case Verdict::rejected: return 2;
    }
    return 2;
}

int cmd_classify(std::uint64_t p_value, const std::string& series_text, bool involution,
                 bool square) {
    Prime p(p_value);
    FpSeries f = parse_series(series_text, p);
    Classification cls{};
    std::string mode;
    std::string analyzed;
    if (involution) {
        mode = "involution-square";
        analyzed = render_series(f);
        cls = classify_involution_square(f);
    } else if (square) {
        mode = "square";
        FpSeries g = compose(f, f, 5);
        analyzed = render_series(g);
        cls = classify_two_ramified(g);
    } else {
        mode = "direct";
        analyzed = render_series(f);
        cls = classify_two_ramified(f);
    }
    std::cout << classification_json(p_value, analyzed, mode, cls).dump(2) << "\n";
    return verdict_exit_code(cls.verdict);
}

int cmd_predict(std::uint64_t p_value, const std::string& series_text, bool square) {
    Prime p(p_value);
    FpSeries g = parse_series(series_text, p);
    if (square) g = compose(g, g, 5);
    auto [exponent, coefficient] = predict_leading_term(g);
    json out;
    out["p"] = p_value;
    out["series"] = render_series(g);
    out["exponent"] = exponent;
    out["coefficient"] = coefficient.value();
    out["nonzero"] = !coefficient.is_zero();
    std::cout << out.dump(2) << "\n";
    return coefficient.is_zero() ? 1 : 0;
}

int cmd_ramify(std::uint64_t p_value, const std::string& series_text, bool square,
               long long levels, std::optional<long long> precision) {
    Prime p(p_value);
    FpSeries g = parse_series(series_text, p);
    if (square) {
        long long needed = precision ? *precision : default_precision(p, levels);
        g = compose(g, g, needed);
    }
    RamificationReport report = ramification_sequence(g, levels, precision, render_series(g));

    json level_array = json::array();
    for (std::size_t k = 0; k < report.levels.size(); ++k) {
        const LevelResult& level = report.levels[k];
        json row;
        row["n"] = level.n;
        if (level.exactness == Exactness::identity)
            row["i"] = nullptr;
        else
            row["i"] = level.i;
        row["exact"] = level.exactness != Exactness::lower_bound;
        if (report.sen_ok[k])
            row["sen"] = *report.sen_ok[k];
        else
            row["sen"] = nullptr;
        level_array.push_back(row);
    }
    json out;
    out["p"] = report.p;
    out["series"] = report.series_description;
    out["source"] = series_text;
    out["identity"] = report.identity;
    out["levels"] = level_array;
    out["two_ramified_pattern"] = report.two_ramified_pattern;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_symbolic(long long level, std::optional<std::uint64_t> mod, const std::string& format) {
    AbcState s = abc_closed(level);
    std::string a, b, c;
    if (mod) {
        Prime p(*mod);
        a = to_string(reduce_mod_p(s.a, p));
        b = to_string(reduce_mod_p(s.b, p));
        c = to_string(reduce_mod_p(s.c, p));
    } else {
        a = to_string(s.a);
        b = to_string(s.b);
        c = to_string(s.c);
    }
    if (format == "json") {
        json out;
        out["m"] = level;
        if (mod)
            out["mod"] = *mod;
        else
            out["mod"] = nullptr;
        out["A"] = a;
        out["B"] = b;
        out["C"] = c;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "A_" << level << " = " << a << "\n"
                  << "B_" << level << " = " << b << "\n"
                  << "C_" << level << " = " << c << "\n";
    }
    return 0;
}

std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t max_p) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t q = 3; q <= max_p; q += 2)
        if (is_prime_u64(q)) ps.push_back(q);
    return ps;
}

int cmd_verify_identities(long long max_n, std::uint64_t max_p) {
    auto primes = odd_primes_up_to(max_p);
    json results = json::array();
    bool all_ok = true;

    auto record = [&](const std::string& identity, const std::string& range, bool ok) {
        results.push_back({{"identity", identity}, {"range", range}, {"status", ok ? "ok" : "failed"}});
        all_ok = all_ok && ok;
    };

    {
        bool ok = true;
        for (long long n = 1; n <= max_n && ok; ++n)
            ok = r_sum(n) == BigRational(r_closed(n)) && t_sum(n) == BigRational(t_closed(n));
        record("r_sum equals r_closed and t_sum equals t_closed",
               "n = 1.." + std::to_string(max_n), ok);
    }
    {
        bool ok = true;
        for (std::uint64_t q : primes) {
            Prime p(q);
            auto n = static_cast<long long>(q);
            ok = ok && BigRational(r_closed(n)).reduce_mod(p).is_zero() &&
                 BigRational(t_closed(n)).reduce_mod(p).is_zero();
        }
        record("r_closed and t_closed vanish mod p at n = p",
               "odd p <= " + std::to_string(max_p), ok);
    }
    {
        bool ok = true;
        for (std::uint64_t q : primes) {
            Prime p(q);
            FieldElement half = FieldElement(2, p).inv();
            for (long long alpha = -10; alpha <= 10 && ok; ++alpha)
                for (long long beta = -10; beta <= 10 && ok; ++beta) {
                    BigRational s = s_sum(p, alpha, beta);
                    auto v = s.valuation(p);
                    bool integral = !v || *v >= 0;
                    FieldElement expected =
                        FieldElement(alpha, p) * half - FieldElement(beta, p);
                    ok = integral && s.reduce_mod(p) == expected;
                }
            if (!ok) break;
        }
        record("s_sum is p-integral and reduces to alpha/2 - beta",
               "odd p <= " + std::to_string(max_p) + ", alpha, beta in [-10, 10]", ok);
    }
    {
        // terms are linear in (alpha, beta), so the two generator terms
        // (1,0) and (0,1) cover every integer pair
        bool ok = true;
        for (std::uint64_t q : primes) {
            Prime p(q);
            auto diagonal = static_cast<long long>((q - 1) / 2);
            for (long long j = 1; j <= static_cast<long long>(q) && ok; ++j) {
                if (j == diagonal) continue;
                auto v1 = s_term(p, 1, 0, j).valuation(p);
                auto v2 = s_term(p, 0, 1, j).valuation(p);
                ok = (!v1 || *v1 >= 1) && (!v2 || *v2 >= 1);
            }
            if (!ok) break;
        }
        record("every s_sum term except j = (p-1)/2 lies in p Z_p",
               "odd p <= " + std::to_string(max_p) + ", all integer alpha, beta", ok);
    }
    {
        bool ok = true;
        for (std::uint64_t q : primes) {
            Prime p(q);
            BigRational w = wilson_constant(p);
            auto v = w.valuation(p);
            ok = v && *v == 0 &&
                 w.reduce_mod(p) == -FieldElement(1, p);
            if (!ok) break;
        }
        record("wilson constant (2p+1)!!/p reduces to -1", "odd p <= " + std::to_string(max_p), ok);
    }

    std::cout << results.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

json census_row_json(const CensusRow& r) {
    json row;
    row["p"] = r.p;
    row["a1"] = r.a1;
    row["a2"] = r.a2;
    row["a3"] = r.a3;
    row["a4"] = r.a4;
    row["i0"] = r.i0;
    row["i0_exact"] = r.i0_exact;
    row["i1"] = r.i1;
    row["i1_exact"] = r.i1_exact;
    row["verdict"] = to_string(r.verdict);
    row["criterion_value"] = r.criterion_value;
    row["agreement"] = r.agreement;
    return row;
}

int cmd_census(std::uint64_t p_value, bool sweep_a1, std::uint64_t cap,
               std::optional<std::uint64_t> random_count, std::uint64_t seed,
               const std::string& format) {
    CensusOptions options{Prime(p_value), sweep_a1, cap, std::nullopt};
    if (random_count) options.random = {{*random_count, seed}};
    std::vector<CensusRow> rows = run_census(options);

    if (format == "json") {
        json out = json::array();
        for (const CensusRow& r : rows) out.push_back(census_row_json(r));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << census_csv(rows);
    }
    for (const CensusRow& r : rows)
        if (!r.agreement) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lower ramification numbers of power series over F_p and the closed-form "
                 "2-ramified classifiers"};
    app.require_subcommand(1);

    std::uint64_t p_value = 0;
    std::string series_text;
    bool involution = false;
    bool square = false;
    long long levels = 2;
    long long precision = -1;
    long long level = 1;
    std::uint64_t mod_value = 0;
    std::string format;
    long long max_n = 200;
    std::uint64_t max_p = 97;
    bool sweep_a1 = false;
    std::uint64_t cap = 20'000;
    std::uint64_t random_count = 0;
    std::uint64_t seed = 0;

    CLI::App* classify = app.add_subcommand("classify", "Closed-form 2-ramified verdict for a series");
    classify->add_option("--p", p_value, "Prime modulus")->required();
    classify->add_option("--series", series_text, "Series in z, e.g. \"z - 2*z^3 + z^4\"")->required();
    CLI::Option* inv_flag =
        classify->add_flag("--involution", involution,
                           "Classify the square of a series with linear coefficient -1");
    classify->add_flag("--square", square, "Compose the series with itself before classifying")
        ->excludes(inv_flag);

    CLI::App* predict = app.add_subcommand("predict", "Leading term of the p-th iterate minus z");
    predict->add_option("--p", p_value, "Prime modulus")->required();
    predict->add_option("--series", series_text, "Series in z with zero z^2 coefficient")->required();
    predict->add_flag("--square", square, "Compose the series with itself first");

    CLI::App* ramify = app.add_subcommand("ramify", "Brute-force lower ramification numbers");
    ramify->add_option("--p", p_value, "Prime modulus")->required();
    ramify->add_option("--series", series_text, "Series in z")->required();
    ramify->add_flag("--square", square, "Compose the series with itself first");
    ramify->add_option("--levels", levels, "Highest level n to compute")->check(CLI::Range(0, 6));
    ramify->add_option("--precision", precision, "Working precision override")
        ->check(CLI::Range(1LL, 50'000'000LL));

    CLI::App* symbolic = app.add_subcommand("symbolic", "Leading-coefficient polynomials A_m, B_m, C_m");
    symbolic->add_option("--level", level, "Difference level m")->required()->check(CLI::Range(1, 300));
    symbolic->add_option("--mod", mod_value, "Reduce the coefficients mod this prime");
    symbolic->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* verify = app.add_subcommand("verify-identities", "Check the sum identities over ranges");
    verify->add_option("--max-n", max_n, "Upper bound for n sweeps")->check(CLI::Range(1, 2'000));
    verify->add_option("--max-p", max_p, "Upper bound for prime sweeps")->check(CLI::Range(3, 1'000));

    CLI::App* census = app.add_subcommand("census", "Sweep low-degree series and compare verdicts");
    census->add_option("--p", p_value, "Prime modulus (3, 5 or 7)")->required();
    census->add_flag("--sweep-a1", sweep_a1, "Sweep a1 over F_p instead of pinning a1 = 0");
    census->add_option("--cap", cap, "Refuse sweeps with more rows than this");
    CLI::Option* random_opt =
        census->add_option("--random", random_count, "Sample this many random rows instead");
    census->add_option("--seed", seed, "Seed for --random")->needs(random_opt);
    census->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return cmd_classify(p_value, series_text, involution, square);
        if (predict->parsed()) return cmd_predict(p_value, series_text, square);
        if (ramify->parsed())
            return cmd_ramify(p_value, series_text, square, levels,
                              precision < 0 ? std::nullopt : std::optional<long long>(precision));
        if (symbolic->parsed())
            return cmd_symbolic(level, mod_value == 0 ? std::nullopt : std::optional<std::uint64_t>(mod_value),
                                format.empty() ? "text" : format);
        if (verify->parsed()) return cmd_verify_identities(max_n, max_p);
        if (census->parsed())
            return cmd_census(p_value, sweep_a1, cap,
                              random_count == 0 ? std::nullopt : std::optional<std::uint64_t>(random_count),
                              seed, format.empty() ? "csv" : format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
