#include "wildram/parse.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace wildram {

namespace {

constexpr long long kMaxExponent = 100'000;

struct SeriesParser {
    const std::string& s;
    std::size_t pos = 0;
    const Prime& p;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_series: " + what + " at position " + std::to_string(pos));
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        if (pos - start > 18) fail("integer literal too long");
        return std::stoll(s.substr(start, pos - start));
    }

    // term := integer ['*'] [zpart] | zpart; returns (degree, coefficient)
    std::pair<long long, FieldElement> term() {
        skip_ws();
        FieldElement coeff(1, p);
        bool have_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = FieldElement(integer(), p);
            have_coeff = true;
            skip_ws();
            if (eat('*')) skip_ws();
        }
        if (pos < s.size() && s[pos] == 'z') {
            ++pos;
            long long e = 1;
            skip_ws();
            if (eat('^')) {
                e = integer();
                if (e < 0 || e > kMaxExponent) fail("exponent out of range");
            }
            return {e, coeff};
        }
        if (!have_coeff) fail("expected a term");
        return {0, coeff};
    }

    FpSeries parse() {
        std::vector<FieldElement> coeffs;
        coeffs.push_back(FieldElement(0, p));
        bool first = true;
        while (true) {
            skip_ws();
            if (pos >= s.size()) {
                if (first) fail("empty series");
                break;
            }
            bool negative = false;
            if (eat('-')) {
                negative = true;
            } else if (!eat('+') && !first) {
                fail("expected + or -");
            }
            auto [degree, coeff] = term();
            if (negative) coeff = -coeff;
            if (static_cast<std::size_t>(degree) >= coeffs.size())
                coeffs.resize(static_cast<std::size_t>(degree) + 1, FieldElement(0, p));
            coeffs[static_cast<std::size_t>(degree)] = coeffs[static_cast<std::size_t>(degree)] + coeff;
            first = false;
        }
        return FpSeries(std::move(coeffs), /*exact_tail=*/true);
    }
};

} // namespace

FpSeries parse_series(const std::string& text, const Prime& p) {
    SeriesParser parser{text, 0, p};
    return parser.parse();
}

SeriesLiteral parse_series_literal(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c, const char* what) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw std::invalid_argument("parse_series_literal: expected " + std::string(what) +
                                        " at position " + std::to_string(pos));
        ++pos;
    };

    expect('p', "'p'");
    expect('=', "'='");
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("parse_series_literal: expected a prime after p=");
    Prime p(std::stoull(text.substr(start, pos - start)));
    expect(';', "';'");

    skip_ws();
    start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
    if (pos == start) throw std::invalid_argument("parse_series_literal: expected a series name");
    std::string name = text.substr(start, pos - start);
    expect('=', "'='");

    return {p, parse_series(text.substr(pos), p), name};
}

std::string render_series(const FpSeries& g) {
    std::string out;
    for (long long d = 0; d <= g.stored_degree(); ++d) {
        FieldElement c = g.coeff(d);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (d == 0) {
            out += c.str();
            continue;
        }
        if (!c.is_one()) out += c.str() + "*";
        out += "z";
        if (d > 1) out += "^" + std::to_string(d);
    }
    return out.empty() ? "0" : out;
}

} // namespace wildram
