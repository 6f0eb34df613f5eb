#include "wildram/multipoly.hpp"

#include <cctype>
#include <sstream>

namespace wildram {

ModPoly reduce_mod_p(const MultiPoly& q, const Prime& p) {
    ModPoly r;
    for (const auto& [m, c] : q.terms()) r.add_term(m, c.reduce_mod(p));
    return r;
}

FieldElement evaluate(const ModPoly& q, const std::array<FieldElement, 3>& vals, const Prime& p) {
    FieldElement acc(0, p);
    for (const auto& [m, c] : q.terms()) {
        FieldElement t = c;
        for (int i = 0; i < 3; ++i)
            if (m.e[i] > 0) t = t * vals[static_cast<std::size_t>(i)].pow(m.e[i]);
        acc = acc + t;
    }
    return acc;
}

FieldElement specialize(const MultiPoly& q, const std::array<FieldElement, 3>& vals, const Prime& p) {
    return evaluate(reduce_mod_p(q, p), vals, p);
}

namespace {

void append_monomial(std::ostringstream& out, const Monomial& m, bool coeff_shown) {
    bool first = !coeff_shown;
    static const char* names[3] = {"x2", "x3", "x4"};
    for (int i = 0; i < 3; ++i) {
        if (m.e[i] == 0) continue;
        if (!first) out << "*";
        first = false;
        out << names[i];
        if (m.e[i] > 1) out << "^" << m.e[i];
    }
}

// Shared term-by-term renderer; leading term first (graded-lex descending).
template <class C>
std::string render(const MultiPolyT<C>& q, bool (*negative)(const C&), std::string (*body)(const C&)) {
    if (q.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = q.terms().rbegin(); it != q.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        bool neg = negative(c);
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        std::string cs = body(c);
        bool unit_coeff = (cs == "1") && m.total_degree() > 0;
        if (!unit_coeff) out << cs;
        append_monomial(out, m, !unit_coeff);
    }
    return out.str();
}

} // namespace

std::string to_string(const MultiPoly& q) {
    return render<BigRational>(
        q, [](const BigRational& c) { return c.is_negative(); },
        [](const BigRational& c) { return c.abs().str(); });
}

std::string to_string(const ModPoly& q) {
    // residues are canonical in [0, p); no negative rendering
    return render<FieldElement>(
        q, [](const FieldElement&) { return false; },
        [](const FieldElement& c) { return c.str(); });
}

namespace {

struct PolyParser {
    const std::string& s;
    std::size_t i = 0;

    explicit PolyParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse_multipoly: " + what + " at position " + std::to_string(i) +
                                    " in \"" + s + "\"");
    }

    std::string integer_digits() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected digits");
        return s.substr(start, i - start);
    }

    std::uint32_t exponent() {
        auto d = integer_digits();
        if (d.size() > 6) fail("exponent too large");
        return static_cast<std::uint32_t>(std::stoul(d));
    }

    // factor := integer[/integer] | x2|x3|x4 [^exp]
    // term   := factor (* factor)*
    void term(MultiPoly& acc, bool negate) {
        BigRational coeff(1);
        Monomial mono;
        bool any = false;
        for (;;) {
            skip_ws();
            if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                std::string num = integer_digits();
                std::string den;
                if (eat('/')) den = integer_digits();
                coeff = coeff * (den.empty() ? BigRational(mpz_class(num))
                                             : BigRational(mpz_class(num), mpz_class(den)));
                any = true;
            } else if (i < s.size() && s[i] == 'x') {
                ++i;
                if (i >= s.size() || s[i] < '2' || s[i] > '4') fail("expected variable x2, x3 or x4");
                int var = s[i] - '0';
                ++i;
                std::uint32_t e = 1;
                if (eat('^')) e = exponent();
                mono.e[var - 2] += e;
                any = true;
            } else {
                fail("expected coefficient or variable");
            }
            if (!eat('*')) break;
        }
        if (!any) fail("empty term");
        if (negate) coeff = -coeff;
        acc.add_term(mono, coeff);
    }

    MultiPoly parse() {
        MultiPoly acc;
        skip_ws();
        if (i == s.size()) fail("empty input");
        bool neg = eat('-');
        if (!neg) eat('+');
        skip_ws();
        // lone zero constant is valid
        term(acc, neg);
        for (;;) {
            skip_ws();
            if (i == s.size()) break;
            if (eat('+')) term(acc, false);
            else if (eat('-')) term(acc, true);
            else fail("expected '+' or '-'");
        }
        return acc;
    }
};

} // namespace

MultiPoly parse_multipoly(const std::string& text) {
    return PolyParser(text).parse();
}

} // namespace wildram
