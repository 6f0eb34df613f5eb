#include "wildram/criterion.hpp"

#include <stdexcept>

namespace wildram {

namespace {

void require_degree_five(const FpSeries& s, const char* context) {
    if (!s.exact() && s.stored_degree() < 5)
        throw std::invalid_argument(std::string(context) +
                                    ": coefficients through degree 5 required, series known only to degree " +
                                    std::to_string(s.stored_degree()));
}

struct LowCoefficients {
    FieldElement a1, a2, a3, a4;
};

LowCoefficients low_coefficients(const FpSeries& s) {
    return {s.coeff(2), s.coeff(3), s.coeff(4), s.coeff(5)};
}

} // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::two_ramified: return "two-ramified";
        case Verdict::not_two_ramified: return "not-two-ramified";
        case Verdict::rejected: return "rejected";
    }
    throw std::logic_error("to_string(Verdict): unreachable");
}

std::string to_string(Reason r) {
    switch (r) {
        case Reason::a1_nonzero: return "a1-nonzero";
        case Reason::a2_zero: return "a2-zero";
        case Reason::criterion_zero: return "criterion-zero";
        case Reason::p_even: return "p-even";
        case Reason::identity_series: return "identity-series";
    }
    throw std::logic_error("to_string(Reason): unreachable");
}

FieldElement two_ramified_criterion(const FieldElement& a2, const FieldElement& a3,
                                    const FieldElement& a4) {
    Prime p(a2.modulus());
    p.require_odd("two_ramified_criterion");
    FieldElement half_three = FieldElement(3, p) * FieldElement(2, p).inv();
    return half_three * a2 * a2 * a2 + a3 * a3 - a2 * a4;
}

Classification classify_two_ramified(const FpSeries& g) {
    Prime p = series_modulus(g);
    if (!p.is_odd()) return {Verdict::rejected, std::nullopt, {Reason::p_even}};
    if (!g.coeff(0).is_zero() || g.stored_degree() < 1 || !g.coeff(1).is_one())
        throw std::domain_error("classify_two_ramified: series must be tangent to the identity");
    require_degree_five(g, "classify_two_ramified");

    auto [a1, a2, a3, a4] = low_coefficients(g);
    FieldElement crit = two_ramified_criterion(a2, a3, a4);

    std::vector<Reason> reasons;
    if (!a1.is_zero()) reasons.push_back(Reason::a1_nonzero);
    if (a2.is_zero()) reasons.push_back(Reason::a2_zero);
    if (crit.is_zero()) reasons.push_back(Reason::criterion_zero);

    Verdict verdict = reasons.empty() ? Verdict::two_ramified : Verdict::not_two_ramified;
    return {verdict, crit, std::move(reasons)};
}

std::pair<long long, FieldElement> predict_leading_term(const FpSeries& g) {
    Prime p = series_modulus(g);
    p.require_odd("predict_leading_term");
    if (!g.coeff(0).is_zero() || g.stored_degree() < 1 || !g.coeff(1).is_one())
        throw std::domain_error("predict_leading_term: series must be tangent to the identity");
    require_degree_five(g, "predict_leading_term");

    auto [a1, a2, a3, a4] = low_coefficients(g);
    if (!a1.is_zero())
        throw std::domain_error("predict_leading_term: coefficient of zeta^2 must vanish");
    FieldElement lead = a2.pow(p.value() - 2) * two_ramified_criterion(a2, a3, a4);
    return {2 * static_cast<long long>(p.value()) + 3, lead};
}

FieldElement involution_square_criterion(const FieldElement& a1, const FieldElement& a2,
                                         const FieldElement& a3, const FieldElement& a4) {
    Prime p(a1.modulus());
    p.require_odd("involution_square_criterion");
    FieldElement u = a1 * a1 + a2;
    FieldElement bracket = FieldElement(11, p) * a1.pow(4) + FieldElement(25, p) * a1 * a1 * a2 +
                           FieldElement(12, p) * a1 * a3 + FieldElement(6, p) * a2 * a2 +
                           FieldElement(4, p) * a4;
    return u * bracket;
}

Classification classify_involution_square(const FpSeries& f) {
    Prime p = series_modulus(f);
    if (!p.is_odd()) return {Verdict::rejected, std::nullopt, {Reason::p_even}};
    FieldElement minus_one = -f.coeff(0).one_like();
    if (!f.coeff(0).is_zero() || f.stored_degree() < 1 || !(f.coeff(1) == minus_one))
        throw std::domain_error("classify_involution_square: series must have linear coefficient -1");
    // exact polynomials are stored trimmed, so degree 1 means f = -zeta exactly
    if (f.exact() && f.stored_degree() == 1)
        return {Verdict::rejected, std::nullopt, {Reason::identity_series}};
    require_degree_five(f, "classify_involution_square");

    auto [a1, a2, a3, a4] = low_coefficients(f);
    FieldElement value = involution_square_criterion(a1, a2, a3, a4);

    // zero factor (a1^2 + a2) is exactly a vanishing zeta^3 coefficient of the square
    std::vector<Reason> reasons;
    if ((a1 * a1 + a2).is_zero()) reasons.push_back(Reason::a2_zero);
    if (value.is_zero()) reasons.push_back(Reason::criterion_zero);

    Verdict verdict = reasons.empty() ? Verdict::two_ramified : Verdict::not_two_ramified;
    return {verdict, value, std::move(reasons)};
}

FpSeries expand_involution_square(const FpSeries& f) {
    Prime p = series_modulus(f);
    p.require_odd("expand_involution_square");
    FieldElement one = f.coeff(0).one_like();
    if (!f.coeff(0).is_zero() || f.stored_degree() < 1 || !(f.coeff(1) == -one))
        throw std::domain_error("expand_involution_square: series must have linear coefficient -1");
    require_degree_five(f, "expand_involution_square");

    auto [a1, a2, a3, a4] = low_coefficients(f);
    FieldElement zero = one.zero_like();
    FieldElement two(2, p), three(3, p), six(6, p);
    std::vector<FieldElement> c;
    c.push_back(zero);                                          // 1
    c.push_back(one);                                           // zeta
    c.push_back(zero);                                          // zeta^2
    c.push_back(-(two * (a1 * a1 + a2)));                       // zeta^3
    c.push_back(a1 * a1 * a1 + a1 * a2);                        // zeta^4
    c.push_back(three * a2 * a2 - six * a1 * a3 - a1 * a1 * a2 - two * a4); // zeta^5
    return FpSeries(std::move(c), /*exact_tail=*/false);
}

} // namespace wildram
