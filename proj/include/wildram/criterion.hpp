#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wildram/fpseries.hpp"

namespace wildram {

enum class Verdict { two_ramified, not_two_ramified, rejected };
enum class Reason { a1_nonzero, a2_zero, criterion_zero, p_even, identity_series };

std::string to_string(Verdict v);
std::string to_string(Reason r);

/// Outcome of a closed-form test. criterion_value is absent exactly when
/// the test does not apply (p = 2).
struct Classification {
    Verdict verdict;
    std::optional<FieldElement> criterion_value;
    std::vector<Reason> reasons;
};

/// The coefficient convention throughout: for a series tangent to the
/// identity, g = zeta + a1 zeta^2 + a2 zeta^3 + a3 zeta^4 + a4 zeta^5 + ...;
/// for a series with linear coefficient -1, f = -zeta + a1 zeta^2 + ....

/// 3/2 a2^3 + a3^2 - a2 a4 over F_p, p odd.
FieldElement two_ramified_criterion(const FieldElement& a2, const FieldElement& a3,
                                    const FieldElement& a4);

/// A series tangent to the identity is 2-ramified (i_n = 2(1+p+...+p^n)
/// for all n) iff a1 = 0, a2 != 0 and the criterion value is nonzero.
/// Needs coefficients through degree 5; p = 2 is rejected.
Classification classify_two_ramified(const FpSeries& g);

/// Leading term of g^p - zeta for g = zeta + a2 zeta^3 + a3 zeta^4 + ...:
/// the coefficients of zeta^{2p+1} and zeta^{2p+2} vanish and the returned
/// pair is (2p+3, a2^{p-2} (3/2 a2^3 + a3^2 - a2 a4)). Requires a1 = 0.
std::pair<long long, FieldElement> predict_leading_term(const FpSeries& g);

/// (a1^2 + a2)(11 a1^4 + 25 a1^2 a2 + 12 a1 a3 + 6 a2^2 + 4 a4) over F_p.
FieldElement involution_square_criterion(const FieldElement& a1, const FieldElement& a2,
                                         const FieldElement& a3, const FieldElement& a4);

/// For f with linear coefficient -1: f(f(zeta)) is 2-ramified iff the
/// involution-square criterion is nonzero. f = -zeta exactly squares to
/// the identity and is rejected.
Classification classify_involution_square(const FpSeries& f);

/// Degree-5 expansion of f(f(zeta)) for f with linear coefficient -1:
///   zeta - 2(a1^2+a2) zeta^3 + (a1^3 + a1 a2) zeta^4
///        + (3 a2^2 - 6 a1 a3 - a1^2 a2 - 2 a4) zeta^5
/// as a series truncated at degree 5; equals compose(f, f) there.
FpSeries expand_involution_square(const FpSeries& f);

} // namespace wildram
