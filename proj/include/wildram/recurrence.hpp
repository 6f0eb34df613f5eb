#pragma once

#include <functional>
#include <stdexcept>

#include "wildram/identities.hpp"
#include "wildram/multipoly.hpp"
#include "wildram/prime.hpp"

namespace wildram {

/// First-order linear difference equation y_{n+1} = f(n) y_n + g(n)
/// with y at index `start` given. V needs ring operations plus
/// zero_like/one_like exemplars.
template <class V>
struct DiffEq {
    std::function<V(long long)> multiplier; // f(n)
    std::function<V(long long)> forcing;    // g(n)
    V initial;                              // y_start
    long long start;
};

/// Product/sum closed form,
///   y_n = [prod_{j=start}^{n-1} f(j)] y_start
///       + sum_{r=start}^{n-1} [prod_{j=r+1}^{n-1} f(j)] g(r),
/// evaluated with suffix products; agrees with forward iteration.
template <class V>
V solve_linear(const DiffEq<V>& eq, long long n) {
    if (n < eq.start) throw std::invalid_argument("solve_linear: index precedes start");
    V acc = eq.initial.zero_like();
    V suffix = eq.initial.one_like();
    for (long long r = n - 1; r >= eq.start; --r) {
        acc = acc + suffix * eq.forcing(r);
        suffix = suffix * eq.multiplier(r);
    }
    return acc + suffix * eq.initial;
}

/// Coefficients of the three leading terms of the m-th difference of the
/// generic series zeta + x2 zeta^3 + x3 zeta^4 + x4 zeta^5: the difference
/// opens with A_m zeta^{2m+1} + B_m zeta^{2m+2} + C_m zeta^{2m+3}.
struct AbcState {
    MultiPoly a, b, c;
    long long m;
};

/// (A_1, B_1, C_1) = (x2, x3, x4).
AbcState abc_initial();

/// One step of the lower-triangular system
///   A_{m+1} = (2m+1) x2 A_m
///   B_{m+1} = (2m+1) x3 A_m + (2m+2) x2 B_m
///   C_{m+1} = [binomial(2m+1,2) x2^2 + (2m+1) x4] A_m + (2m+2) x3 B_m + (2m+3) x2 C_m
/// using binomial(2m+1,2) = (2m+1)m in expanded form.
AbcState abc_step(const AbcState& s);

/// abc_step applied m-1 times from the initial state.
AbcState abc_iterated(long long m);

/// Closed forms: A_m = x2^m (2m-1)!!, B_m = x2^{m-1} x3 [(2m+1)!! - (2m)!!],
/// C_m = D_m + E_m + F_m (see d_closed/e_closed/f_closed).
AbcState abc_closed(long long m);

/// The three-way split of C_m. At m = 1 the split is (0, x4, 0); for m >= 2
///   D_m = x2^{m+1} (2m+1)!! sum_{j=1}^m (j-1)/(2j+1)
///   E_m = x2^{m-1} x4 (2m+1)!! sum_{j=1}^m 1/(2j+1)
///   F_m = x2^{m-2} x3^2 (2m+1)!! sum_{j=1}^m [2j/(2j+1) - (2j)!!/(2j+1)!!]
MultiPoly d_closed(long long m);
MultiPoly e_closed(long long m);
MultiPoly f_closed(long long m);

struct DefState {
    MultiPoly d, e, f;
    long long m;
};

/// (D_1, E_1, F_1) = (0, x4, 0).
DefState def_initial();

/// The split's own recurrences, sourced by A_m and B_m:
///   D_{m+1} = (2m+3) x2 D_m + binomial(2m+1,2) x2^2 A_m
///   E_{m+1} = (2m+3) x2 E_m + (2m+1) x4 A_m
///   F_{m+1} = (2m+3) x2 F_m + (2m+2) x3 B_m
/// Their sum satisfies the C recurrence.
DefState def_step(const DefState& s, const MultiPoly& a_m, const MultiPoly& b_m);

/// C_p reduced mod p collapses to x2^{p-2}(3/2 x2^3 + x3^2 - x2 x4);
/// equals reduce_mod_p(abc_closed(p).c, p). Odd p only.
ModPoly c_p_reduction(const Prime& p);

} // namespace wildram
