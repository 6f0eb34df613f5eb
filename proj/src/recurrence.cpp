#include "wildram/recurrence.hpp"

namespace wildram {

namespace {

MultiPoly x2_pow(long long e) { return poly_x2().pow(static_cast<std::uint32_t>(e)); }

MultiPoly scalar(const BigRational& r) { return MultiPoly::constant(r); }

} // namespace

AbcState abc_initial() { return {poly_x2(), poly_x3(), poly_x4(), 1}; }

AbcState abc_step(const AbcState& s) {
    if (s.m < 1) throw std::invalid_argument("abc_step: level must be >= 1");
    long long m = s.m;
    MultiPoly x2 = poly_x2(), x3 = poly_x3(), x4 = poly_x4();
    MultiPoly a = x2.scaled(BigRational(2 * m + 1)) * s.a;
    MultiPoly b = x3.scaled(BigRational(2 * m + 1)) * s.a + x2.scaled(BigRational(2 * m + 2)) * s.b;
    // binomial(2m+1, 2) = (2m+1)m
    MultiPoly source = (x2 * x2).scaled(BigRational((2 * m + 1) * m)) + x4.scaled(BigRational(2 * m + 1));
    MultiPoly c = source * s.a + x3.scaled(BigRational(2 * m + 2)) * s.b + x2.scaled(BigRational(2 * m + 3)) * s.c;
    return {a, b, c, m + 1};
}

AbcState abc_iterated(long long m) {
    if (m < 1) throw std::invalid_argument("abc_iterated: level must be >= 1");
    AbcState s = abc_initial();
    while (s.m < m) s = abc_step(s);
    return s;
}

MultiPoly d_closed(long long m) {
    if (m < 1) throw std::invalid_argument("d_closed: level must be >= 1");
    if (m == 1) return MultiPoly();
    BigRational sum(0);
    for (long long j = 1; j <= m; ++j) sum += BigRational(j - 1, 2 * j + 1);
    return x2_pow(m + 1) * scalar(BigRational(double_factorial(2 * m + 1)) * sum);
}

MultiPoly e_closed(long long m) {
    if (m < 1) throw std::invalid_argument("e_closed: level must be >= 1");
    if (m == 1) return poly_x4();
    BigRational sum(0);
    for (long long j = 1; j <= m; ++j) sum += BigRational(1, 2 * j + 1);
    return x2_pow(m - 1) * poly_x4() * scalar(BigRational(double_factorial(2 * m + 1)) * sum);
}

MultiPoly f_closed(long long m) {
    if (m < 1) throw std::invalid_argument("f_closed: level must be >= 1");
    if (m == 1) return MultiPoly();
    BigRational sum(0);
    for (long long j = 1; j <= m; ++j)
        sum += BigRational(2 * j, 2 * j + 1) -
               BigRational(double_factorial(2 * j), double_factorial(2 * j + 1));
    return x2_pow(m - 2) * poly_x3() * poly_x3() * scalar(BigRational(double_factorial(2 * m + 1)) * sum);
}

AbcState abc_closed(long long m) {
    if (m < 1) throw std::invalid_argument("abc_closed: level must be >= 1");
    if (m == 1) return abc_initial();
    MultiPoly a = x2_pow(m) * scalar(BigRational(double_factorial(2 * m - 1)));
    MultiPoly b = x2_pow(m - 1) * poly_x3() * scalar(BigRational(r_closed(m)));
    MultiPoly c = d_closed(m) + e_closed(m) + f_closed(m);
    return {a, b, c, m};
}

DefState def_initial() { return {MultiPoly(), poly_x4(), MultiPoly(), 1}; }

DefState def_step(const DefState& s, const MultiPoly& a_m, const MultiPoly& b_m) {
    if (s.m < 1) throw std::invalid_argument("def_step: level must be >= 1");
    long long m = s.m;
    MultiPoly x2 = poly_x2(), x3 = poly_x3(), x4 = poly_x4();
    MultiPoly d = x2.scaled(BigRational(2 * m + 3)) * s.d +
                  (x2 * x2).scaled(BigRational((2 * m + 1) * m)) * a_m;
    MultiPoly e = x2.scaled(BigRational(2 * m + 3)) * s.e + x4.scaled(BigRational(2 * m + 1)) * a_m;
    MultiPoly f = x2.scaled(BigRational(2 * m + 3)) * s.f + x3.scaled(BigRational(2 * m + 2)) * b_m;
    return {d, e, f, m + 1};
}

ModPoly c_p_reduction(const Prime& p) {
    p.require_odd("c_p_reduction");
    auto e = static_cast<std::uint32_t>(p.value());
    FieldElement one(1, p);
    // x2^{p-2} x3^2 and -x2^{p-1} x4 carry unit coefficients; 3/2 may vanish (p = 3)
    ModPoly r = ModPoly::term(Monomial{{static_cast<std::uint32_t>(e - 2), 2, 0}}, one);
    r = r + ModPoly::term(Monomial{{static_cast<std::uint32_t>(e - 1), 0, 1}}, -one);
    FieldElement half_three = FieldElement(3, p) * FieldElement(2, p).inv();
    if (!half_three.is_zero())
        r = r + ModPoly::term(Monomial{{static_cast<std::uint32_t>(e + 1), 0, 0}}, half_three);
    return r;
}

} // namespace wildram
