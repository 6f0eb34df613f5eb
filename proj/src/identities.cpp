#include "wildram/identities.hpp"

#include <stdexcept>

namespace wildram {

mpz_class double_factorial(long long n) {
    if (n < 0) throw std::invalid_argument("double_factorial: negative argument");
    mpz_class r = 1;
    for (long long k = n; k >= 2; k -= 2) r *= static_cast<long>(k);
    return r;
}

BigRational r_sum(long long n) {
    if (n < 1) throw std::invalid_argument("r_sum: n must be >= 1");
    BigRational total(0);
    for (long long r = 1; r <= n; ++r) {
        BigRational prod(1);
        for (long long j = r + 1; j <= n; ++j) prod *= BigRational(2 * j, 2 * j - 1);
        total += prod;
    }
    return BigRational(double_factorial(2 * n - 1)) * total;
}

mpz_class r_closed(long long n) {
    if (n < 1) throw std::invalid_argument("r_closed: n must be >= 1");
    return double_factorial(2 * n + 1) - double_factorial(2 * n);
}

BigRational t_sum(long long n) {
    if (n < 1) throw std::invalid_argument("t_sum: n must be >= 1");
    BigRational total(0);
    for (long long j = 1; j <= n; ++j)
        total += BigRational(double_factorial(2 * j), double_factorial(2 * j + 1));
    return BigRational(double_factorial(2 * n + 1)) * total;
}

mpz_class t_closed(long long n) {
    if (n < 1) throw std::invalid_argument("t_closed: n must be >= 1");
    return double_factorial(2 * n + 2) - 2 * double_factorial(2 * n + 1);
}

BigRational s_term(const Prime& p, long long alpha, long long beta, long long j) {
    p.require_odd("s_term");
    auto pv = static_cast<long long>(p.value());
    if (j < 1 || j > pv) throw std::invalid_argument("s_term: j out of range 1..p");
    mpz_class numerator = mpz_class(static_cast<long>(alpha)) * static_cast<long>(j) +
                          static_cast<long>(beta);
    return BigRational(double_factorial(2 * pv + 1)) *
           BigRational(numerator, mpz_class(static_cast<long>(2 * j + 1)));
}

BigRational s_sum(const Prime& p, long long alpha, long long beta) {
    p.require_odd("s_sum");
    auto pv = static_cast<long long>(p.value());
    BigRational total(0);
    for (long long j = 1; j <= pv; ++j) {
        mpz_class numerator = mpz_class(static_cast<long>(alpha)) * static_cast<long>(j) +
                              static_cast<long>(beta);
        total += BigRational(numerator, mpz_class(static_cast<long>(2 * j + 1)));
    }
    return BigRational(double_factorial(2 * pv + 1)) * total;
}

BigRational wilson_constant(const Prime& p) {
    p.require_odd("wilson_constant");
    auto pv = static_cast<long long>(p.value());
    return BigRational(double_factorial(2 * pv + 1), mpz_class(static_cast<long>(pv)));
}

} // namespace wildram
