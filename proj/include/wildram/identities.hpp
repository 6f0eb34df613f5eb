#pragma once

#include <gmpxx.h>

#include "wildram/prime.hpp"
#include "wildram/rational.hpp"

namespace wildram {

/// n!! = n(n-2)!! with 0!! = 1!! = 1.
mpz_class double_factorial(long long n);

/// Definitional sum (2n-1)!! * sum_{r=1}^{n} prod_{j=r+1}^{n} 2j/(2j-1).
BigRational r_sum(long long n);
/// Closed form (2n+1)!! - (2n)!!; agrees with r_sum.
mpz_class r_closed(long long n);

/// Definitional sum (2n+1)!! * sum_{j=1}^{n} (2j)!!/(2j+1)!!.
BigRational t_sum(long long n);
/// Closed form (2n+2)!! - 2*(2n+1)!!; agrees with t_sum.
mpz_class t_closed(long long n);

/// One term of the S sum: (2p+1)!! * (alpha*j + beta)/(2j+1). Each term is
/// an integer; every term except j = (p-1)/2 is divisible by p.
BigRational s_term(const Prime& p, long long alpha, long long beta, long long j);

/// S_p(alpha, beta) = (2p+1)!! * sum_{j=1}^{p} (alpha*j + beta)/(2j+1).
/// p-integral with reduction alpha/2 - beta in F_p.
BigRational s_sum(const Prime& p, long long alpha, long long beta);

/// (2p+1)!!/p; p-adic valuation 0, reduction -1 in F_p.
BigRational wilson_constant(const Prime& p);

} // namespace wildram
