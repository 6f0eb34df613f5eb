#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

#include "wildram/prime.hpp"

namespace wildram {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Models the rational elements of Q_p that the identities
/// actually produce; the p-adic valuation and the reduction map into F_p
/// are exact.
class BigRational {
public:
    BigRational() : q_(0) {}
    BigRational(long n) : q_(n) {}
    BigRational(long long n) : q_(static_cast<long>(n)) {}
    BigRational(int n) : q_(n) {}
    explicit BigRational(const mpz_class& n) : q_(n) {}
    BigRational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("BigRational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    BigRational(long num, long den) : BigRational(mpz_class(num), mpz_class(den)) {}

    /// Parses "n", "-n" or "n/d".
    static BigRational from_string(const std::string& s);

    const mpz_class num() const { return q_.get_num(); }
    const mpz_class den() const { return q_.get_den(); }
    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    BigRational zero_like() const { return BigRational(); }
    BigRational one_like() const { return BigRational(1); }

    friend BigRational operator+(const BigRational& a, const BigRational& b) { return BigRational(a.q_ + b.q_); }
    friend BigRational operator-(const BigRational& a, const BigRational& b) { return BigRational(a.q_ - b.q_); }
    friend BigRational operator*(const BigRational& a, const BigRational& b) { return BigRational(a.q_ * b.q_); }
    friend BigRational operator/(const BigRational& a, const BigRational& b) {
        if (b.is_zero()) throw std::domain_error("BigRational: division by zero");
        return BigRational(mpq_class(a.q_ / b.q_));
    }
    BigRational operator-() const { return BigRational(mpq_class(-q_)); }
    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.q_ != b.q_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }

    bool is_negative() const { return q_ < 0; }
    BigRational abs() const { return q_ < 0 ? -*this : *this; }

    /// v_p(num) - v_p(den); nullopt encodes +infinity (the zero value).
    std::optional<long> valuation(const Prime& p) const;

    /// Image in F_p; defined exactly when valuation(p) >= 0.
    FieldElement reduce_mod(const Prime& p) const;

    std::string str() const;

private:
    explicit BigRational(const mpq_class& q) : q_(q) {}
    mpq_class q_;
};

inline std::optional<long> padic_valuation(const BigRational& r, const Prime& p) { return r.valuation(p); }
inline FieldElement reduce_mod_p(const BigRational& r, const Prime& p) { return r.reduce_mod(p); }

} // namespace wildram
