#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wildram {

bool is_prime_u64(std::uint64_t n);

/// A verified prime modulus. Construction runs a deterministic
/// Miller-Rabin test; composite or trivial inputs are refused.
class Prime {
public:
    explicit Prime(std::uint64_t p) : p_(p) {
        if (!is_prime_u64(p))
            throw std::invalid_argument("Prime: " + std::to_string(p) + " is not prime");
    }

    std::uint64_t value() const noexcept { return p_; }
    bool is_odd() const noexcept { return p_ != 2; }

    /// Guard for results stated only for odd primes.
    void require_odd(const char* context) const {
        if (p_ == 2)
            throw std::domain_error(std::string(context) + ": p = 2 is not supported (odd primes only)");
    }

    friend bool operator==(const Prime& a, const Prime& b) noexcept { return a.p_ == b.p_; }
    friend bool operator!=(const Prime& a, const Prime& b) noexcept { return a.p_ != b.p_; }

private:
    std::uint64_t p_;
};

/// Residue in F_p, canonical representative in [0, p). The modulus
/// travels with the value; mixing moduli throws.
class FieldElement {
public:
    FieldElement(std::int64_t value, const Prime& p) : p_(p.value()) {
        std::int64_t m = static_cast<std::int64_t>(p_);
        std::int64_t r = value % m;
        if (r < 0) r += m;
        v_ = static_cast<std::uint64_t>(r);
    }

    std::uint64_t value() const noexcept { return v_; }
    std::uint64_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1 % p_; }

    FieldElement zero_like() const { return FieldElement(0, 0, p_); }
    FieldElement one_like() const { return FieldElement(0, 1 % p_, p_); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        std::uint64_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return FieldElement(0, s, a.p_);
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        std::uint64_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_;
        return FieldElement(0, s, a.p_);
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        unsigned __int128 w = static_cast<unsigned __int128>(a.v_) * b.v_;
        return FieldElement(0, static_cast<std::uint64_t>(w % a.p_), a.p_);
    }
    FieldElement operator-() const {
        return FieldElement(0, v_ == 0 ? 0 : p_ - v_, p_);
    }

    /// Multiplicative inverse; throws on zero.
    FieldElement inv() const;
    /// a^e by binary exponentiation, e >= 0.
    FieldElement pow(std::uint64_t e) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        a.check_same(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

private:
    // Trusted already-reduced constructor; the int tag keeps it out of the public overload set.
    FieldElement(int, std::uint64_t v, std::uint64_t p) : v_(v), p_(p) {}

    void check_same(const FieldElement& o) const {
        if (p_ != o.p_)
            throw std::invalid_argument("FieldElement: mixed moduli " + std::to_string(p_) +
                                        " and " + std::to_string(o.p_));
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

inline FieldElement field_element(std::int64_t v, const Prime& p) { return FieldElement(v, p); }

} // namespace wildram
