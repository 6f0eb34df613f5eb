#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "wildram/prime.hpp"
#include "wildram/rational.hpp"

namespace wildram {

/// Exponent vector for the variables x2, x3, x4.
struct Monomial {
    std::array<std::uint32_t, 3> e{0, 0, 0};

    std::uint64_t total_degree() const noexcept {
        return std::uint64_t(e[0]) + e[1] + e[2];
    }
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.e == b.e; }
};

/// Graded lexicographic order with x2 > x3 > x4 (canonical display order).
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        auto da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.e < b.e;
    }
};

/// Sparse polynomial in x2, x3, x4 over an exact coefficient ring.
/// Zero coefficients are never stored, so equal polynomials have
/// identical term maps.
template <class C>
class MultiPolyT {
public:
    using TermMap = std::map<Monomial, C, GradedLexLess>;

    MultiPolyT() = default;

    static MultiPolyT constant(const C& c) {
        MultiPolyT q;
        if (!c.is_zero()) q.terms_.emplace(Monomial{}, c);
        return q;
    }
    /// var is the variable subscript: 2, 3 or 4.
    static MultiPolyT variable(int var, const C& one) {
        if (var < 2 || var > 4) throw std::invalid_argument("MultiPolyT::variable: index must be 2, 3 or 4");
        Monomial m;
        m.e[var - 2] = 1;
        MultiPolyT q;
        q.terms_.emplace(m, one);
        return q;
    }
    static MultiPolyT term(const Monomial& m, const C& c) {
        MultiPolyT q;
        if (!c.is_zero()) q.terms_.emplace(m, c);
        return q;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    std::uint64_t total_degree() const noexcept {
        return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
    }
    std::uint32_t degree_in(int var) const {
        if (var < 2 || var > 4) throw std::invalid_argument("MultiPolyT::degree_in: index must be 2, 3 or 4");
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.e[var - 2]);
        return d;
    }

    /// Coefficient of a monomial; zero when absent (needs an exemplar for
    /// context-carrying coefficient types).
    C coeff(const Monomial& m, const C& zero) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? zero : it->second;
    }

    MultiPolyT zero_like() const { return MultiPolyT(); }
    MultiPolyT one_like() const { return constant(C(1)); }

    friend MultiPolyT operator+(const MultiPolyT& a, const MultiPolyT& b) {
        MultiPolyT r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend MultiPolyT operator-(const MultiPolyT& a, const MultiPolyT& b) {
        MultiPolyT r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend MultiPolyT operator*(const MultiPolyT& a, const MultiPolyT& b) {
        MultiPolyT r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m{{ma.e[0] + mb.e[0], ma.e[1] + mb.e[1], ma.e[2] + mb.e[2]}};
                r.add_term(m, ca * cb);
            }
        return r;
    }
    MultiPolyT operator-() const {
        MultiPolyT r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    /// Scalar multiple.
    MultiPolyT scaled(const C& s) const {
        MultiPolyT r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) {
            C sc = c * s;
            if (!sc.is_zero()) r.terms_.emplace(m, sc);
        }
        return r;
    }
    MultiPolyT pow(std::uint32_t e) const {
        MultiPolyT r = one_like();
        MultiPolyT base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const MultiPolyT& a, const MultiPolyT& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPolyT& a, const MultiPolyT& b) { return !(a == b); }

    void add_term(const Monomial& m, const C& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    TermMap terms_;
};

using MultiPoly = MultiPolyT<BigRational>;
using ModPoly = MultiPolyT<FieldElement>;

inline MultiPoly poly_x2() { return MultiPoly::variable(2, BigRational(1)); }
inline MultiPoly poly_x3() { return MultiPoly::variable(3, BigRational(1)); }
inline MultiPoly poly_x4() { return MultiPoly::variable(4, BigRational(1)); }

/// Coefficientwise reduction into F_p[x2,x3,x4]; throws when some
/// coefficient is not p-integral.
ModPoly reduce_mod_p(const MultiPoly& q, const Prime& p);

/// Reduce mod p, substitute the given values for x2, x3, x4 and evaluate.
/// vals[i] is the value of x_{i+2}.
FieldElement specialize(const MultiPoly& q, const std::array<FieldElement, 3>& vals, const Prime& p);

FieldElement evaluate(const ModPoly& q, const std::array<FieldElement, 3>& vals, const Prime& p);

/// Canonical text form, graded-lex descending: "3/2*x2^3 - x2*x4 + x3^2".
std::string to_string(const MultiPoly& q);
std::string to_string(const ModPoly& q);

/// Companion parser for the canonical text form (rational coefficients).
MultiPoly parse_multipoly(const std::string& text);

} // namespace wildram
