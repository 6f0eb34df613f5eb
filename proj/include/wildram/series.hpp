#pragma once

#include <climits>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wildram {

template <class C>
concept CoefficientRing = requires(const C& a, const C& b) {
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.zero_like() } -> std::convertible_to<C>;
    { a.one_like() } -> std::convertible_to<C>;
};

enum class OrderKind { finite, infinite, lower_bound };

/// Order of a series under truncation: the least degree with a nonzero
/// coefficient, +infinity for the exact zero series, or a lower bound
/// when every known coefficient vanishes but the tail is unknown.
struct SeriesOrder {
    OrderKind kind;
    long long value; // finite: the order; lower_bound: order >= value

    static SeriesOrder finite(long long v) { return {OrderKind::finite, v}; }
    static SeriesOrder infinite() { return {OrderKind::infinite, 0}; }
    static SeriesOrder lower_bound(long long v) { return {OrderKind::lower_bound, v}; }

    bool is_finite() const { return kind == OrderKind::finite; }
    friend bool operator==(const SeriesOrder& a, const SeriesOrder& b) {
        return a.kind == b.kind && (a.kind == OrderKind::infinite || a.value == b.value);
    }
};

/// Power series known exactly up to a stated degree. An exact series is a
/// polynomial: every coefficient past the stored range is exactly zero and
/// the series may be promoted to any working precision. A truncated series
/// knows nothing beyond its precision.
template <CoefficientRing C>
class TruncatedSeries {
public:
    /// coeffs[d] is the coefficient of zeta^d; coeffs must be non-empty.
    TruncatedSeries(std::vector<C> coeffs, bool exact_tail) : c_(std::move(coeffs)), exact_(exact_tail) {
        if (c_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
        if (exact_) trim();
    }

    static TruncatedSeries polynomial(std::vector<C> coeffs) {
        return TruncatedSeries(std::move(coeffs), true);
    }
    /// The identity series zeta (an exact polynomial).
    static TruncatedSeries identity(const C& one) {
        std::vector<C> c;
        c.push_back(one.zero_like());
        c.push_back(one);
        return polynomial(std::move(c));
    }
    static TruncatedSeries zero(const C& exemplar) {
        std::vector<C> c;
        c.push_back(exemplar.zero_like());
        return polynomial(std::move(c));
    }

    bool exact() const noexcept { return exact_; }
    /// Highest degree with a stored coefficient.
    long long stored_degree() const noexcept { return static_cast<long long>(c_.size()) - 1; }
    /// Degree through which coefficients are known; nullopt for exact
    /// polynomials (known everywhere).
    std::optional<long long> precision() const noexcept {
        if (exact_) return std::nullopt;
        return stored_degree();
    }

    /// Coefficient of zeta^d. Past the stored range this is zero for an
    /// exact polynomial and an error for a truncated series.
    C coeff(long long d) const {
        if (d < 0) throw std::out_of_range("TruncatedSeries::coeff: negative degree");
        if (d <= stored_degree()) return c_[static_cast<std::size_t>(d)];
        if (exact_) return c_[0].zero_like();
        throw std::out_of_range("TruncatedSeries::coeff: degree " + std::to_string(d) +
                                " beyond precision " + std::to_string(stored_degree()));
    }

    bool is_composable_inner() const { return c_[0].is_zero(); }
    bool is_identity() const {
        if (!exact_) return false;
        if (!c_[0].is_zero()) return false;
        if (stored_degree() < 1 || !(c_[1] == c_[0].one_like())) return false;
        for (std::size_t d = 2; d < c_.size(); ++d)
            if (!c_[d].is_zero()) return false;
        return true;
    }

    /// Same knowledge re-expressed at working precision n: exact series
    /// pad with zeros, truncated series may only shrink.
    TruncatedSeries at_precision(long long n) const {
        if (n < 0) throw std::invalid_argument("TruncatedSeries::at_precision: negative precision");
        if (!exact_ && n > stored_degree())
            throw std::invalid_argument("TruncatedSeries::at_precision: cannot extend truncated series from precision " +
                                        std::to_string(stored_degree()) + " to " + std::to_string(n));
        std::vector<C> out;
        out.reserve(static_cast<std::size_t>(n) + 1);
        for (long long d = 0; d <= n; ++d)
            out.push_back(d <= stored_degree() ? c_[static_cast<std::size_t>(d)] : c_[0].zero_like());
        return TruncatedSeries(std::move(out), false);
    }

    TruncatedSeries operator-() const {
        std::vector<C> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(-x);
        return TruncatedSeries(std::move(out), exact_);
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.combine(b, /*subtract=*/false);
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.combine(b, /*subtract=*/true);
    }

    /// Equal knowledge: same tail semantics and same known coefficients.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.exact_ != b.exact_) return false;
        if (!a.exact_ && a.stored_degree() != b.stored_degree()) return false;
        long long top = std::max(a.stored_degree(), b.stored_degree());
        for (long long d = 0; d <= top; ++d)
            if (!(a.coeff(d) == b.coeff(d))) return false;
        return true;
    }

private:
    void trim() {
        while (c_.size() > 1 && c_.back().is_zero()) c_.pop_back();
    }

    TruncatedSeries combine(const TruncatedSeries& o, bool subtract) const {
        long long top;
        bool exact = exact_ && o.exact_;
        if (exact) {
            top = std::max(stored_degree(), o.stored_degree());
        } else if (exact_) {
            top = o.stored_degree();
        } else if (o.exact_) {
            top = stored_degree();
        } else {
            top = std::min(stored_degree(), o.stored_degree());
        }
        std::vector<C> out;
        out.reserve(static_cast<std::size_t>(top) + 1);
        for (long long d = 0; d <= top; ++d) {
            C x = d <= stored_degree() ? c_[static_cast<std::size_t>(d)] : c_[0].zero_like();
            C y = d <= o.stored_degree() ? o.c_[static_cast<std::size_t>(d)] : c_[0].zero_like();
            out.push_back(subtract ? C(x - y) : C(x + y));
        }
        return TruncatedSeries(std::move(out), exact);
    }

    std::vector<C> c_;
    bool exact_;
};

/// Truncated product; the cap, when given, bounds the computed degree.
template <CoefficientRing C>
TruncatedSeries<C> mul(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b,
                       std::optional<long long> cap = std::nullopt) {
    bool exact = a.exact() && b.exact();
    long long top;
    if (exact) {
        top = a.stored_degree() + b.stored_degree();
        if (cap) top = std::min(top, *cap);
        exact = !cap || a.stored_degree() + b.stored_degree() <= *cap;
    } else {
        top = std::min(a.precision().value_or(LLONG_MAX), b.precision().value_or(LLONG_MAX));
        if (cap) top = std::min(top, *cap);
    }
    const C zero = a.coeff(0).zero_like();
    std::vector<C> out(static_cast<std::size_t>(top) + 1, zero);
    long long da = std::min(a.stored_degree(), top);
    for (long long i = 0; i <= da; ++i) {
        C ai = a.coeff(i);
        if (ai.is_zero()) continue;
        long long db = std::min(b.stored_degree(), top - i);
        for (long long j = 0; j <= db; ++j) {
            C bj = b.coeff(j);
            if (bj.is_zero()) continue;
            auto k = static_cast<std::size_t>(i + j);
            out[k] = out[k] + ai * bj;
        }
    }
    return TruncatedSeries<C>(std::move(out), exact);
}

/// outer(inner) by Horner evaluation with truncating products.
/// inner must have zero constant term. Without a precision cap two exact
/// polynomials compose exactly; any truncated input caps the result at the
/// smaller precision.
template <CoefficientRing C>
TruncatedSeries<C> compose(const TruncatedSeries<C>& outer, const TruncatedSeries<C>& inner,
                           std::optional<long long> prec = std::nullopt) {
    if (!inner.is_composable_inner())
        throw std::invalid_argument("compose: inner series must have zero constant term");

    bool exact = outer.exact() && inner.exact();
    long long cap;
    if (exact) {
        long long full = inner.stored_degree() == 0 ? 0 : outer.stored_degree() * inner.stored_degree();
        cap = prec ? std::min(full, *prec) : full;
        exact = cap == full;
    } else {
        cap = std::min(outer.precision().value_or(LLONG_MAX), inner.precision().value_or(LLONG_MAX));
        if (prec) cap = std::min(cap, *prec);
    }

    const C zero = outer.coeff(0).zero_like();
    // degrees of outer past cap only contribute beyond the cap (ord(inner) >= 1)
    long long top_outer = std::min(outer.stored_degree(), cap);

    TruncatedSeries<C> acc = TruncatedSeries<C>::zero(zero).at_precision(cap);
    for (long long k = top_outer; k >= 0; --k) {
        acc = mul(acc, inner, cap);
        C ck = outer.coeff(k);
        if (!ck.is_zero()) {
            std::vector<C> constant;
            constant.push_back(ck);
            acc = acc + TruncatedSeries<C>(std::move(constant), true);
        }
    }
    // the Horner accumulator is truncated; restore exactness when nothing was cut
    if (exact) {
        std::vector<C> out;
        out.reserve(static_cast<std::size_t>(cap) + 1);
        for (long long d = 0; d <= cap; ++d) out.push_back(acc.coeff(d));
        return TruncatedSeries<C>(std::move(out), true);
    }
    return acc;
}

/// m-fold self-composition (m >= 1).
template <CoefficientRing C>
TruncatedSeries<C> iterate(const TruncatedSeries<C>& g, long long m,
                           std::optional<long long> prec = std::nullopt) {
    if (m < 1) throw std::invalid_argument("iterate: m must be >= 1");
    if (!g.is_composable_inner())
        throw std::invalid_argument("iterate: series must have zero constant term");
    TruncatedSeries<C> h = g;
    if (prec) h = g.at_precision(std::min(*prec, g.precision().value_or(*prec)));
    TruncatedSeries<C> base = h;
    for (long long k = 1; k < m; ++k) h = compose(h, base, prec);
    return h;
}

/// The difference recurrence: Delta_1 = g - zeta and
/// Delta_m = Delta_{m-1} o g - Delta_{m-1}; Delta_p recovers g^p - zeta.
/// g must be tangent to the identity.
template <CoefficientRing C>
TruncatedSeries<C> delta(const TruncatedSeries<C>& g, long long m, long long prec) {
    if (m < 1) throw std::invalid_argument("delta: m must be >= 1");
    if (!g.is_composable_inner())
        throw std::invalid_argument("delta: series must have zero constant term");
    const C one = g.coeff(0).one_like();
    if (g.stored_degree() < 1 || !(g.coeff(1) == one))
        throw std::invalid_argument("delta: series must have linear coefficient 1");
    TruncatedSeries<C> gp = g.at_precision(std::min(prec, g.precision().value_or(prec)));
    TruncatedSeries<C> d = gp - TruncatedSeries<C>::identity(one).at_precision(prec);
    for (long long k = 2; k <= m; ++k) d = compose(d, gp, prec) - d;
    return d;
}

template <CoefficientRing C>
SeriesOrder order(const TruncatedSeries<C>& s) {
    for (long long d = 0; d <= s.stored_degree(); ++d)
        if (!s.coeff(d).is_zero()) return SeriesOrder::finite(d);
    if (s.exact()) return SeriesOrder::infinite();
    return SeriesOrder::lower_bound(s.stored_degree() + 1);
}

} // namespace wildram
