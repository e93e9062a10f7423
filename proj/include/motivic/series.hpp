#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "motivic/errors.hpp"
#include "motivic/ints.hpp"
#include "motivic/ring.hpp"

namespace motivic {

// A power series known exactly through t^horizon and unknown beyond it.
// Every binary operation truncates to the shorter operand; nothing ever
// extends a horizon by guessing coefficients.
template <CoefficientRing R>
class TruncatedSeries {
public:
    explicit TruncatedSeries(unsigned horizon)
        : coeffs_(static_cast<std::size_t>(horizon) + 1, ring_ops<R>::zero()) {}

    TruncatedSeries(unsigned horizon, R constant) : TruncatedSeries(horizon) {
        coeffs_[0] = std::move(constant);
    }

    static TruncatedSeries one(unsigned horizon) {
        return TruncatedSeries(horizon, ring_ops<R>::one());
    }

    // horizon = coeffs.size() - 1; the list must at least hold the constant term.
    static TruncatedSeries from_coeffs(std::vector<R> coeffs) {
        if (coeffs.empty()) throw InvalidInput("a series needs at least its constant coefficient");
        TruncatedSeries s(static_cast<unsigned>(coeffs.size() - 1));
        s.coeffs_ = std::move(coeffs);
        return s;
    }

    unsigned horizon() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const R& coeff(unsigned n) const { return coeffs_.at(n); }
    const std::vector<R>& coeffs() const { return coeffs_; }
    void set_coeff(unsigned n, R value) { coeffs_.at(n) = std::move(value); }

    TruncatedSeries truncated(unsigned h) const {
        if (h >= horizon()) return *this;
        TruncatedSeries s(h);
        std::copy(coeffs_.begin(), coeffs_.begin() + h + 1, s.coeffs_.begin());
        return s;
    }

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<R> coeffs_;
};

template <CoefficientRing R>
TruncatedSeries<R> operator+(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    unsigned h = std::min(a.horizon(), b.horizon());
    TruncatedSeries<R> r(h);
    for (unsigned n = 0; n <= h; ++n) r.set_coeff(n, a.coeff(n) + b.coeff(n));
    return r;
}

template <CoefficientRing R>
TruncatedSeries<R> operator-(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    unsigned h = std::min(a.horizon(), b.horizon());
    TruncatedSeries<R> r(h);
    for (unsigned n = 0; n <= h; ++n) r.set_coeff(n, a.coeff(n) - b.coeff(n));
    return r;
}

template <CoefficientRing R>
TruncatedSeries<R> operator-(const TruncatedSeries<R>& a) {
    TruncatedSeries<R> r(a.horizon());
    for (unsigned n = 0; n <= a.horizon(); ++n) r.set_coeff(n, -a.coeff(n));
    return r;
}

// Cauchy product truncated to the shorter horizon.
template <CoefficientRing R>
TruncatedSeries<R> operator*(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    unsigned h = std::min(a.horizon(), b.horizon());
    TruncatedSeries<R> r(h);
    for (unsigned n = 0; n <= h; ++n) {
        R acc = ring_ops<R>::zero();
        for (unsigned k = 0; k <= n; ++k) acc = acc + a.coeff(k) * b.coeff(n - k);
        r.set_coeff(n, std::move(acc));
    }
    return r;
}

// Multiplicative inverse; requires an invertible constant coefficient.
template <CoefficientRing R>
TruncatedSeries<R> series_inverse(const TruncatedSeries<R>& a) {
    if (!ring_ops<R>::is_unit(a.coeff(0)))
        throw NonUnitConstantTerm("series inverse needs a unit constant coefficient");
    R c0 = ring_ops<R>::unit_inverse(a.coeff(0));
    TruncatedSeries<R> r(a.horizon());
    r.set_coeff(0, c0);
    for (unsigned n = 1; n <= a.horizon(); ++n) {
        R acc = ring_ops<R>::zero();
        for (unsigned k = 1; k <= n; ++k) acc = acc + a.coeff(k) * r.coeff(n - k);
        r.set_coeff(n, -(c0 * acc));
    }
    return r;
}

// Integer power, negative exponents through the inverse.
template <CoefficientRing R>
TruncatedSeries<R> series_pow(const TruncatedSeries<R>& a, const Int& exponent) {
    if (exponent < 0) return series_pow(series_inverse(a), Int(-exponent));
    TruncatedSeries<R> result = TruncatedSeries<R>::one(a.horizon());
    TruncatedSeries<R> base = a;
    mpz_class e = exponent;
    while (e > 0) {
        if (mpz_tstbit(e.get_mpz_t(), 0)) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

// Assembles lambda_t(x) = sum_n lambda^n(x) t^n from a lambda provider.
// The constant coefficient is 1 by definition; coefficient 1 equalling x is
// the provider's duty and is what the axiom tests exercise.
template <CoefficientRing R, typename Provider>
TruncatedSeries<R> lambda_t(const R& x, Provider&& lambda, unsigned horizon) {
    TruncatedSeries<R> r = TruncatedSeries<R>::one(horizon);
    for (unsigned n = 1; n <= horizon; ++n) r.set_coeff(n, lambda(n, x));
    return r;
}

// num/den pair of dense polynomials (low degree first); the denominator's
// constant term must be a unit so the quotient expands as a power series.
template <CoefficientRing R>
struct RationalForm {
    std::vector<R> numerator;
    std::vector<R> denominator;
};

template <CoefficientRing R>
unsigned poly_degree(const std::vector<R>& p) {
    for (std::size_t i = p.size(); i > 0; --i)
        if (!(p[i - 1] == ring_ops<R>::zero())) return static_cast<unsigned>(i - 1);
    return 0;
}

template <CoefficientRing R>
TruncatedSeries<R> expand(const RationalForm<R>& form, unsigned horizon) {
    TruncatedSeries<R> num(horizon);
    TruncatedSeries<R> den(horizon);
    for (unsigned n = 0; n <= horizon; ++n) {
        if (n < form.numerator.size()) num.set_coeff(n, form.numerator[n]);
        if (n < form.denominator.size()) den.set_coeff(n, form.denominator[n]);
    }
    return num * series_inverse(den);
}

// exp(sum_{m>=1} counts[m-1] t^m / m) through t^horizon, computed over Q.
// Every coefficient must come out integral; the result is demoted to the
// integer ring and NonIntegralCoefficient reports the first offender.
TruncatedSeries<Int> exp_from_log_counts(const std::vector<Int>& counts, unsigned horizon);

// Minimal rational form reproducing every given coefficient, with both
// numerator and denominator degree capped by max_deg; absent when no such
// form exists. Detection runs over the kernel of the coefficient Hankel
// system, so the answer is exact, never a floating-point fit.
std::optional<RationalForm<Rat>> fit_rational_form(const std::vector<Rat>& coeffs,
                                                   unsigned max_deg);

template <CoefficientRing R>
std::ostream& operator<<(std::ostream& os, const TruncatedSeries<R>& s)
    requires requires(std::ostream& o, const R& c) { o << c; }
{
    os << "[";
    for (unsigned n = 0; n <= s.horizon(); ++n) {
        if (n) os << ", ";
        os << s.coeff(n);
    }
    return os << "] + O(t^" << s.horizon() + 1 << ")";
}

}  // namespace motivic
