#include "motivic/graded.hpp"

#include <cstdlib>

namespace motivic {

std::ostream& operator<<(std::ostream& os, const GradedElement& x) {
    if (x.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [p, v] : x.dims()) {
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        Int a = abs(v);
        first = false;
        if (p == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << "s";
        if (p > 1) os << "^" << p;
    }
    return os;
}

Int sym_dim(const Int& dim, unsigned power) {
    if (dim < 0) throw NegativeDimension("sym_dim of dimension " + to_decimal(dim));
    return binomial(dim + Int(power) - 1, power);
}

Int ext_dim(const Int& dim, unsigned power) {
    if (dim < 0) throw NegativeDimension("ext_dim of dimension " + to_decimal(dim));
    return binomial(dim, power);
}

namespace {

// lambda_t of a single piece of honest dimension |dim| in fixed degree,
// inverted afterwards when the piece is virtual.
TruncatedSeries<GradedElement> piece_series(unsigned degree, const Int& dim, unsigned horizon) {
    Int honest = abs(dim);
    const bool even = degree % 2 == 0;
    TruncatedSeries<GradedElement> s(horizon);
    for (unsigned i = 0; i <= horizon; ++i) {
        Int d = even ? sym_dim(honest, i) : ext_dim(honest, i);
        s.set_coeff(i, GradedElement::monomial(degree * i, std::move(d)));
        if (!even && Int(i) > honest) break;  // exterior powers above the dimension vanish
    }
    if (dim < 0) return series_inverse(s);
    return s;
}

}  // namespace

TruncatedSeries<GradedElement> lambda_graded_series(const GradedElement& x, unsigned horizon) {
    TruncatedSeries<GradedElement> result = TruncatedSeries<GradedElement>::one(horizon);
    for (const auto& [p, v] : x.dims()) result = result * piece_series(p, v, horizon);
    return result;
}

GradedElement lambda_graded(unsigned n, const GradedElement& x) {
    return lambda_graded_series(x, n).coeff(n);
}

GradedElement adams_graded(unsigned k, const GradedElement& x) {
    if (k == 0) throw InvalidInput("adams_graded needs k >= 1");
    TruncatedSeries<GradedElement> f = lambda_graded_series(x, k);
    // t f'/f; the constant coefficient of f is 1, so no division is needed
    // beyond the series inverse over Z[s] itself.
    TruncatedSeries<GradedElement> tfp(k);
    for (unsigned n = 1; n <= k; ++n)
        tfp.set_coeff(n, GradedElement::constant(Int(n)) * f.coeff(n));
    return (tfp * series_inverse(f)).coeff(k);
}

}  // namespace motivic
