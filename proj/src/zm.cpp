#include "motivic/zm.hpp"

namespace motivic {

std::ostream& operator<<(std::ostream& os, const MElement& m) {
    return os << "<" << m.poly() << ">";
}

std::ostream& operator<<(std::ostream& os, const ZMElement& x) {
    if (x.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        if (a != 1) os << a.get_str() << "*";
        os << m;
    }
    return os;
}

TruncatedSeries<ZMElement> lambda_zm_series(const ZMElement& x, unsigned horizon) {
    TruncatedSeries<ZMElement> result = TruncatedSeries<ZMElement>::one(horizon);
    for (const auto& [m, c] : x.terms()) {
        TruncatedSeries<GradedElement> graded = lambda_graded_series(m.poly(), horizon);
        TruncatedSeries<ZMElement> base(horizon);
        for (unsigned n = 0; n <= horizon; ++n)
            base.set_coeff(n, ZMElement::basis(MElement(graded.coeff(n))));
        result = result * series_pow(base, c);
    }
    return result;
}

ZMElement lambda_zm(unsigned n, const ZMElement& x) { return lambda_zm_series(x, n).coeff(n); }

bool group_eq_crossmul(const ZMElement& a, const ZMElement& b, const ZMElement& c,
                       const ZMElement& d) {
    return a * d == b * c;
}

}  // namespace motivic
