#pragma once

#include <map>
#include <ostream>
#include <vector>

#include "motivic/errors.hpp"
#include "motivic/ints.hpp"
#include "motivic/ring.hpp"
#include "motivic/series.hpp"

namespace motivic {

// An N-graded virtual vector space with finite support, written as the
// integer polynomial sum_p dim_p * s^p. Dimensions may be negative (virtual
// summands); zero dimensions are never stored, so equality is structural.
//
// The super convention drives everything downstream: a generator in even
// degree behaves like an ordinary line (symmetric powers survive), one in
// odd degree like an exterior line (squares vanish). Concretely, for a
// single piece of dimension v in degree p,
//
//   lambda^i(v s^p) = sym_dim(v, i) s^{ip}   for even p,
//   lambda^i(v s^p) = ext_dim(v, i) s^{ip}   for odd p,
//
// sums of pieces follow the addition rule lambda^n(x+y) =
// sum_{i+j=n} lambda^i(x) lambda^j(y), and negative pieces are resolved by
// inverting the lambda_t series of their positive counterpart.
class GradedElement {
public:
    GradedElement() = default;

    static GradedElement constant(Int value) { return monomial(0, std::move(value)); }

    static GradedElement monomial(unsigned degree, Int dim) {
        GradedElement x;
        if (dim != 0) x.dims_[degree] = std::move(dim);
        return x;
    }

    // dims[p] is the dimension in degree p.
    static GradedElement from_dense(const std::vector<Int>& dims) {
        GradedElement x;
        for (std::size_t p = 0; p < dims.size(); ++p)
            if (dims[p] != 0) x.dims_[static_cast<unsigned>(p)] = dims[p];
        return x;
    }

    bool is_zero() const { return dims_.empty(); }

    // Top degree carrying a nonzero dimension; 0 for the zero element.
    unsigned degree() const { return dims_.empty() ? 0 : dims_.rbegin()->first; }

    Int coeff(unsigned degree) const {
        auto it = dims_.find(degree);
        return it == dims_.end() ? Int(0) : it->second;
    }

    const std::map<unsigned, Int>& dims() const { return dims_; }

    std::vector<Int> dense() const {
        std::vector<Int> out(dims_.empty() ? 1 : degree() + 1, Int(0));
        for (const auto& [p, v] : dims_) out[p] = v;
        return out;
    }

    GradedElement& operator+=(const GradedElement& other) {
        for (const auto& [p, v] : other.dims_) {
            auto it = dims_.find(p);
            if (it == dims_.end()) {
                dims_.emplace(p, v);
            } else {
                it->second += v;
                if (it->second == 0) dims_.erase(it);
            }
        }
        return *this;
    }

    GradedElement operator+(const GradedElement& other) const {
        GradedElement r = *this;
        r += other;
        return r;
    }

    GradedElement operator-() const {
        GradedElement r;
        for (const auto& [p, v] : dims_) r.dims_[p] = -v;
        return r;
    }

    GradedElement operator-(const GradedElement& other) const { return *this + (-other); }

    GradedElement operator*(const GradedElement& other) const {
        GradedElement r;
        for (const auto& [p, v] : dims_)
            for (const auto& [q, w] : other.dims_) {
                Int prod = v * w;
                auto it = r.dims_.find(p + q);
                if (it == r.dims_.end()) {
                    r.dims_.emplace(p + q, std::move(prod));
                } else {
                    it->second += prod;
                    if (it->second == 0) r.dims_.erase(it);
                }
            }
        return r;
    }

    bool operator==(const GradedElement&) const = default;

private:
    std::map<unsigned, Int> dims_;
};

// Total order used wherever graded elements serve as map keys.
inline int compare(const GradedElement& a, const GradedElement& b) {
    auto ia = a.dims().begin(), ib = b.dims().begin();
    for (; ia != a.dims().end() && ib != b.dims().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c;
    }
    if (ia != a.dims().end()) return 1;
    if (ib != b.dims().end()) return -1;
    return 0;
}

inline bool operator<(const GradedElement& a, const GradedElement& b) {
    return compare(a, b) < 0;
}

std::ostream& operator<<(std::ostream& os, const GradedElement& x);

template <>
struct ring_ops<GradedElement> {
    static GradedElement zero() { return GradedElement(); }
    static GradedElement one() { return GradedElement::constant(Int(1)); }
    static bool is_unit(const GradedElement& x) {
        return x.dims().size() == 1 && x.dims().begin()->first == 0 &&
               ring_ops<Int>::is_unit(x.dims().begin()->second);
    }
    static GradedElement unit_inverse(const GradedElement& x) {
        if (!is_unit(x)) throw Error("graded element is not a unit");
        return x;  // the only units are the constants +1 and -1
    }
};

// dim Sym^power of an ordinary space: binomial(dim + power - 1, power).
Int sym_dim(const Int& dim, unsigned power);

// dim Lambda^power of an ordinary space: binomial(dim, power).
Int ext_dim(const Int& dim, unsigned power);

// lambda_t(x) through t^horizon, as the product over the pieces of x.
TruncatedSeries<GradedElement> lambda_graded_series(const GradedElement& x, unsigned horizon);

GradedElement lambda_graded(unsigned n, const GradedElement& x);

// Adams operation in the sigma convention: psi^k(x) is the coefficient of
// t^k in t (d/dt) log lambda_t(x). On a degree-p line this yields
// (-1)^{(k-1) p} s^{kp}, so even lines go to s^{kp} and odd lines pick up
// the alternating sign. (The classical variant runs the same derivative
// against sigma_t = 1/lambda_{-t}; only the sigma convention is exposed,
// and the operations agree up to that sign.) Additivity is structural;
// multiplicativity on products is checked empirically, never assumed.
GradedElement adams_graded(unsigned k, const GradedElement& x);

}  // namespace motivic
