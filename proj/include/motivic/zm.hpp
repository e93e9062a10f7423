#pragma once

#include <map>
#include <ostream>

#include "motivic/errors.hpp"
#include "motivic/graded.hpp"
#include "motivic/ring.hpp"
#include "motivic/series.hpp"

namespace motivic {

// A basis element of the monoid algebra below: an integer polynomial in s
// with constant term exactly 1. The monoid operation is plain polynomial
// multiplication, which preserves the constant term. Coefficients in
// positive degrees may be negative.
class MElement {
public:
    MElement() : poly_(ring_ops<GradedElement>::one()) {}

    explicit MElement(GradedElement poly) : poly_(std::move(poly)) {
        if (poly_.coeff(0) != 1)
            throw InvalidInput("monoid elements need constant term 1");
    }

    const GradedElement& poly() const { return poly_; }
    unsigned degree() const { return poly_.degree(); }
    Int coeff(unsigned degree) const { return poly_.coeff(degree); }

    MElement operator*(const MElement& other) const { return MElement(poly_ * other.poly_); }

    bool operator==(const MElement&) const = default;

private:
    GradedElement poly_;
};

inline bool operator<(const MElement& a, const MElement& b) {
    return compare(a.poly(), b.poly()) < 0;
}

std::ostream& operator<<(std::ostream& os, const MElement& m);

// The free Z-module on monoid basis elements, multiplied bilinearly. No
// division and no factorization happen here; equality of formal fractions
// is decided by cross-multiplication instead (group_eq_crossmul).
class ZMElement {
public:
    ZMElement() = default;

    static ZMElement basis(MElement m) {
        ZMElement x;
        x.terms_.emplace(std::move(m), Int(1));
        return x;
    }

    static ZMElement scaled(MElement m, Int coefficient) {
        ZMElement x;
        if (coefficient != 0) x.terms_.emplace(std::move(m), std::move(coefficient));
        return x;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<MElement, Int>& terms() const { return terms_; }

    ZMElement& operator+=(const ZMElement& other) {
        for (const auto& [m, c] : other.terms_) {
            auto it = terms_.find(m);
            if (it == terms_.end()) {
                terms_.emplace(m, c);
            } else {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }

    ZMElement operator+(const ZMElement& other) const {
        ZMElement r = *this;
        r += other;
        return r;
    }

    ZMElement operator-() const {
        ZMElement r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    ZMElement operator-(const ZMElement& other) const { return *this + (-other); }

    ZMElement operator*(const ZMElement& other) const {
        ZMElement r;
        for (const auto& [m, c] : terms_)
            for (const auto& [n, d] : other.terms_) {
                MElement prod = m * n;
                Int coeff = c * d;
                auto it = r.terms_.find(prod);
                if (it == r.terms_.end()) {
                    r.terms_.emplace(std::move(prod), std::move(coeff));
                } else {
                    it->second += coeff;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        return r;
    }

    bool operator==(const ZMElement&) const = default;

private:
    std::map<MElement, Int> terms_;
};

std::ostream& operator<<(std::ostream& os, const ZMElement& x);

template <>
struct ring_ops<ZMElement> {
    static ZMElement zero() { return ZMElement(); }
    static ZMElement one() { return ZMElement::basis(MElement()); }
    static bool is_unit(const ZMElement& x) {
        return x.terms().size() == 1 && x.terms().begin()->first == MElement() &&
               ring_ops<Int>::is_unit(x.terms().begin()->second);
    }
    static ZMElement unit_inverse(const ZMElement& x) {
        if (!is_unit(x)) throw Error("element of the monoid algebra is not a unit");
        return x;
    }
};

inline ZMElement zm_mul(const ZMElement& a, const ZMElement& b) { return a * b; }

// lambda_t through t^horizon. On a basis element the operations act through
// the grading of its polynomial, landing on basis elements again; integer
// combinations follow the addition rule, negative multiples the series
// inverse.
TruncatedSeries<ZMElement> lambda_zm_series(const ZMElement& x, unsigned horizon);

ZMElement lambda_zm(unsigned n, const ZMElement& x);

// Equality of a/b and c/d in the group completion, decided without any
// division: a d == b c as elements of the algebra.
bool group_eq_crossmul(const ZMElement& a, const ZMElement& b, const ZMElement& c,
                       const ZMElement& d);

}  // namespace motivic
