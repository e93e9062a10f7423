#pragma once

#include <concepts>

#include "motivic/errors.hpp"
#include "motivic/ints.hpp"

namespace motivic {

// Customization point for the exact commutative rings that can serve as
// series coefficients. A specialization provides the constants plus the
// unit predicate; the arithmetic itself comes from operator overloads.
template <typename R>
struct ring_ops;

template <typename R>
concept CoefficientRing = requires(const R& a, const R& b) {
    { ring_ops<R>::zero() } -> std::convertible_to<R>;
    { ring_ops<R>::one() } -> std::convertible_to<R>;
    { ring_ops<R>::is_unit(a) } -> std::convertible_to<bool>;
    { ring_ops<R>::unit_inverse(a) } -> std::convertible_to<R>;
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    requires std::copy_constructible<R>;
};

template <>
struct ring_ops<Int> {
    static Int zero() { return Int(0); }
    static Int one() { return Int(1); }
    static bool is_unit(const Int& x) { return x == 1 || x == -1; }
    static Int unit_inverse(const Int& x) {
        if (!is_unit(x)) throw Error("integer " + to_decimal(x) + " has no inverse");
        return x;
    }
};

template <>
struct ring_ops<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_unit(const Rat& x) { return x != 0; }
    static Rat unit_inverse(const Rat& x) {
        if (x == 0) throw Error("division by zero");
        return Rat(1) / x;
    }
};

}  // namespace motivic
