#pragma once

#include <concepts>
#include <string>

#include "rational.hpp"
#include "ypolynomial.hpp"

namespace genera {

/// Exact commutative ring containing the rationals. Everything the
/// series layer needs: ring arithmetic, scalar multiplication by a
/// Rational, structural equality, and a unit test/inverse for constant
/// terms. Models: Rational, YPolynomial.
template <typename R>
concept CoefficientRing =
    std::regular<R> &&
    requires(const R a, const R b, const Rational& q) {
        { R::zero() } -> std::convertible_to<R>;
        { R::one() } -> std::convertible_to<R>;
        { -a } -> std::convertible_to<R>;
        { a + b } -> std::convertible_to<R>;
        { a - b } -> std::convertible_to<R>;
        { a * b } -> std::convertible_to<R>;
        { a.scaled(q) } -> std::convertible_to<R>;
        { a.is_zero() } -> std::convertible_to<bool>;
        { a.is_unit() } -> std::convertible_to<bool>;
        { a.inverse() } -> std::convertible_to<R>;
        { a.str() } -> std::convertible_to<std::string>;
    };

template <CoefficientRing R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static constexpr const char* name = "rational";
};

template <>
struct RingTraits<YPolynomial> {
    static constexpr const char* name = "y_polynomial";
};

static_assert(CoefficientRing<Rational>);
static_assert(CoefficientRing<YPolynomial>);

}  // namespace genera
