#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace genera {

/// Univariate polynomial in the formal variable y with rational
/// coefficients. The zero polynomial is the empty coefficient list;
/// otherwise the highest stored coefficient is nonzero, so equality is
/// structural. Evaluation and arithmetic are exact.
class YPolynomial {
public:
    YPolynomial() = default;
    explicit YPolynomial(const Rational& c) { set_from({c}); }
    explicit YPolynomial(long long c) { set_from({Rational(c)}); }

    /// coefficients[k] is the coefficient of y^k; trailing zeros are stripped.
    static YPolynomial from_coefficients(std::vector<Rational> coefficients);
    static YPolynomial y();

    static YPolynomial zero() { return YPolynomial(); }
    static YPolynomial one() { return YPolynomial(Rational(1)); }

    /// No value for the zero polynomial.
    std::optional<int> degree() const;
    Rational coeff(int k) const;
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const { return c_.empty(); }

    /// Units of Q[y] are the nonzero constants.
    bool is_unit() const { return c_.size() == 1; }
    YPolynomial inverse() const;

    YPolynomial operator-() const;
    YPolynomial operator+(const YPolynomial& o) const;
    YPolynomial operator-(const YPolynomial& o) const;
    YPolynomial operator*(const YPolynomial& o) const;
    YPolynomial& operator+=(const YPolynomial& o) { return *this = *this + o; }
    YPolynomial& operator-=(const YPolynomial& o) { return *this = *this - o; }
    YPolynomial& operator*=(const YPolynomial& o) { return *this = *this * o; }

    YPolynomial scaled(const Rational& q) const;

    bool operator==(const YPolynomial& o) const { return c_ == o.c_; }

    Rational eval(const Rational& at) const;

    /// Human-readable form, e.g. "1 - y + y^2"; "0" for zero.
    std::string str() const;

private:
    void set_from(std::vector<Rational> coefficients);
    std::vector<Rational> c_;
};

}  // namespace genera
