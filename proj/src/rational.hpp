#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace genera {

/// Exact rational number backed by GMP.
///
/// Values are always canonical: numerator and denominator coprime,
/// denominator strictly positive, zero stored as 0/1. Equality is
/// therefore structural. All operations are exact; division by zero
/// throws instead of trapping inside GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n);
    Rational(long long num, long long den);

    /// Parses "p/q" or "p" (decimal, optional leading '-'). Rejects
    /// anything else, including whitespace and a zero denominator.
    static Rational from_string(std::string_view s);

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    /// Nonzero rationals are exactly the units of Q.
    bool is_unit() const { return !is_zero(); }
    Rational inverse() const;

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    /// Ring-interface hook: multiplication by a rational scalar.
    Rational scaled(const Rational& q) const { return *this * q; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    /// Exact binomial coefficient C(n, k); n may be negative
    /// (generalized binomial, n(n-1)...(n-k+1)/k!).
    static Rational binomial(long long n, unsigned long k);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

}  // namespace genera
