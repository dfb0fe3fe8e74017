#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace genera {

/// Truncated formal power series over an exact coefficient ring.
///
/// A series of order N stores the coefficients of u^0..u^N, all exact;
/// truncation is the only information loss and the order makes it
/// explicit. Binary operations return the min of the operand orders.
/// Coefficient reads beyond the order throw instead of fabricating
/// zeros.
template <CoefficientRing R>
class PowerSeries {
public:
    /// Zero series of the given order.
    explicit PowerSeries(int order) {
        if (order < 0)
            throw std::invalid_argument("series: order must be nonnegative");
        c_.assign(static_cast<std::size_t>(order) + 1, R::zero());
    }

    static PowerSeries constant(const R& value, int order) {
        PowerSeries f(order);
        f.c_[0] = value;
        return f;
    }

    /// The series u.
    static PowerSeries identity(int order) {
        if (order < 1)
            throw std::invalid_argument("series: order must be at least 1 to hold u");
        PowerSeries f(order);
        f.c_[1] = R::one();
        return f;
    }

    static PowerSeries from_coefficients(std::vector<R> coefficients) {
        if (coefficients.empty())
            throw std::invalid_argument("series: need at least the constant coefficient");
        PowerSeries f(0);
        f.c_ = std::move(coefficients);
        return f;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const R& coeff(int k) const {
        if (k < 0 || k > order())
            throw std::out_of_range("series: coefficient of u^" + std::to_string(k) +
                                    " outside truncation order " + std::to_string(order()));
        return c_[static_cast<std::size_t>(k)];
    }

    void set_coeff(int k, R value) {
        if (k < 0 || k > order())
            throw std::out_of_range("series: coefficient of u^" + std::to_string(k) +
                                    " outside truncation order " + std::to_string(order()));
        c_[static_cast<std::size_t>(k)] = std::move(value);
    }

    const std::vector<R>& coefficients() const { return c_; }

    PowerSeries truncated(int new_order) const {
        if (new_order < 0 || new_order > order())
            throw std::invalid_argument("series: cannot truncate order " +
                                        std::to_string(order()) + " to " +
                                        std::to_string(new_order));
        PowerSeries f(new_order);
        for (int k = 0; k <= new_order; ++k)
            f.c_[k] = c_[k];
        return f;
    }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero())
                return false;
        return true;
    }

    PowerSeries operator-() const {
        PowerSeries f(order());
        for (int k = 0; k <= order(); ++k)
            f.c_[k] = -c_[k];
        return f;
    }

    PowerSeries operator+(const PowerSeries& o) const {
        int n = std::min(order(), o.order());
        PowerSeries f(n);
        for (int k = 0; k <= n; ++k)
            f.c_[k] = c_[k] + o.c_[k];
        return f;
    }

    PowerSeries operator-(const PowerSeries& o) const {
        int n = std::min(order(), o.order());
        PowerSeries f(n);
        for (int k = 0; k <= n; ++k)
            f.c_[k] = c_[k] - o.c_[k];
        return f;
    }

    PowerSeries operator*(const PowerSeries& o) const {
        int n = std::min(order(), o.order());
        PowerSeries f(n);
        for (int i = 0; i <= n; ++i) {
            if (c_[i].is_zero())
                continue;
            for (int j = 0; i + j <= n; ++j) {
                if (o.c_[j].is_zero())
                    continue;
                f.c_[i + j] = f.c_[i + j] + c_[i] * o.c_[j];
            }
        }
        return f;
    }

    PowerSeries scaled(const Rational& q) const {
        PowerSeries f(order());
        for (int k = 0; k <= order(); ++k)
            f.c_[k] = c_[k].scaled(q);
        return f;
    }

    PowerSeries scaled_by(const R& a) const {
        PowerSeries f(order());
        for (int k = 0; k <= order(); ++k)
            f.c_[k] = c_[k] * a;
        return f;
    }

    bool operator==(const PowerSeries& o) const { return c_ == o.c_; }

    /// Coefficientwise agreement up to and including u^up_to.
    bool agrees_with(const PowerSeries& o, int up_to) const {
        if (up_to > order() || up_to > o.order())
            return false;
        for (int k = 0; k <= up_to; ++k)
            if (!(c_[k] == o.c_[k]))
                return false;
        return true;
    }

    /// Substitution f(g(u)); g must vanish at 0. Exact up to the min of
    /// the two orders, evaluated Horner style.
    PowerSeries compose(const PowerSeries& g) const {
        if (!g.c_[0].is_zero())
            throw std::domain_error("series: composition needs g(0) = 0");
        int n = std::min(order(), g.order());
        PowerSeries gn = g.truncated(n);
        PowerSeries acc = constant(c_[static_cast<std::size_t>(n)], n);
        for (int k = n - 1; k >= 0; --k) {
            acc = acc * gn;
            acc.c_[0] = acc.c_[0] + c_[static_cast<std::size_t>(k)];
        }
        return acc;
    }

    /// Multiplicative inverse: f * invert(f) = 1 up to the order.
    /// The constant term must be a unit of the coefficient ring.
    PowerSeries invert() const {
        if (!c_[0].is_unit())
            throw std::domain_error("series: constant term is not invertible");
        R a0inv = c_[0].inverse();
        PowerSeries b(order());
        b.c_[0] = a0inv;
        for (int m = 1; m <= order(); ++m) {
            R s = R::zero();
            for (int k = 1; k <= m; ++k) {
                if (c_[k].is_zero())
                    continue;
                s = s + c_[k] * b.c_[m - k];
            }
            b.c_[m] = -(a0inv * s);
        }
        return b;
    }

    /// Compositional inverse: compose(f, revert(f)) = u up to the order.
    /// Needs f(0) = 0 and an invertible coefficient of u. Solves for one
    /// new coefficient per step from the identity g(f(u)) = u, keeping
    /// the powers of f incrementally.
    PowerSeries revert() const {
        if (order() < 1)
            throw std::invalid_argument("series: reversion needs order at least 1");
        if (!c_[0].is_zero())
            throw std::domain_error("series: reversion needs f(0) = 0");
        if (!c_[1].is_unit())
            throw std::domain_error("series: reversion needs an invertible coefficient of u");
        int n = order();
        R f1inv = c_[1].inverse();

        PowerSeries g(n);
        g.c_[1] = f1inv;
        PowerSeries fpow = *this;            // f^m as m advances
        PowerSeries partial = scaled_by(f1inv);  // sum_{k<m} g_k f^k
        R f1inv_pow = f1inv;                 // f_1^{-m}
        for (int m = 2; m <= n; ++m) {
            fpow = fpow * *this;
            f1inv_pow = f1inv_pow * f1inv;
            R gm = -(partial.c_[m] * f1inv_pow);
            g.c_[m] = gm;
            if (m < n)
                partial = partial + fpow.scaled_by(gm);
        }
        return g;
    }

    /// "c0 + c1*u + ... + cN*u^N" with zero terms skipped.
    std::string str(const std::string& var = "u") const {
        std::string out;
        for (int k = 0; k <= order(); ++k)
            append_term(out, c_[k], k, var);
        return out.empty() ? "0" : out;
    }

    /// Shared term formatting for series printing.
    static void append_term(std::string& out, const R& c, int power, const std::string& var) {
        if (c.is_zero())
            return;
        std::string cs = c.str();
        bool negated = false;
        if (!cs.empty() && cs[0] == '-' && cs.find_first_of("+- ", 1) == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (!out.empty())
            out += negated ? " - " : " + ";
        else if (negated)
            out += "-";
        std::string var_part;
        if (power != 0)
            var_part = power == 1 ? var : var + "^" + std::to_string(power);
        if (var_part.empty()) {
            if (cs.find(' ') != std::string::npos)
                out += "(" + cs + ")";
            else
                out += cs;
        } else if (cs == "1") {
            out += var_part;
        } else if (cs.find(' ') != std::string::npos) {
            out += "(" + cs + ")*" + var_part;
        } else {
            out += cs + "*" + var_part;
        }
    }

private:
    std::vector<R> c_;
};

}  // namespace genera
