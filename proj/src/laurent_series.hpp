#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "power_series.hpp"

namespace genera {

/// Truncated Laurent series over an exact coefficient ring.
///
/// Coefficients are known exactly on a window of exponents: everything
/// strictly below the stored range is exactly zero, everything above
/// window_high() is lost to truncation, and reading there throws. The
/// window survives arithmetic conservatively; in particular addition
/// that cancels leading terms shrinks the stored range but keeps the
/// reliable upper bound, and a sum cancelling to nothing is the zero
/// series with its window still recorded.
template <CoefficientRing R>
class LaurentSeries {
public:
    /// Zero on every exponent up to and including window_high.
    static LaurentSeries zero(int window_high) {
        LaurentSeries a;
        a.lo_ = window_high + 1;
        a.hi_ = window_high;
        return a;
    }

    /// u^shift * f, reliable through exponent shift + order(f).
    static LaurentSeries from_power_series(const PowerSeries<R>& f, int shift = 0) {
        LaurentSeries a;
        a.lo_ = shift;
        a.hi_ = shift + f.order();
        a.c_ = f.coefficients();
        a.normalize();
        return a;
    }

    /// Multiplicative inverse of a power series of any valuation:
    /// u^v * U with U(0) a unit inverts to u^-v * U^-1.
    static LaurentSeries reciprocal_of(const PowerSeries<R>& f) {
        int v = -1;
        for (int k = 0; k <= f.order(); ++k) {
            if (!f.coeff(k).is_zero()) {
                v = k;
                break;
            }
        }
        if (v < 0)
            throw std::domain_error("laurent: zero series has no reciprocal");
        PowerSeries<R> unit(f.order() - v);
        for (int k = v; k <= f.order(); ++k)
            unit.set_coeff(k - v, f.coeff(k));
        return from_power_series(unit.invert(), -v);
    }

    int window_low() const { return lo_; }
    int window_high() const { return hi_; }

    /// Lowest exponent with a nonzero coefficient; nothing when the
    /// series is zero throughout its window.
    std::optional<int> valuation() const {
        if (c_.empty())
            return std::nullopt;
        return lo_;
    }

    bool is_zero_on_window() const { return c_.empty(); }

    /// Exact coefficient of u^m. Below the window it is genuinely zero;
    /// beyond window_high() it is unknown and the read throws.
    R coeff(int m) const {
        if (m > hi_)
            throw std::out_of_range("laurent: coefficient of u^" + std::to_string(m) +
                                    " beyond reliable window (u^" + std::to_string(hi_) + ")");
        if (m < lo_)
            return R::zero();
        return c_[static_cast<std::size_t>(m - lo_)];
    }

    LaurentSeries operator-() const {
        LaurentSeries a = *this;
        for (auto& c : a.c_)
            c = -c;
        return a;
    }

    LaurentSeries operator+(const LaurentSeries& o) const {
        int hi = std::min(hi_, o.hi_);
        int lo = std::min(std::min(lo_, o.lo_), hi + 1);
        LaurentSeries a;
        a.lo_ = lo;
        a.hi_ = hi;
        a.c_.assign(static_cast<std::size_t>(hi - lo + 1), R::zero());
        for (int m = lo; m <= hi; ++m) {
            R s = R::zero();
            if (m >= lo_ && m <= hi_ && m - lo_ < static_cast<int>(c_.size()))
                s = s + c_[static_cast<std::size_t>(m - lo_)];
            if (m >= o.lo_ && m <= o.hi_ && m - o.lo_ < static_cast<int>(o.c_.size()))
                s = s + o.c_[static_cast<std::size_t>(m - o.lo_)];
            a.c_[static_cast<std::size_t>(m - lo)] = s;
        }
        a.normalize();
        return a;
    }

    LaurentSeries operator-(const LaurentSeries& o) const { return *this + (-o); }

    LaurentSeries operator*(const LaurentSeries& o) const {
        // O(u^k) factors only shift the guaranteed-zero window.
        if (c_.empty() || o.c_.empty()) {
            int hi = c_.empty() ? (o.c_.empty() ? hi_ + o.hi_ + 1 : hi_ + o.lo_)
                                : lo_ + o.hi_;
            return zero(hi);
        }
        int span = std::min(hi_ - lo_, o.hi_ - o.lo_);
        PowerSeries<R> ua = unit_part().truncated(span);
        PowerSeries<R> ub = o.unit_part().truncated(span);
        return from_power_series(ua * ub, lo_ + o.lo_);
    }

    bool operator==(const LaurentSeries& o) const {
        return lo_ == o.lo_ && hi_ == o.hi_ && c_ == o.c_;
    }

    std::string str(const std::string& var = "u") const {
        std::string out;
        for (int m = lo_; m <= hi_; ++m)
            PowerSeries<R>::append_term(out, c_[static_cast<std::size_t>(m - lo_)], m, var);
        return out.empty() ? "0" : out;
    }

private:
    LaurentSeries() : lo_(1), hi_(0) {}

    PowerSeries<R> unit_part() const {
        return PowerSeries<R>::from_coefficients(c_);
    }

    void normalize() {
        std::size_t skip = 0;
        while (skip < c_.size() && c_[skip].is_zero())
            ++skip;
        if (skip == c_.size()) {
            c_.clear();
            lo_ = hi_ + 1;
            return;
        }
        if (skip > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(skip));
            lo_ += static_cast<int>(skip);
        }
    }

    int lo_;             // lowest stored exponent; coefficients below are exactly 0
    int hi_;             // highest reliable exponent
    std::vector<R> c_;   // coefficients of u^lo_ .. u^hi_; empty means zero-on-window
};

}  // namespace genera
