#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "laurent_series.hpp"
#include "power_series.hpp"
#include "ring.hpp"

namespace genera {

/// A multiplicative genus, pinned down by its values on the complex
/// projective spaces: cp_values[m-1] = h([CP(m)]). The value on a point
/// is 1 and is not stored.
template <CoefficientRing R>
struct GenusSpec {
    std::string name;
    std::vector<R> cp_values;

    const R& cp_value(int m) const {
        if (m < 1 || static_cast<std::size_t>(m) > cp_values.size())
            throw std::invalid_argument("genus '" + name + "': no value for CP(" +
                                        std::to_string(m) + ")");
        return cp_values[static_cast<std::size_t>(m - 1)];
    }
};

/// The genus logarithm g_h(u) = u + sum_{m>=1} h([CP(m)])/(m+1) u^{m+1},
/// truncated at the given order. Needs cp_values through CP(order-1).
template <CoefficientRing R>
PowerSeries<R> genus_log_series(const GenusSpec<R>& h, int order) {
    if (order < 1)
        throw std::invalid_argument("genus: log series needs order at least 1");
    PowerSeries<R> g = PowerSeries<R>::identity(order);
    for (int k = 2; k <= order; ++k)
        g.set_coeff(k, h.cp_value(k - 1).scaled(Rational(1, k)));
    return g;
}

/// The per-weight factor of the fixed-point sum: the series
/// g_h^{-1}(j * g_h(u)). Valuation 1, leading coefficient j.
template <CoefficientRing R>
PowerSeries<R> weight_factor(const GenusSpec<R>& h, long long j, int order) {
    if (j == 0)
        throw std::domain_error("weight zero: fixed point not isolated");
    PowerSeries<R> g = genus_log_series(h, order);
    return g.revert().compose(g.scaled(Rational(j)));
}

/// Binomial expansion of 1 - (1-u)^j, valid for any nonzero integer j
/// (negative j through the generalized binomial series). Agrees with
/// weight_factor for the Todd genus.
PowerSeries<Rational> todd_weight_factor_closed_form(long long j, int order);

/// Memoizes the expensive parts of the fixed-point sum for one genus at
/// one truncation order: the reverted logarithm, the per-weight factors
/// and their Laurent reciprocals.
template <CoefficientRing R>
class WeightFactorTable {
public:
    WeightFactorTable(GenusSpec<R> h, int order)
        : h_(std::move(h)),
          order_(order),
          g_(genus_log_series(h_, order)),
          g_reverted_(g_.revert()) {}

    const GenusSpec<R>& genus() const { return h_; }
    int order() const { return order_; }

    const PowerSeries<R>& factor(long long j) {
        auto it = factors_.find(j);
        if (it != factors_.end())
            return it->second;
        if (j == 0)
            throw std::domain_error("weight zero: fixed point not isolated");
        PowerSeries<R> f = g_reverted_.compose(g_.scaled(Rational(j)));
        return factors_.emplace(j, std::move(f)).first->second;
    }

    const LaurentSeries<R>& reciprocal(long long j) {
        auto it = reciprocals_.find(j);
        if (it != reciprocals_.end())
            return it->second;
        LaurentSeries<R> r = LaurentSeries<R>::reciprocal_of(factor(j));
        return reciprocals_.emplace(j, std::move(r)).first->second;
    }

private:
    GenusSpec<R> h_;
    int order_;
    PowerSeries<R> g_;
    PowerSeries<R> g_reverted_;
    std::map<long long, PowerSeries<R>> factors_;
    std::map<long long, LaurentSeries<R>> reciprocals_;
};

/// chi_y([CP(m)]) = 1 - y + y^2 - ... + (-y)^m.
YPolynomial chi_y_cp_value(int m);

/// Built-in genera, with values supplied through CP(m_max). Signature
/// and Euler are the y = 1 and y = -1 specializations of chi_y, so all
/// three share one source of truth; Todd (y = 0) has value 1 on every
/// CP(m).
GenusSpec<Rational> todd_genus(int m_max);
GenusSpec<YPolynomial> chi_y_genus(int m_max);
GenusSpec<Rational> signature_genus(int m_max);
GenusSpec<Rational> euler_genus(int m_max);

}  // namespace genera
