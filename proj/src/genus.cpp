#include "genus.hpp"

#include <algorithm>

namespace genera {

PowerSeries<Rational> todd_weight_factor_closed_form(long long j, int order) {
    if (j == 0)
        throw std::domain_error("weight zero: fixed point not isolated");
    if (order < 1)
        throw std::invalid_argument("genus: weight factor needs order at least 1");
    // 1 - (1-u)^j = sum_{k>=1} (-1)^{k+1} C(j,k) u^k
    PowerSeries<Rational> f(order);
    for (int k = 1; k <= order; ++k) {
        Rational c = Rational::binomial(j, static_cast<unsigned long>(k));
        f.set_coeff(k, k % 2 == 0 ? -c : c);
    }
    return f;
}

YPolynomial chi_y_cp_value(int m) {
    std::vector<Rational> c;
    c.reserve(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k)
        c.emplace_back(k % 2 == 0 ? 1 : -1);
    return YPolynomial::from_coefficients(std::move(c));
}

GenusSpec<Rational> todd_genus(int m_max) {
    GenusSpec<Rational> h{"todd", {}};
    h.cp_values.assign(static_cast<std::size_t>(std::max(m_max, 0)), Rational(1));
    return h;
}

GenusSpec<YPolynomial> chi_y_genus(int m_max) {
    GenusSpec<YPolynomial> h{"chi_y", {}};
    h.cp_values.reserve(static_cast<std::size_t>(std::max(m_max, 0)));
    for (int m = 1; m <= m_max; ++m)
        h.cp_values.push_back(chi_y_cp_value(m));
    return h;
}

GenusSpec<Rational> signature_genus(int m_max) {
    GenusSpec<Rational> h{"signature", {}};
    h.cp_values.reserve(static_cast<std::size_t>(std::max(m_max, 0)));
    for (int m = 1; m <= m_max; ++m)
        h.cp_values.push_back(chi_y_cp_value(m).eval(Rational(1)));
    return h;
}

GenusSpec<Rational> euler_genus(int m_max) {
    GenusSpec<Rational> h{"euler", {}};
    h.cp_values.reserve(static_cast<std::size_t>(std::max(m_max, 0)));
    for (int m = 1; m <= m_max; ++m)
        h.cp_values.push_back(chi_y_cp_value(m).eval(Rational(-1)));
    return h;
}

}  // namespace genera
