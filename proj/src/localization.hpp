#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "genus.hpp"
#include "laurent_series.hpp"
#include "ypolynomial.hpp"

namespace genera {

/// Isolated fixed point of a circle action: the n nonzero integer
/// weights of the S^1-representation on the tangent space. The label is
/// optional (empty = none).
struct FixedPoint {
    std::string label;
    std::vector<long long> weights;

    bool operator==(const FixedPoint&) const = default;
};

/// Fixed-point data of a circle action on a 2n-manifold.
struct FixedPointSet {
    int half_dimension = 0;
    std::vector<FixedPoint> points;

    bool operator==(const FixedPointSet&) const = default;
};

/// Number of strictly negative weights at a fixed point (d_p).
int negative_weight_count(const FixedPoint& p);

/// Stable identifier for diagnostics: the label when present, otherwise
/// the weight tuple "(1,-2)".
std::string point_id(const FixedPoint& p);

struct ValidationIssue {
    std::size_t point_index;
    std::string point;
    std::string message;
};

struct ValidationResult {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string summary() const;
};

/// Structural checks: half_dimension positive, every point carries
/// exactly n weights, all nonzero. Violations come back as data, not
/// exceptions.
ValidationResult validate_dataset(const FixedPointSet& fps);

/// Truncation order used when the caller does not override: n + 8.
/// Constant-term extraction needs at least n + 1.
int default_order(const FixedPointSet& fps);

/// One component of a (possibly non-isolated) fixed-point set: the
/// number d of negative normal weights and chi_y of the component.
struct ComponentData {
    int d = 0;
    YPolynomial chi_y_value;
};

/// chi_y(M) = sum_s (-y)^{d_s} chi_y(M_s) over the components.
YPolynomial chi_y_from_components(const std::vector<ComponentData>& components);

/// Isolated-point specialization: chi_y(pt) = 1, so the sum collapses
/// to sum_p (-y)^{d_p}.
YPolynomial chi_y_isolated(const FixedPointSet& fps);

/// The fixed-point sum of the Conner-Floyd equations:
/// sum over points of prod_k (g_h^{-1}(j_k g_h(u)))^{-1}, as a Laurent
/// series reliable on [-n, order-1-n]. Empty fixed-point set gives the
/// zero series.
template <CoefficientRing R>
LaurentSeries<R> conner_floyd_sum(WeightFactorTable<R>& table, const FixedPointSet& fps) {
    int n = fps.half_dimension;
    int order = table.order();
    LaurentSeries<R> acc = LaurentSeries<R>::zero(order - 1 - n);
    for (const FixedPoint& p : fps.points) {
        LaurentSeries<R> prod = table.reciprocal(p.weights.at(0));
        for (std::size_t k = 1; k < p.weights.size(); ++k)
            prod = prod * table.reciprocal(p.weights[k]);
        acc = acc + prod;
    }
    return acc;
}

template <CoefficientRing R>
LaurentSeries<R> conner_floyd_sum(const GenusSpec<R>& h, const FixedPointSet& fps, int order) {
    if (order < fps.half_dimension + 1)
        throw std::invalid_argument("localization: order must be at least n + 1");
    WeightFactorTable<R> table(h, order);
    return conner_floyd_sum(table, fps);
}

/// Exponents in [-n, -1] carrying a nonzero coefficient. A product of n
/// valuation-(-1) factors cannot dip below u^-n, so that window is the
/// whole negative part.
template <CoefficientRing R>
std::vector<int> nonzero_negative_exponents(const LaurentSeries<R>& a, int n) {
    std::vector<int> bad;
    for (int m = -n; m <= -1; ++m)
        if (!a.coeff(m).is_zero())
            bad.push_back(m);
    return bad;
}

/// Outcome of evaluating the Conner-Floyd constraint for one genus on
/// one dataset. constant_term is only meaningful when
/// negative_part_zero holds; the raw series is kept for diagnostics.
template <CoefficientRing R>
struct LocalizationReport {
    std::string genus_name;
    LaurentSeries<R> laurent;
    bool negative_part_zero;
    R constant_term;
    int truncation_order;
};

/// Evaluates the constraint: no negative powers of u in [-n, -1], and
/// the constant term is h(M). Inconsistent data is a result, not an
/// error.
template <CoefficientRing R>
LocalizationReport<R> genus_via_localization(WeightFactorTable<R>& table,
                                             const FixedPointSet& fps) {
    int n = fps.half_dimension;
    LaurentSeries<R> sum = conner_floyd_sum(table, fps);
    bool clean = nonzero_negative_exponents(sum, n).empty();
    R constant = sum.coeff(0);
    return LocalizationReport<R>{table.genus().name, std::move(sum), clean, std::move(constant),
                                 table.order()};
}

template <CoefficientRing R>
LocalizationReport<R> genus_via_localization(const GenusSpec<R>& h, const FixedPointSet& fps,
                                             int order) {
    if (order < fps.half_dimension + 1)
        throw std::invalid_argument("localization: order must be at least n + 1");
    WeightFactorTable<R> table(h, order);
    return genus_via_localization(table, fps);
}

}  // namespace genera
