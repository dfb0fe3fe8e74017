#include "localization.hpp"

#include <sstream>

namespace genera {

int negative_weight_count(const FixedPoint& p) {
    int d = 0;
    for (long long w : p.weights)
        if (w < 0)
            ++d;
    return d;
}

std::string point_id(const FixedPoint& p) {
    if (!p.label.empty())
        return p.label;
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < p.weights.size(); ++k) {
        if (k)
            os << ",";
        os << p.weights[k];
    }
    os << ")";
    return os.str();
}

ValidationResult validate_dataset(const FixedPointSet& fps) {
    ValidationResult r;
    if (fps.half_dimension < 1) {
        r.issues.push_back({0, "", "half_dimension must be positive, got " +
                                       std::to_string(fps.half_dimension)});
        return r;
    }
    std::size_t n = static_cast<std::size_t>(fps.half_dimension);
    for (std::size_t i = 0; i < fps.points.size(); ++i) {
        const FixedPoint& p = fps.points[i];
        if (p.weights.size() != n)
            r.issues.push_back({i, point_id(p),
                                "weight count " + std::to_string(p.weights.size()) +
                                    " does not match half_dimension " + std::to_string(n)});
        for (long long w : p.weights)
            if (w == 0) {
                r.issues.push_back({i, point_id(p), "zero weight: fixed point not isolated"});
                break;
            }
    }
    return r;
}

std::string ValidationResult::summary() const {
    if (issues.empty())
        return "valid";
    std::ostringstream os;
    for (std::size_t i = 0; i < issues.size(); ++i) {
        if (i)
            os << "; ";
        os << "point " << issues[i].point_index;
        if (!issues[i].point.empty())
            os << " " << issues[i].point;
        os << ": " << issues[i].message;
    }
    return os.str();
}

int default_order(const FixedPointSet& fps) {
    return fps.half_dimension + 8;
}

YPolynomial chi_y_from_components(const std::vector<ComponentData>& components) {
    YPolynomial acc;
    for (const ComponentData& c : components) {
        // (-y)^d = (-1)^d y^d
        std::vector<Rational> mono(static_cast<std::size_t>(c.d) + 1, Rational(0));
        mono.back() = Rational(c.d % 2 == 0 ? 1 : -1);
        acc += YPolynomial::from_coefficients(std::move(mono)) * c.chi_y_value;
    }
    return acc;
}

YPolynomial chi_y_isolated(const FixedPointSet& fps) {
    std::vector<ComponentData> pts;
    pts.reserve(fps.points.size());
    for (const FixedPoint& p : fps.points)
        pts.push_back({negative_weight_count(p), YPolynomial::one()});
    return chi_y_from_components(pts);
}

}  // namespace genera
