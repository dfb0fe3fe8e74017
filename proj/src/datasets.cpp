#include "datasets.hpp"

#include <set>
#include <stdexcept>

namespace genera {

FixedPointSet cp_n_dataset(const std::vector<long long>& a) {
    if (a.size() < 2)
        throw std::invalid_argument("cpn: need at least two exponents");
    std::set<long long> distinct(a.begin(), a.end());
    if (distinct.size() != a.size())
        throw std::invalid_argument("cpn: exponents must be distinct, action not isolated-fixed-point");

    FixedPointSet fps;
    fps.half_dimension = static_cast<int>(a.size()) - 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        FixedPoint p;
        p.label = "p" + std::to_string(i);
        for (std::size_t j = 0; j < a.size(); ++j)
            if (j != i)
                p.weights.push_back(a[j] - a[i]);
        fps.points.push_back(std::move(p));
    }
    return fps;
}

FixedPointSet product_dataset(const FixedPointSet& a, const FixedPointSet& b) {
    FixedPointSet fps;
    fps.half_dimension = a.half_dimension + b.half_dimension;
    fps.points.reserve(a.points.size() * b.points.size());
    for (const FixedPoint& p : a.points)
        for (const FixedPoint& q : b.points) {
            FixedPoint pq;
            if (!p.label.empty() && !q.label.empty())
                pq.label = p.label + "." + q.label;
            pq.weights = p.weights;
            pq.weights.insert(pq.weights.end(), q.weights.begin(), q.weights.end());
            fps.points.push_back(std::move(pq));
        }
    return fps;
}

FixedPointSet semifree_sphere_power(int n) {
    if (n < 1)
        throw std::invalid_argument("semifree: n must be positive");
    FixedPointSet sphere = cp_n_dataset({0, 1});
    FixedPointSet fps = sphere;
    for (int k = 1; k < n; ++k)
        fps = product_dataset(fps, sphere);
    return fps;
}

}  // namespace genera
