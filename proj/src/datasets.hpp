#pragma once

#include <vector>

#include "localization.hpp"

namespace genera {

/// Fixed-point data of the linear circle action
/// t.[z_0:...:z_n] = [t^{a_0} z_0:...:t^{a_n} z_n] on CP(n): point i is
/// [0:...:1:...:0] with weights a_j - a_i for j != i. The exponents must
/// be pairwise distinct or fixed points are not isolated.
FixedPointSet cp_n_dataset(const std::vector<long long>& a);

/// Diagonal action on a product: points combine pairwise and their
/// weight lists concatenate. Labels join with '.'.
FixedPointSet product_dataset(const FixedPointSet& a, const FixedPointSet& b);

/// n-fold product of the standard semi-free sphere CP(1) with
/// exponents (0,1): 2^n points, all weights +-1, and C(n,k) points with
/// exactly k negative weights.
FixedPointSet semifree_sphere_power(int n);

}  // namespace genera
