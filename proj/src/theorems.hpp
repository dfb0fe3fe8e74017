#pragma once

#include <string>
#include <vector>

#include "localization.hpp"
#include "rational.hpp"
#include "ypolynomial.hpp"

namespace genera {

/// Raised when an operation is handed a dataset that fails structural
/// validation; carries the per-point diagnostics in the message.
class InvalidDatasetError : public std::runtime_error {
public:
    InvalidDatasetError(std::string message, ValidationResult validation)
        : std::runtime_error(std::move(message)), validation_(std::move(validation)) {}
    const ValidationResult& validation() const { return validation_; }

private:
    ValidationResult validation_;
};

/// Throws InvalidDatasetError unless the dataset validates.
void require_valid(const FixedPointSet& fps);

enum class Verdict { Hamiltonian, NonHamiltonian, NotRealizable };

const char* verdict_name(Verdict v);

/// Dichotomy for symplectic circle actions with isolated fixed points:
/// Todd genus 1 means Hamiltonian, 0 means non-Hamiltonian, and
/// anything else (or a fixed-point sum with genuine negative powers)
/// means no such action realizes the data.
struct HamiltonicityVerdict {
    Rational todd_value;
    Verdict verdict;
    std::vector<std::string> reasons;
};

HamiltonicityVerdict classify_hamiltonian(const FixedPointSet& fps, int order = 0);

/// Every realizable dataset has fixed points of both parities of the
/// negative-weight count. Witnesses are chosen canonically (smallest d,
/// then weights, then label) so reports do not depend on point order.
struct ParityCheck {
    bool has_both_parities;
    std::string even_witness;  // empty when no even-d point exists
    std::string odd_witness;   // empty when no odd-d point exists
};

ParityCheck check_parity_lemma(const FixedPointSet& fps);

/// The coefficient of u^-n in the Todd fixed-point sum, computed
/// directly: sum over points of 1 / (product of weights). Must vanish
/// on realizable data; when every d_p has the same parity all terms
/// share a sign, so it cannot.
Rational parity_obstruction_value(const FixedPointSet& fps);

/// Fixed-point count profile of a semi-free action: F_k = number of
/// fixed points with exactly k negative weights.
struct SemifreeProfile {
    int n;
    Rational lambda;
    std::vector<Rational> F;  // F_0..F_n

    bool operator==(const SemifreeProfile&) const = default;
};

/// Closed form F_k = lambda * C(n, k).
SemifreeProfile semifree_profile(int n, const Rational& lambda);

/// Independent route: builds the linear system expressed by
/// sum_k F_k (u-1)^k / u^n having no negative powers of u and constant
/// term lambda, and solves it exactly. Always uniquely solvable; a
/// singular system would be an internal error.
SemifreeProfile solve_semifree_system(int n, const Rational& lambda);

/// Betti numbers read off the moment map: the fixed points are the
/// critical points and the Morse index at p is 2 d_p, so
/// b_{2k} = #{p : d_p = k} and the odd Betti numbers vanish.
struct BettiProfile {
    std::vector<long long> b;  // b_0..b_{2n}

    /// Poincare polynomial sum_k b_k t^k.
    std::string poincare_str() const;

    /// P_M(sqrt(-y)) with t^2 = -y: sum_k b_{2k} (-y)^k.
    YPolynomial poincare_at_sqrt_minus_y() const;

    bool operator==(const BettiProfile&) const = default;
};

BettiProfile betti_from_moment_map(const FixedPointSet& fps);

/// chi_y(M) = P_M(sqrt(-y)): both sides and their comparison.
struct PoincareIdentity {
    bool holds;
    YPolynomial chi_y;        // from the fixed-point count
    YPolynomial from_betti;   // from the Morse-theoretic Betti numbers
};

PoincareIdentity poincare_identity_check(const FixedPointSet& fps);

/// Signature against the alternating Betti sum on 4n-manifolds:
/// sigma = sum b_{4k} - sum b_{4k+2}, with sigma read off as chi_y at
/// y = 1.
struct SignatureRelation {
    bool holds;
    Rational signature;
    Rational betti_alternating_sum;
};

SignatureRelation signature_relation_check(const FixedPointSet& fps);

}  // namespace genera
