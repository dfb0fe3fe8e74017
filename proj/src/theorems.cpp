#include "theorems.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "linalg.hpp"

namespace genera {

void require_valid(const FixedPointSet& fps) {
    ValidationResult v = validate_dataset(fps);
    if (!v.ok())
        throw InvalidDatasetError("invalid dataset: " + v.summary(), std::move(v));
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Hamiltonian:
            return "Hamiltonian";
        case Verdict::NonHamiltonian:
            return "NonHamiltonian";
        case Verdict::NotRealizable:
            return "NotRealizable";
    }
    return "?";
}

HamiltonicityVerdict classify_hamiltonian(const FixedPointSet& fps, int order) {
    require_valid(fps);
    if (order <= 0)
        order = default_order(fps);
    auto report = genus_via_localization(todd_genus(order - 1), fps, order);

    HamiltonicityVerdict v{report.constant_term, Verdict::NotRealizable, {}};
    if (!report.negative_part_zero) {
        std::ostringstream os;
        os << "fixed-point sum has negative powers of u at exponents";
        for (int m : nonzero_negative_exponents(report.laurent, fps.half_dimension))
            os << " " << m;
        v.reasons.push_back(os.str());
        return v;
    }
    v.reasons.push_back("Todd genus = " + v.todd_value.str());
    if (v.todd_value.is_one()) {
        v.verdict = Verdict::Hamiltonian;
    } else if (v.todd_value.is_zero()) {
        v.verdict = Verdict::NonHamiltonian;
    } else {
        v.verdict = Verdict::NotRealizable;
        v.reasons.push_back(
            "a symplectic circle action with isolated fixed points has Todd genus 0 or 1");
    }
    return v;
}

namespace {

// Canonical witness order: by d, then weights, then label.
bool witness_before(const FixedPoint& a, const FixedPoint& b) {
    return std::make_tuple(negative_weight_count(a), std::cref(a.weights), std::cref(a.label)) <
           std::make_tuple(negative_weight_count(b), std::cref(b.weights), std::cref(b.label));
}

}  // namespace

ParityCheck check_parity_lemma(const FixedPointSet& fps) {
    if (fps.points.empty())
        throw std::invalid_argument("lemma is about nonempty fixed sets");
    const FixedPoint* even = nullptr;
    const FixedPoint* odd = nullptr;
    for (const FixedPoint& p : fps.points) {
        const FixedPoint*& slot = negative_weight_count(p) % 2 == 0 ? even : odd;
        if (slot == nullptr || witness_before(p, *slot))
            slot = &p;
    }
    return ParityCheck{even != nullptr && odd != nullptr, even ? point_id(*even) : "",
                       odd ? point_id(*odd) : ""};
}

Rational parity_obstruction_value(const FixedPointSet& fps) {
    require_valid(fps);
    Rational sum(0);
    for (const FixedPoint& p : fps.points) {
        Rational prod(1);
        for (long long w : p.weights)
            prod *= Rational(w);
        sum += prod.inverse();
    }
    return sum;
}

SemifreeProfile semifree_profile(int n, const Rational& lambda) {
    if (n < 1)
        throw std::invalid_argument("semifree: n must be positive");
    SemifreeProfile p{n, lambda, {}};
    p.F.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        p.F.push_back(lambda * Rational::binomial(n, static_cast<unsigned long>(k)));
    return p;
}

SemifreeProfile solve_semifree_system(int n, const Rational& lambda) {
    if (n < 1)
        throw std::invalid_argument("semifree: n must be positive");
    // sum_k F_k (u-1)^k / u^n has no negative powers and constant term
    // lambda iff the numerator is lambda * u^n: row j reads off the
    // coefficient of u^j in sum_k F_k (u-1)^k.
    std::size_t size = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size, Rational(0)));
    std::vector<Rational> rhs(size, Rational(0));
    for (int j = 0; j <= n; ++j)
        for (int k = j; k <= n; ++k) {
            Rational c = Rational::binomial(k, static_cast<unsigned long>(j));
            a[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
                (k - j) % 2 == 0 ? c : -c;
        }
    rhs[static_cast<std::size_t>(n)] = lambda;

    auto x = solve_linear_system(std::move(a), std::move(rhs));
    if (!x)
        throw std::logic_error("semifree: linear system is singular");
    return SemifreeProfile{n, lambda, std::move(*x)};
}

std::string BettiProfile::poincare_str() const {
    std::string out;
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (b[k] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        std::string c = std::to_string(b[k]);
        if (k == 0)
            out += c;
        else {
            if (c != "1")
                out += c + "*";
            out += k == 1 ? "t" : "t^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

YPolynomial BettiProfile::poincare_at_sqrt_minus_y() const {
    std::vector<Rational> c((b.size() + 1) / 2, Rational(0));
    for (std::size_t k = 0; 2 * k < b.size(); ++k)
        c[k] = Rational(k % 2 == 0 ? b[2 * k] : -b[2 * k]);
    return YPolynomial::from_coefficients(std::move(c));
}

BettiProfile betti_from_moment_map(const FixedPointSet& fps) {
    require_valid(fps);
    BettiProfile profile{std::vector<long long>(
        static_cast<std::size_t>(2 * fps.half_dimension) + 1, 0)};
    for (const FixedPoint& p : fps.points)
        ++profile.b[static_cast<std::size_t>(2 * negative_weight_count(p))];
    return profile;
}

PoincareIdentity poincare_identity_check(const FixedPointSet& fps) {
    YPolynomial lhs = chi_y_isolated(fps);
    YPolynomial rhs = betti_from_moment_map(fps).poincare_at_sqrt_minus_y();
    return PoincareIdentity{lhs == rhs, std::move(lhs), std::move(rhs)};
}

SignatureRelation signature_relation_check(const FixedPointSet& fps) {
    require_valid(fps);
    if (fps.half_dimension % 2 != 0)
        throw std::invalid_argument("signature relation stated for 4n-manifolds");
    Rational sigma = chi_y_isolated(fps).eval(Rational(1));
    BettiProfile betti = betti_from_moment_map(fps);
    Rational alt(0);
    for (std::size_t k = 0; 2 * k < betti.b.size(); ++k) {
        Rational term(betti.b[2 * k]);
        alt += k % 2 == 0 ? term : -term;
    }
    return SignatureRelation{sigma == alt, std::move(sigma), std::move(alt)};
}

}  // namespace genera
