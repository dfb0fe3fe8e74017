#include <doctest.h>

#include <algorithm>
#include <random>

#include "datasets.hpp"
#include "theorems.hpp"

using genera::BettiProfile;
using genera::FixedPoint;
using genera::FixedPointSet;
using genera::Rational;
using genera::Verdict;
using genera::YPolynomial;

namespace {

YPolynomial poly(std::initializer_list<long long> coeffs) {
    std::vector<Rational> c;
    for (long long v : coeffs)
        c.emplace_back(v);
    return YPolynomial::from_coefficients(std::move(c));
}

FixedPointSet single_point(std::vector<long long> weights) {
    FixedPointSet fps;
    fps.half_dimension = static_cast<int>(weights.size());
    fps.points.push_back(FixedPoint{"", std::move(weights)});
    return fps;
}

std::vector<Rational> rationals(std::initializer_list<long long> values) {
    std::vector<Rational> out;
    for (long long v : values)
        out.emplace_back(v);
    return out;
}

}  // namespace

TEST_SUITE("theorems") {

TEST_CASE("classification of the standard examples") {
    auto cp1 = classify_hamiltonian(genera::cp_n_dataset({0, 1}));
    CHECK(cp1.verdict == Verdict::Hamiltonian);
    CHECK(cp1.todd_value == Rational(1));

    FixedPointSet empty;
    empty.half_dimension = 2;
    auto none = classify_hamiltonian(empty);
    CHECK(none.verdict == Verdict::NonHamiltonian);
    CHECK(none.todd_value == Rational(0));

    auto bad = classify_hamiltonian(single_point({1, 1}));
    CHECK(bad.verdict == Verdict::NotRealizable);
    REQUIRE_FALSE(bad.reasons.empty());
    CHECK(bad.reasons[0].find("negative powers") != std::string::npos);
}

TEST_CASE("Todd value outside {0,1} is not realizable") {
    // disjoint union of two CP(1)'s: sum = 2, negative part clean
    auto cp1 = genera::cp_n_dataset({0, 1});
    FixedPointSet doubled = cp1;
    doubled.points.insert(doubled.points.end(), cp1.points.begin(), cp1.points.end());
    auto v = classify_hamiltonian(doubled);
    CHECK(v.verdict == Verdict::NotRealizable);
    CHECK(v.todd_value == Rational(2));
}

TEST_CASE("classification validates its input") {
    CHECK_THROWS_AS(classify_hamiltonian(single_point({1, 0})), genera::InvalidDatasetError);
    try {
        classify_hamiltonian(single_point({1, 0}));
    } catch (const genera::InvalidDatasetError& e) {
        CHECK_FALSE(e.validation().ok());
    }
}

TEST_CASE("verdict names") {
    CHECK(std::string(verdict_name(Verdict::Hamiltonian)) == "Hamiltonian");
    CHECK(std::string(verdict_name(Verdict::NonHamiltonian)) == "NonHamiltonian");
    CHECK(std::string(verdict_name(Verdict::NotRealizable)) == "NotRealizable");
}

TEST_CASE("parity lemma on examples") {
    CHECK(check_parity_lemma(genera::cp_n_dataset({0, 1})).has_both_parities);
    CHECK(check_parity_lemma(genera::cp_n_dataset({0, 1, 2})).has_both_parities);

    FixedPointSet all_even;
    all_even.half_dimension = 2;
    all_even.points.push_back(FixedPoint{"", {1, 2}});
    all_even.points.push_back(FixedPoint{"", {2, 1}});
    auto r = check_parity_lemma(all_even);
    CHECK_FALSE(r.has_both_parities);
    CHECK(r.even_witness == "(1,2)");
    CHECK(r.odd_witness.empty());

    FixedPointSet empty;
    empty.half_dimension = 1;
    CHECK_THROWS_AS(check_parity_lemma(empty), std::invalid_argument);
}

TEST_CASE("parity witnesses are canonical under point order") {
    auto fps = genera::cp_n_dataset({0, 1, 2});
    auto before = check_parity_lemma(fps);
    std::reverse(fps.points.begin(), fps.points.end());
    auto after = check_parity_lemma(fps);
    CHECK(before.even_witness == after.even_witness);
    CHECK(before.odd_witness == after.odd_witness);
    CHECK(before.even_witness == "p0");
    CHECK(before.odd_witness == "p1");
}

TEST_CASE("parity obstruction values") {
    CHECK(parity_obstruction_value(genera::cp_n_dataset({0, 1})) == Rational(0));
    CHECK(parity_obstruction_value(genera::cp_n_dataset({0, 1, 2})) == Rational(0));
    CHECK(parity_obstruction_value(single_point({1, 2})) == Rational(1, 2));
    CHECK(parity_obstruction_value(single_point({1, 1})) == Rational(1));
}

TEST_CASE("semi-free closed-form profiles") {
    CHECK(genera::semifree_profile(2, Rational(1)).F == rationals({1, 2, 1}));
    CHECK(genera::semifree_profile(3, Rational(1)).F == rationals({1, 3, 3, 1}));
    CHECK(genera::semifree_profile(4, Rational(0)).F == rationals({0, 0, 0, 0, 0}));
    CHECK_THROWS_AS(genera::semifree_profile(0, Rational(1)), std::invalid_argument);
}

TEST_CASE("semi-free linear system solutions") {
    CHECK(genera::solve_semifree_system(2, Rational(1)).F == rationals({1, 2, 1}));
    CHECK(genera::solve_semifree_system(1, Rational(1)).F == rationals({1, 1}));
    CHECK(genera::solve_semifree_system(5, Rational(2)).F ==
          rationals({2, 10, 20, 20, 10, 2}));
    CHECK_THROWS_AS(genera::solve_semifree_system(0, Rational(1)), std::invalid_argument);
}

TEST_CASE("system solution equals the binomial profile") {
    for (int n = 1; n <= 10; ++n)
        for (Rational lambda : {Rational(0), Rational(1), Rational(2), Rational(7, 3)}) {
            CAPTURE(n);
            CHECK(genera::solve_semifree_system(n, lambda) ==
                  genera::semifree_profile(n, lambda));
        }
}

TEST_CASE("Betti numbers from the moment map") {
    auto cp2 = betti_from_moment_map(genera::cp_n_dataset({0, 1, 2}));
    CHECK(cp2.b == std::vector<long long>{1, 0, 1, 0, 1});
    CHECK(cp2.poincare_str() == "1 + t^2 + t^4");

    auto s2s2 = betti_from_moment_map(
        genera::product_dataset(genera::cp_n_dataset({0, 1}), genera::cp_n_dataset({0, 1})));
    CHECK(s2s2.b == std::vector<long long>{1, 0, 2, 0, 1});

    auto pt = betti_from_moment_map(single_point({1, 1}));
    CHECK(pt.b == std::vector<long long>{1, 0, 0, 0, 0});
}

TEST_CASE("Poincare polynomial at sqrt(-y)") {
    BettiProfile cp2{{1, 0, 1, 0, 1}};
    CHECK(cp2.poincare_at_sqrt_minus_y() == poly({1, -1, 1}));
    BettiProfile s2s2{{1, 0, 2, 0, 1}};
    CHECK(s2s2.poincare_at_sqrt_minus_y() == poly({1, -2, 1}));
}

TEST_CASE("Poincare identity") {
    auto cp2 = poincare_identity_check(genera::cp_n_dataset({0, 1, 2}));
    CHECK(cp2.holds);
    CHECK(cp2.chi_y == poly({1, -1, 1}));
    CHECK(cp2.from_betti == poly({1, -1, 1}));

    auto s2s2 = poincare_identity_check(
        genera::product_dataset(genera::cp_n_dataset({0, 1}), genera::cp_n_dataset({0, 1})));
    CHECK(s2s2.holds);
    CHECK(s2s2.chi_y == poly({1, -2, 1}));

    auto pt = poincare_identity_check(single_point({1}));
    CHECK(pt.holds);
    CHECK(pt.chi_y == YPolynomial::one());
}

TEST_CASE("signature relation") {
    auto cp2 = signature_relation_check(genera::cp_n_dataset({0, 1, 2}));
    CHECK(cp2.holds);
    CHECK(cp2.signature == Rational(1));
    CHECK(cp2.betti_alternating_sum == Rational(1));

    auto s2s2 = signature_relation_check(
        genera::product_dataset(genera::cp_n_dataset({0, 1}), genera::cp_n_dataset({0, 1})));
    CHECK(s2s2.holds);
    CHECK(s2s2.signature == Rational(0));

    CHECK_THROWS_AS(signature_relation_check(genera::cp_n_dataset({0, 1})),
                    std::invalid_argument);
}

TEST_CASE("identical Betti profiles give identical chi_y") {
    auto a = genera::cp_n_dataset({0, 1, 2});
    auto b = genera::cp_n_dataset({0, 2, 5});
    CHECK(betti_from_moment_map(a) == betti_from_moment_map(b));
    CHECK(chi_y_isolated(a) == chi_y_isolated(b));
}

TEST_CASE("parity lemma holds on consistent datasets") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long long> exp_pick(-6, 6);
    auto random_cp = [&](int n) {
        std::vector<long long> a;
        while (static_cast<int>(a.size()) < n + 1) {
            long long v = exp_pick(rng);
            if (std::find(a.begin(), a.end(), v) == a.end())
                a.push_back(v);
        }
        return genera::cp_n_dataset(a);
    };
    for (int trial = 0; trial < 20; ++trial) {
        auto fps = genera::product_dataset(random_cp(1 + trial % 2), random_cp(1 + trial % 3));
        auto verdict = classify_hamiltonian(fps);
        REQUIRE(verdict.verdict == Verdict::Hamiltonian);
        CHECK(check_parity_lemma(fps).has_both_parities);
        CHECK(parity_obstruction_value(fps) == Rational(0));
    }
}

}  // TEST_SUITE
