#include <doctest.h>

#include <map>
#include <stdexcept>

#include "datasets.hpp"
#include "theorems.hpp"

using genera::FixedPoint;
using genera::FixedPointSet;
using genera::Rational;

namespace {

std::vector<std::vector<long long>> weight_lists(const FixedPointSet& fps) {
    std::vector<std::vector<long long>> out;
    for (const auto& p : fps.points)
        out.push_back(p.weights);
    return out;
}

std::map<int, long long> d_histogram(const FixedPointSet& fps) {
    std::map<int, long long> h;
    for (const auto& p : fps.points)
        ++h[negative_weight_count(p)];
    return h;
}

}  // namespace

TEST_SUITE("datasets") {

TEST_CASE("CP(1) with exponents (0,1)") {
    auto fps = genera::cp_n_dataset({0, 1});
    CHECK(fps.half_dimension == 1);
    REQUIRE(fps.points.size() == 2);
    CHECK(fps.points[0].label == "p0");
    CHECK(fps.points[1].label == "p1");
    CHECK(weight_lists(fps) == std::vector<std::vector<long long>>{{1}, {-1}});
}

TEST_CASE("CP(2) with exponents (0,1,2)") {
    auto fps = genera::cp_n_dataset({0, 1, 2});
    CHECK(fps.half_dimension == 2);
    CHECK(weight_lists(fps) ==
          std::vector<std::vector<long long>>{{1, 2}, {-1, 1}, {-2, -1}});
}

TEST_CASE("CP(2) with exponents (0,2,5)") {
    auto fps = genera::cp_n_dataset({0, 2, 5});
    CHECK(weight_lists(fps) ==
          std::vector<std::vector<long long>>{{2, 5}, {-2, 3}, {-5, -3}});
}

TEST_CASE("repeated exponents are rejected") {
    CHECK_THROWS_AS(genera::cp_n_dataset({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(genera::cp_n_dataset({3}), std::invalid_argument);
    try {
        genera::cp_n_dataset({0, 0, 1});
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("distinct") != std::string::npos);
    }
}

TEST_CASE("products concatenate weights pairwise") {
    auto s2 = genera::cp_n_dataset({0, 1});
    auto prod = genera::product_dataset(s2, s2);
    CHECK(prod.half_dimension == 2);
    CHECK(weight_lists(prod) ==
          std::vector<std::vector<long long>>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    CHECK(prod.points[0].label == "p0.p0");
    CHECK(prod.points[3].label == "p1.p1");
}

TEST_CASE("product with an empty factor is empty") {
    FixedPointSet empty;
    empty.half_dimension = 1;
    auto prod = genera::product_dataset(genera::cp_n_dataset({0, 1}), empty);
    CHECK(prod.half_dimension == 2);
    CHECK(prod.points.empty());
}

TEST_CASE("CP(1) x CP(2) has six points of three weights") {
    auto prod = genera::product_dataset(genera::cp_n_dataset({0, 1}),
                                        genera::cp_n_dataset({0, 1, 2}));
    CHECK(prod.half_dimension == 3);
    CHECK(prod.points.size() == 6);
    for (const auto& p : prod.points)
        CHECK(p.weights.size() == 3);
}

TEST_CASE("semi-free powers") {
    CHECK(genera::semifree_sphere_power(1) == genera::cp_n_dataset({0, 1}));

    auto two = genera::semifree_sphere_power(2);
    CHECK(d_histogram(two) == std::map<int, long long>{{0, 1}, {1, 2}, {2, 1}});

    auto three = genera::semifree_sphere_power(3);
    CHECK(three.points.size() == 8);
    CHECK(d_histogram(three) == std::map<int, long long>{{0, 1}, {1, 3}, {2, 3}, {3, 1}});
    for (const auto& p : three.points)
        for (long long w : p.weights)
            CHECK((w == 1 || w == -1));

    CHECK_THROWS_AS(genera::semifree_sphere_power(0), std::invalid_argument);
}

TEST_CASE("generated datasets validate and localize cleanly") {
    for (const auto& a : std::vector<std::vector<long long>>{
             {0, 1}, {0, 2, 5}, {-3, 1, 4, 6}, {7, -2, 0, 3, 5}}) {
        auto fps = genera::cp_n_dataset(a);
        CHECK(validate_dataset(fps).ok());
        auto report =
            genus_via_localization(genera::todd_genus(fps.half_dimension + 1), fps,
                                   fps.half_dimension + 2);
        CHECK(report.negative_part_zero);
        CHECK(report.constant_term == Rational(1));
    }
}

TEST_CASE("genus of a product is the product of genera") {
    auto cp1 = genera::cp_n_dataset({0, 1});
    auto cp2 = genera::cp_n_dataset({0, 1, 2});
    auto prod = genera::product_dataset(cp1, cp2);
    int order = prod.half_dimension + 2;

    auto chi_a = genus_via_localization(genera::chi_y_genus(order - 1), cp1, order);
    auto chi_b = genus_via_localization(genera::chi_y_genus(order - 1), cp2, order);
    auto chi_ab = genus_via_localization(genera::chi_y_genus(order - 1), prod, order);
    CHECK(chi_ab.constant_term == chi_a.constant_term * chi_b.constant_term);

    auto sig_a = genus_via_localization(genera::signature_genus(order - 1), cp1, order);
    auto sig_b = genus_via_localization(genera::signature_genus(order - 1), cp2, order);
    auto sig_ab = genus_via_localization(genera::signature_genus(order - 1), prod, order);
    CHECK(sig_ab.constant_term == sig_a.constant_term * sig_b.constant_term);
}

}  // TEST_SUITE
