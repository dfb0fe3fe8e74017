#include <doctest.h>

#include <algorithm>
#include <string>

#include "datasets.hpp"
#include "json_io.hpp"

using genera::AnyGenus;
using genera::FixedPointSet;
using genera::Json;
using genera::ParseError;
using genera::Rational;
using genera::YPolynomial;

TEST_SUITE("json_io") {

TEST_CASE("dataset serialization round-trips bit-exactly") {
    auto fps = genera::cp_n_dataset({0, 1, 2});
    std::string text = genera::dataset_to_string(fps);
    auto back = genera::dataset_from_string(text);
    CHECK(back == fps);
    CHECK(genera::dataset_to_string(back) == text);
}

TEST_CASE("unlabeled points omit the label key") {
    FixedPointSet fps;
    fps.half_dimension = 2;
    fps.points.push_back({"", {1, 1}});
    std::string text = genera::dataset_to_string(fps);
    CHECK(text.find("label") == std::string::npos);
    CHECK(genera::dataset_from_string(text) == fps);
}

TEST_CASE("hand-written dataset text parses") {
    auto fps = genera::dataset_from_string(
        R"({"half_dimension": 1, "points": [{"weights": [1]}, {"label": "q", "weights": [-1]}]})");
    CHECK(fps.half_dimension == 1);
    REQUIRE(fps.points.size() == 2);
    CHECK(fps.points[0].label.empty());
    CHECK(fps.points[1].label == "q");
    CHECK(fps.points[1].weights == std::vector<long long>{-1});
}

TEST_CASE("malformed dataset documents raise ParseError") {
    auto bad = [](const std::string& text) {
        CHECK_THROWS_AS(genera::dataset_from_string(text), ParseError);
    };
    bad("{");                                                    // not JSON
    bad("[]");                                                   // wrong shape
    bad(R"({"points": []})");                                    // no half_dimension
    bad(R"({"half_dimension": 2})");                             // no points
    bad(R"({"half_dimension": 2, "points": [], "extra": 1})");   // unknown key
    bad(R"({"half_dimension": 2, "points": [{}]})");             // point without weights
    bad(R"({"half_dimension": 1, "points": [{"weights": [1.5]}]})");
    bad(R"({"half_dimension": 1, "points": [{"weights": 1}]})");
    bad(R"({"half_dimension": 0, "points": []})");
    bad(R"({"half_dimension": 65, "points": []})");
    bad(R"({"half_dimension": 1, "points": [{"weights": [1], "note": "x"}]})");
}

TEST_CASE("rational values serialize as strings") {
    CHECK(genera::rational_to_json(Rational(-2, 3)) == Json("-2/3"));
    CHECK(genera::rational_to_json(Rational(4)) == Json("4"));
    CHECK(genera::rational_from_json(Json("7/2")) == Rational(7, 2));
    CHECK_THROWS_AS(genera::rational_from_json(Json("1/0")), ParseError);
    CHECK_THROWS_AS(genera::rational_from_json(Json(3)), ParseError);
}

TEST_CASE("y-polynomials serialize as coefficient arrays") {
    YPolynomial p = YPolynomial::from_coefficients(
        {Rational(1), Rational(-1), Rational(1, 2)});
    Json j = genera::ypolynomial_to_json(p);
    CHECK(j == Json::array({"1", "-1", "1/2"}));
    CHECK(genera::ypolynomial_from_json(j) == p);
    CHECK_THROWS_AS(genera::ypolynomial_from_json(Json("1")), ParseError);
}

TEST_CASE("custom genus files parse into either coefficient ring") {
    auto g = genera::genus_from_json(Json::parse(
        R"({"name": "ones", "ring": "rational", "cp_values": ["1", "1", "1"]})"));
    auto* spec = std::get_if<genera::GenusSpec<Rational>>(&g);
    REQUIRE(spec != nullptr);
    CHECK(spec->name == "ones");
    CHECK(spec->cp_value(3) == Rational(1));

    auto h = genera::genus_from_json(Json::parse(
        R"({"name": "mixed", "ring": "y_polynomial", "cp_values": [["1", "-1"]]})"));
    auto* yspec = std::get_if<genera::GenusSpec<YPolynomial>>(&h);
    REQUIRE(yspec != nullptr);
    CHECK(yspec->cp_value(1) == YPolynomial::from_coefficients({Rational(1), Rational(-1)}));

    CHECK_THROWS_AS(genera::genus_from_json(Json::parse(
                        R"({"name": "x", "ring": "integer", "cp_values": []})")),
                    ParseError);
    CHECK_THROWS_AS(genera::genus_from_json(Json::parse(R"({"ring": "rational"})")),
                    ParseError);
}

TEST_CASE("display symbols") {
    CHECK(genera::genus_symbol("todd") == "Td");
    CHECK(genera::genus_symbol("chi_y") == "χ_y");
    CHECK(genera::genus_symbol("signature") == "σ");
    CHECK(genera::genus_symbol("euler") == "χ");
    CHECK(genera::genus_symbol("ones") == "ones");
}

TEST_CASE("localization report document") {
    auto fps = genera::cp_n_dataset({0, 1, 2});
    int order = genera::default_order(fps);
    auto report = genus_via_localization(genera::todd_genus(order - 1), fps, order);
    Json j = genera::localization_report_to_json(report, fps);
    CHECK(j["genus"] == "todd");
    CHECK(j["symbol"] == "Td");
    CHECK(j["ring"] == "rational");
    CHECK(j["order"] == order);
    CHECK(j["half_dimension"] == 2);
    CHECK(j["point_count"] == 3);
    CHECK(j["negative_part_zero"] == true);
    CHECK(j["negative_exponents_nonzero"].empty());
    CHECK(j["constant_term"] == "1");
    CHECK(j["constant_term_pretty"] == "1");
    // the cancelled negative part is normalized away, so the stored
    // window starts at the constant term
    CHECK(j["window"] == Json::array({0, order - 1 - 2}));
}

TEST_CASE("full report for CP(2)") {
    Json j = genera::full_report(genera::cp_n_dataset({0, 1, 2}));
    CHECK(j["verdict"] == "Hamiltonian");
    CHECK(j["todd"] == "1");
    CHECK(j["chi_y"] == Json::array({"1", "-1", "1"}));
    CHECK(j["betti"] == Json::array({1, 0, 1, 0, 1}));
    CHECK(j["poincare"] == "1 + t^2 + t^4");
    CHECK(j["signature"] == "1");
    CHECK(j["order"] == 10);
    const Json& checks = j["checks"];
    CHECK(checks["negative_part_zero"] == true);
    CHECK(checks["chi_y_localization_matches_count"] == true);
    CHECK(checks["signature_matches_chi_y_at_1"] == true);
    CHECK(checks["euler_matches_point_count"] == true);
    CHECK(checks["parity_lemma"] == true);
    CHECK(checks["poincare_identity"] == true);
    CHECK(checks["signature_relation"] == true);
    CHECK(j["parity_witness"]["even_d"] == "p0");
    CHECK(j["parity_witness"]["odd_d"] == "p1");
}

TEST_CASE("full report for a product of two spheres") {
    auto s2 = genera::cp_n_dataset({0, 1});
    Json j = genera::full_report(genera::product_dataset(s2, s2));
    CHECK(j["betti"] == Json::array({1, 0, 2, 0, 1}));
    CHECK(j["signature"] == "0");
    CHECK(j["chi_y"] == Json::array({"1", "-2", "1"}));
    CHECK(j["verdict"] == "Hamiltonian");
}

TEST_CASE("full report ignores the order of the input points") {
    auto fps = genera::cp_n_dataset({0, 1, 2});
    auto shuffled = fps;
    std::reverse(shuffled.points.begin(), shuffled.points.end());
    CHECK(genera::dump_json(genera::full_report(fps)) ==
          genera::dump_json(genera::full_report(shuffled)));
}

TEST_CASE("full report refuses invalid datasets") {
    FixedPointSet fps;
    fps.half_dimension = 1;
    fps.points.push_back({"", {0}});
    CHECK_THROWS_AS(genera::full_report(fps), genera::InvalidDatasetError);
}

TEST_CASE("odd-dimensional reports skip the signature relation") {
    Json j = genera::full_report(genera::cp_n_dataset({0, 1}));
    CHECK(j["checks"]["signature_relation"].is_null());
    CHECK(!j.contains("signature"));
}

TEST_CASE("verdict and validation documents") {
    auto v = genera::classify_hamiltonian(genera::cp_n_dataset({0, 1}));
    Json jv = genera::verdict_to_json(v);
    CHECK(jv["verdict"] == "Hamiltonian");
    CHECK(jv["todd"] == "1");
    CHECK(jv["reasons"].is_array());

    FixedPointSet bad;
    bad.half_dimension = 1;
    bad.points.push_back({"q", {0}});
    Json jr = genera::validation_to_json(genera::validate_dataset(bad));
    CHECK(jr["valid"] == false);
    REQUIRE(jr["issues"].size() == 1);
    CHECK(jr["issues"][0]["point"] == "q");
}

TEST_CASE("semifree comparison document") {
    auto solved = genera::solve_semifree_system(2, Rational(1));
    auto closed = genera::semifree_profile(2, Rational(1));
    Json j = genera::semifree_to_json(solved, closed);
    CHECK(j["n"] == 2);
    CHECK(j["lambda"] == "1");
    CHECK(j["solved"] == Json::array({"1", "2", "1"}));
    CHECK(j["binomial"] == Json::array({"1", "2", "1"}));
    CHECK(j["equal"] == true);
}

TEST_CASE("canonical dump is two-space indented with trailing newline") {
    Json j;
    j["a"] = 1;
    CHECK(genera::dump_json(j) == "{\n  \"a\": 1\n}\n");
}

}  // TEST_SUITE
