#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "genus.hpp"
#include "localization.hpp"
#include "theorems.hpp"

namespace genera {

using Json = nlohmann::ordered_json;

/// Malformed input: bad JSON, wrong schema, unparsable numbers.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One canonical rendering for every document the tool emits, so that
/// identical data always serializes to identical bytes.
std::string dump_json(const Json& j);

// Ring element serialization: rationals as "p/q" strings, polynomials
// in y as arrays of rational strings indexed by the power of y.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json ypolynomial_to_json(const YPolynomial& p);
YPolynomial ypolynomial_from_json(const Json& j);

// {"half_dimension": n, "points": [{"label": "p0", "weights": [..]}, ..]}
// Weights are JSON integers; labels are optional. Round-trips bit-exactly.
Json dataset_to_json(const FixedPointSet& fps);
FixedPointSet dataset_from_json(const Json& j);
FixedPointSet dataset_from_string(const std::string& text);
FixedPointSet dataset_from_file(const std::string& path);
std::string dataset_to_string(const FixedPointSet& fps);

/// Custom genus file:
/// {"name": .., "ring": "rational"|"y_polynomial", "cp_values": [..]}.
using AnyGenus = std::variant<GenusSpec<Rational>, GenusSpec<YPolynomial>>;
AnyGenus genus_from_json(const Json& j);
AnyGenus genus_from_file(const std::string& path);

/// Display symbol for the built-in genera ("Td", the chi/sigma symbols);
/// custom genera display as their name.
std::string genus_symbol(const std::string& name);

template <CoefficientRing R>
Json ring_element_to_json(const R& value);

template <>
inline Json ring_element_to_json<Rational>(const Rational& value) {
    return rational_to_json(value);
}

template <>
inline Json ring_element_to_json<YPolynomial>(const YPolynomial& value) {
    return ypolynomial_to_json(value);
}

/// Machine form of a localization run; carries both the exact
/// serialization and a display string for the constant term.
template <CoefficientRing R>
Json localization_report_to_json(const LocalizationReport<R>& report,
                                 const FixedPointSet& fps) {
    Json j;
    j["genus"] = report.genus_name;
    j["symbol"] = genus_symbol(report.genus_name);
    j["ring"] = RingTraits<R>::name;
    j["order"] = report.truncation_order;
    j["half_dimension"] = fps.half_dimension;
    j["point_count"] = fps.points.size();
    j["negative_part_zero"] = report.negative_part_zero;
    Json bad = Json::array();
    for (int m : nonzero_negative_exponents(report.laurent, fps.half_dimension))
        bad.push_back(m);
    j["negative_exponents_nonzero"] = std::move(bad);
    j["constant_term"] = ring_element_to_json<R>(report.constant_term);
    j["constant_term_pretty"] = report.constant_term.str();
    j["series"] = report.laurent.str();
    j["window"] = Json::array({report.laurent.window_low(), report.laurent.window_high()});
    return j;
}

Json validation_to_json(const ValidationResult& v);
Json verdict_to_json(const HamiltonicityVerdict& v);
Json semifree_to_json(const SemifreeProfile& solved, const SemifreeProfile& binomial);

/// The consolidated document behind `report`: validation, localization
/// of all four built-in genera, classification, parity lemma, Betti
/// profile, the Poincare identity and (in dimensions divisible by 4)
/// the signature relation. Requires a structurally valid dataset.
/// Stable under reordering of the input points.
Json full_report(const FixedPointSet& fps, int order = 0);

}  // namespace genera
