#include "json_io.hpp"

#include <fstream>
#include <sstream>

namespace genera {

std::string dump_json(const Json& j) {
    return j.dump(2) + "\n";
}

Json rational_to_json(const Rational& q) {
    return q.str();
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string())
        throw ParseError("expected a rational string \"p/q\", got " + j.dump());
    try {
        return Rational::from_string(j.get<std::string>());
    } catch (const std::domain_error& e) {
        throw ParseError(e.what());
    }
}

Json ypolynomial_to_json(const YPolynomial& p) {
    Json a = Json::array();
    for (const Rational& c : p.coefficients())
        a.push_back(c.str());
    return a;
}

YPolynomial ypolynomial_from_json(const Json& j) {
    if (!j.is_array())
        throw ParseError("expected an array of rational strings, got " + j.dump());
    std::vector<Rational> c;
    c.reserve(j.size());
    for (const Json& e : j)
        c.push_back(rational_from_json(e));
    return YPolynomial::from_coefficients(std::move(c));
}

namespace {

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k)
                known = true;
        if (!known)
            throw ParseError("unknown key \"" + it.key() + "\" in " + where);
    }
}

long long integer_from_json(const Json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw ParseError(where + " must be a JSON integer, got " + j.dump());
    return j.get<long long>();
}

}  // namespace

Json dataset_to_json(const FixedPointSet& fps) {
    Json j;
    j["half_dimension"] = fps.half_dimension;
    Json points = Json::array();
    for (const FixedPoint& p : fps.points) {
        Json pj;
        if (!p.label.empty())
            pj["label"] = p.label;
        pj["weights"] = p.weights;
        points.push_back(std::move(pj));
    }
    j["points"] = std::move(points);
    return j;
}

FixedPointSet dataset_from_json(const Json& j) {
    if (!j.is_object())
        throw ParseError("dataset must be a JSON object");
    reject_unknown_keys(j, {"half_dimension", "points"}, "dataset");
    if (!j.contains("half_dimension"))
        throw ParseError("dataset is missing \"half_dimension\"");
    if (!j.contains("points"))
        throw ParseError("dataset is missing \"points\"");

    FixedPointSet fps;
    long long n = integer_from_json(j.at("half_dimension"), "\"half_dimension\"");
    if (n < 1 || n > 64)
        throw ParseError("\"half_dimension\" must be in [1, 64], got " + std::to_string(n));
    fps.half_dimension = static_cast<int>(n);

    const Json& points = j.at("points");
    if (!points.is_array())
        throw ParseError("\"points\" must be an array");
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Json& pj = points.at(i);
        std::string where = "points[" + std::to_string(i) + "]";
        if (!pj.is_object())
            throw ParseError(where + " must be an object");
        reject_unknown_keys(pj, {"label", "weights"}, where);
        FixedPoint p;
        if (pj.contains("label")) {
            if (!pj.at("label").is_string())
                throw ParseError(where + ".label must be a string");
            p.label = pj.at("label").get<std::string>();
        }
        if (!pj.contains("weights"))
            throw ParseError(where + " is missing \"weights\"");
        const Json& ws = pj.at("weights");
        if (!ws.is_array())
            throw ParseError(where + ".weights must be an array");
        for (std::size_t k = 0; k < ws.size(); ++k)
            p.weights.push_back(
                integer_from_json(ws.at(k), where + ".weights[" + std::to_string(k) + "]"));
        fps.points.push_back(std::move(p));
    }
    return fps;
}

FixedPointSet dataset_from_string(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("input is not valid JSON");
    return dataset_from_json(j);
}

FixedPointSet dataset_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return dataset_from_string(buf.str());
}

std::string dataset_to_string(const FixedPointSet& fps) {
    return dump_json(dataset_to_json(fps));
}

AnyGenus genus_from_json(const Json& j) {
    if (!j.is_object())
        throw ParseError("genus must be a JSON object");
    reject_unknown_keys(j, {"name", "ring", "cp_values"}, "genus");
    for (const char* key : {"name", "ring", "cp_values"})
        if (!j.contains(key))
            throw ParseError(std::string("genus is missing \"") + key + "\"");
    if (!j.at("name").is_string())
        throw ParseError("genus \"name\" must be a string");
    std::string name = j.at("name").get<std::string>();
    if (!j.at("ring").is_string())
        throw ParseError("genus \"ring\" must be \"rational\" or \"y_polynomial\"");
    std::string ring = j.at("ring").get<std::string>();
    const Json& values = j.at("cp_values");
    if (!values.is_array())
        throw ParseError("genus \"cp_values\" must be an array");

    if (ring == "rational") {
        GenusSpec<Rational> h{std::move(name), {}};
        for (const Json& e : values)
            h.cp_values.push_back(rational_from_json(e));
        return h;
    }
    if (ring == "y_polynomial") {
        GenusSpec<YPolynomial> h{std::move(name), {}};
        for (const Json& e : values)
            h.cp_values.push_back(ypolynomial_from_json(e));
        return h;
    }
    throw ParseError("genus \"ring\" must be \"rational\" or \"y_polynomial\", got \"" + ring +
                     "\"");
}

AnyGenus genus_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open \"" + path + "\"");
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded())
        throw ParseError("\"" + path + "\" is not valid JSON");
    return genus_from_json(j);
}

std::string genus_symbol(const std::string& name) {
    if (name == "todd")
        return "Td";
    if (name == "chi_y")
        return "χ_y";
    if (name == "signature")
        return "σ";
    if (name == "euler")
        return "χ";
    return name;
}

Json validation_to_json(const ValidationResult& v) {
    Json j;
    j["valid"] = v.ok();
    Json issues = Json::array();
    for (const ValidationIssue& issue : v.issues) {
        Json ij;
        ij["point_index"] = issue.point_index;
        ij["point"] = issue.point;
        ij["message"] = issue.message;
        issues.push_back(std::move(ij));
    }
    j["issues"] = std::move(issues);
    return j;
}

Json verdict_to_json(const HamiltonicityVerdict& v) {
    Json j;
    j["verdict"] = verdict_name(v.verdict);
    j["todd"] = v.todd_value.str();
    j["reasons"] = v.reasons;
    return j;
}

Json semifree_to_json(const SemifreeProfile& solved, const SemifreeProfile& binomial) {
    Json j;
    j["n"] = solved.n;
    j["lambda"] = solved.lambda.str();
    Json fs = Json::array();
    for (const Rational& f : solved.F)
        fs.push_back(f.str());
    j["solved"] = std::move(fs);
    Json bs = Json::array();
    for (const Rational& f : binomial.F)
        bs.push_back(f.str());
    j["binomial"] = std::move(bs);
    j["equal"] = solved == binomial;
    return j;
}

Json full_report(const FixedPointSet& fps, int order) {
    require_valid(fps);
    if (order <= 0)
        order = default_order(fps);
    if (order < fps.half_dimension + 1)
        throw std::invalid_argument("localization: order must be at least n + 1");

    Json j;
    j["half_dimension"] = fps.half_dimension;
    j["point_count"] = fps.points.size();
    j["order"] = order;

    auto todd = genus_via_localization(todd_genus(order - 1), fps, order);
    auto chi = genus_via_localization(chi_y_genus(order - 1), fps, order);
    auto sig = genus_via_localization(signature_genus(order - 1), fps, order);
    auto eul = genus_via_localization(euler_genus(order - 1), fps, order);

    HamiltonicityVerdict verdict = classify_hamiltonian(fps, order);
    j["verdict"] = verdict_name(verdict.verdict);
    j["todd"] = todd.constant_term.str();

    YPolynomial count = chi_y_isolated(fps);
    BettiProfile betti = betti_from_moment_map(fps);
    PoincareIdentity poincare = poincare_identity_check(fps);

    j["chi_y"] = ypolynomial_to_json(count);
    j["chi_y_pretty"] = count.str();
    j["betti"] = betti.b;
    j["poincare"] = betti.poincare_str();

    Json genera_obj;
    genera_obj["todd"] = localization_report_to_json(todd, fps);
    genera_obj["chi_y"] = localization_report_to_json(chi, fps);
    genera_obj["signature"] = localization_report_to_json(sig, fps);
    genera_obj["euler"] = localization_report_to_json(eul, fps);
    j["localization"] = std::move(genera_obj);

    Json checks;
    checks["negative_part_zero"] = todd.negative_part_zero;
    checks["chi_y_localization_matches_count"] = chi.constant_term == count;
    checks["signature_matches_chi_y_at_1"] = sig.constant_term == count.eval(Rational(1));
    checks["euler_matches_point_count"] =
        eul.constant_term == Rational(static_cast<long long>(fps.points.size()));
    if (fps.points.empty()) {
        checks["parity_lemma"] = nullptr;
    } else {
        ParityCheck parity = check_parity_lemma(fps);
        checks["parity_lemma"] = parity.has_both_parities;
        Json witness;
        witness["even_d"] = parity.even_witness;
        witness["odd_d"] = parity.odd_witness;
        j["parity_witness"] = std::move(witness);
    }
    checks["poincare_identity"] = poincare.holds;
    if (fps.half_dimension % 2 == 0) {
        SignatureRelation rel = signature_relation_check(fps);
        checks["signature_relation"] = rel.holds;
        j["signature"] = rel.signature.str();
        j["betti_alternating_sum"] = rel.betti_alternating_sum.str();
    } else {
        checks["signature_relation"] = nullptr;
    }
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace genera
