// Command-line front end. Talks to the library exclusively through the
// C interface; all mathematics lives behind it.
//
// Exit codes: 0 success, 1 unreadable or malformed input, 2 the data is
// Conner-Floyd inconsistent (negative powers survive, or the Todd value
// rules out a symplectic action).

#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <genera/genera.h>

namespace {

using Json = nlohmann::ordered_json;

struct DatasetDeleter {
    void operator()(genera_dataset* d) const { genera_dataset_free(d); }
};
struct GenusDeleter {
    void operator()(genera_genus* g) const { genera_genus_free(g); }
};
struct StringDeleter {
    void operator()(char* s) const { genera_string_free(s); }
};
using DatasetPtr = std::unique_ptr<genera_dataset, DatasetDeleter>;
using GenusPtr = std::unique_ptr<genera_genus, GenusDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int fail() {
    std::cerr << "genera: " << genera_last_error() << "\n";
    return 1;
}

DatasetPtr load_dataset(const std::string& path) {
    genera_dataset* d = nullptr;
    if (genera_dataset_read(path.c_str(), &d) != GENERA_OK)
        return nullptr;
    return DatasetPtr(d);
}

GenusPtr load_genus(const std::string& name) {
    genera_genus* g = nullptr;
    genera_status s;
    const std::string custom = "custom:";
    if (name.rfind(custom, 0) == 0)
        s = genera_genus_read(name.substr(custom.size()).c_str(), &g);
    else
        s = genera_genus_builtin(name.c_str(), &g);
    return s == GENERA_OK ? GenusPtr(g) : nullptr;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    out << text;
    if (!out) {
        std::cerr << "genera: cannot write \"" << out_path << "\"\n";
        return 1;
    }
    return 0;
}

struct CommonOpts {
    std::string input;
    std::string genus = "todd";
    int order = 0;
    bool json = false;
    std::string out;
};

int run_compute(const CommonOpts& opt) {
    DatasetPtr d = load_dataset(opt.input);
    if (!d)
        return fail();
    GenusPtr g = load_genus(opt.genus);
    if (!g)
        return fail();
    char* raw = nullptr;
    if (genera_compute(d.get(), g.get(), opt.order, &raw) != GENERA_OK)
        return fail();
    StringPtr json(raw);
    Json report = Json::parse(json.get());

    bool consistent = report.at("negative_part_zero").get<bool>();
    std::cerr << "order " << report.at("order") << ", window [" << report.at("window")[0]
              << ", " << report.at("window")[1] << "]\n";
    if (!consistent) {
        std::cerr << "genera: fixed-point sum has nonzero negative powers of u at";
        for (const auto& m : report.at("negative_exponents_nonzero"))
            std::cerr << " " << m;
        std::cerr << "; data is Conner-Floyd inconsistent\n";
    }
    int code = 0;
    if (opt.json)
        code = emit(json.get(), opt.out);
    else if (consistent)
        code = emit(report.at("symbol").get<std::string>() + " = " +
                        report.at("constant_term_pretty").get<std::string>() + "\n",
                    opt.out);
    if (code != 0)
        return code;
    return consistent ? 0 : 2;
}

int run_classify(const CommonOpts& opt) {
    DatasetPtr d = load_dataset(opt.input);
    if (!d)
        return fail();
    char* raw = nullptr;
    if (genera_classify(d.get(), opt.order, &raw) != GENERA_OK)
        return fail();
    StringPtr json(raw);
    Json verdict = Json::parse(json.get());

    for (const auto& reason : verdict.at("reasons"))
        std::cerr << reason.get<std::string>() << "\n";
    int code = opt.json ? emit(json.get(), opt.out)
                        : emit(verdict.at("verdict").get<std::string>() + "\n", opt.out);
    if (code != 0)
        return code;
    return verdict.at("verdict") == "NotRealizable" ? 2 : 0;
}

int run_report(const CommonOpts& opt) {
    DatasetPtr d = load_dataset(opt.input);
    if (!d)
        return fail();
    char* raw = nullptr;
    if (genera_report(d.get(), opt.order, &raw) != GENERA_OK)
        return fail();
    StringPtr json(raw);
    Json report = Json::parse(json.get());
    int code = emit(json.get(), opt.out);
    if (code != 0)
        return code;
    return report.at("verdict") == "NotRealizable" ? 2 : 0;
}

int emit_dataset(const genera_dataset* d, const std::string& out_path) {
    char* raw = nullptr;
    if (genera_dataset_json(d, &raw) != GENERA_OK)
        return fail();
    StringPtr json(raw);
    return emit(json.get(), out_path);
}

int run_example_cpn(const std::vector<long long>& weights, const std::string& out_path) {
    if (weights.size() < 2) {
        std::cerr << "genera: need at least two weights\n";
        return 1;
    }
    if (std::set<long long>(weights.begin(), weights.end()).size() != weights.size()) {
        std::cerr << "genera: weights must be distinct\n";
        return 1;
    }
    genera_dataset* d = nullptr;
    if (genera_dataset_cp(weights.data(), weights.size(), &d) != GENERA_OK)
        return fail();
    DatasetPtr holder(d);
    return emit_dataset(d, out_path);
}

int run_example_product(const std::string& a_path, const std::string& b_path,
                        const std::string& out_path) {
    DatasetPtr a = load_dataset(a_path);
    if (!a)
        return fail();
    DatasetPtr b = load_dataset(b_path);
    if (!b)
        return fail();
    genera_dataset* d = nullptr;
    if (genera_dataset_product(a.get(), b.get(), &d) != GENERA_OK)
        return fail();
    DatasetPtr holder(d);
    return emit_dataset(d, out_path);
}

int run_example_semifree(int n, const std::string& out_path) {
    if (n < 1) {
        std::cerr << "genera: n must be at least 1\n";
        return 1;
    }
    genera_dataset* d = nullptr;
    if (genera_dataset_semifree_power(n, &d) != GENERA_OK)
        return fail();
    DatasetPtr holder(d);
    return emit_dataset(d, out_path);
}

std::string profile_str(const Json& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ", ";
        out += values[i].get<std::string>();
    }
    return out + ")";
}

int run_semifree(int n, const std::string& lambda, bool as_json, const std::string& out_path) {
    if (n < 1) {
        std::cerr << "genera: n must be at least 1\n";
        return 1;
    }
    char* raw = nullptr;
    if (genera_semifree_profile(n, lambda.c_str(), &raw) != GENERA_OK)
        return fail();
    StringPtr json(raw);
    Json profile = Json::parse(json.get());
    if (!profile.at("equal").get<bool>()) {
        std::cerr << "genera: localization solution disagrees with the binomial profile\n";
        return 1;
    }
    if (as_json)
        return emit(json.get(), out_path);
    std::string text = "n = " + std::to_string(n) + ", lambda = " + lambda + "\n" +
                       "solved   = " + profile_str(profile.at("solved")) + "\n" +
                       "binomial = " + profile_str(profile.at("binomial")) + "\n";
    return emit(text, out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hirzebruch genera of circle-action manifolds from fixed-point data"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(genera_version()));

    CommonOpts compute_opt, classify_opt, report_opt;

    auto add_common = [](CLI::App* sub, CommonOpts& opt, bool with_genus) {
        sub->add_option("input", opt.input, "dataset JSON file")->required();
        if (with_genus)
            sub->add_option("--genus", opt.genus,
                            "todd|chi_y|signature|euler|custom:<path>");
        sub->add_option("--order", opt.order, "truncation order (default n+8)");
        sub->add_flag("--json", opt.json, "machine JSON on stdout");
        sub->add_option("--out", opt.out, "write output to a file");
    };

    CLI::App* compute = app.add_subcommand("compute", "evaluate one genus via localization");
    add_common(compute, compute_opt, true);

    CLI::App* classify = app.add_subcommand("classify", "Hamiltonicity verdict (Todd dichotomy)");
    add_common(classify, classify_opt, false);

    CLI::App* report = app.add_subcommand("report", "consolidated JSON report of all checks");
    add_common(report, report_opt, false);

    CLI::App* example = app.add_subcommand("example", "generate standard datasets");
    example->require_subcommand(1);
    std::vector<long long> cpn_weights;
    std::string example_out, product_a, product_b;
    int semifree_n = 0;
    CLI::App* cpn = example->add_subcommand("cpn", "linear circle action on CP(n)");
    cpn->add_option("--weights", cpn_weights, "action exponents, e.g. 0,1,2")
        ->required()
        ->delimiter(',');
    cpn->add_option("--out", example_out, "write output to a file");
    CLI::App* product = example->add_subcommand("product", "product of two datasets");
    product->add_option("a", product_a, "first dataset file")->required();
    product->add_option("b", product_b, "second dataset file")->required();
    product->add_option("--out", example_out, "write output to a file");
    CLI::App* semifree_ex = example->add_subcommand("semifree", "n-fold semi-free sphere power");
    semifree_ex->add_option("--n", semifree_n, "number of sphere factors")->required();
    semifree_ex->add_option("--out", example_out, "write output to a file");

    CLI::App* semifree = app.add_subcommand("semifree", "fixed-point profile of semi-free actions");
    int profile_n = 0;
    std::string lambda = "1";
    bool profile_json = false;
    std::string profile_out;
    semifree->add_option("--n", profile_n, "half-dimension")->required();
    semifree->add_option("--lambda", lambda, "rational scale, default 1");
    semifree->add_flag("--json", profile_json, "machine JSON on stdout");
    semifree->add_option("--out", profile_out, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (compute->parsed())
        return run_compute(compute_opt);
    if (classify->parsed())
        return run_classify(classify_opt);
    if (report->parsed())
        return run_report(report_opt);
    if (example->parsed()) {
        if (cpn->parsed())
            return run_example_cpn(cpn_weights, example_out);
        if (product->parsed())
            return run_example_product(product_a, product_b, example_out);
        if (semifree_ex->parsed())
            return run_example_semifree(semifree_n, example_out);
    }
    if (semifree->parsed())
        return run_semifree(profile_n, lambda, profile_json, profile_out);
    return 1;
}
