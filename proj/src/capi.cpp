#include "genera/genera.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "datasets.hpp"
#include "json_io.hpp"
#include "localization.hpp"
#include "theorems.hpp"

using namespace genera;

struct genera_dataset {
    FixedPointSet fps;
};

struct genera_genus {
    // Built-in genera are materialized to whatever order a computation
    // needs; a custom genus is pinned to the cp_values it was given.
    std::string name;
    bool builtin;
    AnyGenus custom;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
genera_status guarded(F&& body) {
    try {
        body();
        t_last_error.clear();
        return GENERA_OK;
    } catch (const ParseError& e) {
        t_last_error = e.what();
        return GENERA_ERR_PARSE;
    } catch (const InvalidDatasetError& e) {
        t_last_error = e.what();
        return GENERA_ERR_INVALID_DATASET;
    } catch (const std::logic_error& e) {
        t_last_error = e.what();
        return GENERA_ERR_ARGUMENT;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return GENERA_ERR_INTERNAL;
    }
}

void require(bool ok, const char* message) {
    if (!ok)
        throw std::invalid_argument(message);
}

int resolve_order(const FixedPointSet& fps, int order) {
    if (order == 0)
        return default_order(fps);
    if (order < fps.half_dimension + 1)
        throw std::invalid_argument("order must be at least n + 1");
    return order;
}

AnyGenus materialize(const genera_genus& g, int order) {
    if (!g.builtin)
        return g.custom;
    if (g.name == "todd")
        return todd_genus(order - 1);
    if (g.name == "chi_y")
        return chi_y_genus(order - 1);
    if (g.name == "signature")
        return signature_genus(order - 1);
    return euler_genus(order - 1);
}

}  // namespace

extern "C" {

const char* genera_version(void) {
    return "1.0.0";
}

const char* genera_last_error(void) {
    return t_last_error.c_str();
}

void genera_string_free(char* s) {
    std::free(s);
}

genera_status genera_dataset_parse(const char* json_text, genera_dataset** out) {
    return guarded([&] {
        require(json_text != nullptr && out != nullptr, "dataset_parse: null argument");
        *out = new genera_dataset{dataset_from_string(json_text)};
    });
}

genera_status genera_dataset_read(const char* path, genera_dataset** out) {
    return guarded([&] {
        require(path != nullptr && out != nullptr, "dataset_read: null argument");
        *out = new genera_dataset{dataset_from_file(path)};
    });
}

genera_status genera_dataset_cp(const long long* exponents, size_t count,
                                genera_dataset** out) {
    return guarded([&] {
        require(exponents != nullptr && out != nullptr, "dataset_cp: null argument");
        std::vector<long long> a(exponents, exponents + count);
        *out = new genera_dataset{cp_n_dataset(a)};
    });
}

genera_status genera_dataset_semifree_power(int n, genera_dataset** out) {
    return guarded([&] {
        require(out != nullptr, "dataset_semifree_power: null argument");
        *out = new genera_dataset{semifree_sphere_power(n)};
    });
}

genera_status genera_dataset_product(const genera_dataset* a, const genera_dataset* b,
                                     genera_dataset** out) {
    return guarded([&] {
        require(a != nullptr && b != nullptr && out != nullptr,
                "dataset_product: null argument");
        *out = new genera_dataset{product_dataset(a->fps, b->fps)};
    });
}

void genera_dataset_free(genera_dataset* d) {
    delete d;
}

int genera_dataset_half_dimension(const genera_dataset* d) {
    return d == nullptr ? -1 : d->fps.half_dimension;
}

long long genera_dataset_point_count(const genera_dataset* d) {
    return d == nullptr ? -1 : static_cast<long long>(d->fps.points.size());
}

genera_status genera_dataset_json(const genera_dataset* d, char** out_json) {
    return guarded([&] {
        require(d != nullptr && out_json != nullptr, "dataset_json: null argument");
        *out_json = dup_string(dataset_to_string(d->fps));
    });
}

genera_status genera_dataset_validate(const genera_dataset* d, char** out_json) {
    return guarded([&] {
        require(d != nullptr && out_json != nullptr, "dataset_validate: null argument");
        *out_json = dup_string(dump_json(validation_to_json(validate_dataset(d->fps))));
    });
}

genera_status genera_genus_builtin(const char* name, genera_genus** out) {
    return guarded([&] {
        require(name != nullptr && out != nullptr, "genus_builtin: null argument");
        std::string n = name;
        require(n == "todd" || n == "chi_y" || n == "signature" || n == "euler",
                "genus_builtin: name must be todd, chi_y, signature or euler");
        *out = new genera_genus{std::move(n), true, GenusSpec<Rational>{}};
    });
}

genera_status genera_genus_parse(const char* json_text, genera_genus** out) {
    return guarded([&] {
        require(json_text != nullptr && out != nullptr, "genus_parse: null argument");
        Json j = Json::parse(std::string(json_text), nullptr, false);
        if (j.is_discarded())
            throw ParseError("genus input is not valid JSON");
        AnyGenus g = genus_from_json(j);
        std::string name = std::visit([](const auto& h) { return h.name; }, g);
        *out = new genera_genus{std::move(name), false, std::move(g)};
    });
}

genera_status genera_genus_read(const char* path, genera_genus** out) {
    return guarded([&] {
        require(path != nullptr && out != nullptr, "genus_read: null argument");
        AnyGenus g = genus_from_file(path);
        std::string name = std::visit([](const auto& h) { return h.name; }, g);
        *out = new genera_genus{std::move(name), false, std::move(g)};
    });
}

void genera_genus_free(genera_genus* g) {
    delete g;
}

const char* genera_genus_name(const genera_genus* g) {
    return g == nullptr ? "" : g->name.c_str();
}

genera_status genera_compute(const genera_dataset* d, const genera_genus* g, int order,
                             char** out_json) {
    return guarded([&] {
        require(d != nullptr && g != nullptr && out_json != nullptr,
                "compute: null argument");
        require_valid(d->fps);
        int resolved = resolve_order(d->fps, order);
        AnyGenus spec = materialize(*g, resolved);
        Json j = std::visit(
            [&](const auto& h) {
                return localization_report_to_json(genus_via_localization(h, d->fps, resolved),
                                                   d->fps);
            },
            spec);
        *out_json = dup_string(dump_json(j));
    });
}

genera_status genera_classify(const genera_dataset* d, int order, char** out_json) {
    return guarded([&] {
        require(d != nullptr && out_json != nullptr, "classify: null argument");
        if (order != 0)
            order = resolve_order(d->fps, order);
        HamiltonicityVerdict v = classify_hamiltonian(d->fps, order);
        *out_json = dup_string(dump_json(verdict_to_json(v)));
    });
}

genera_status genera_report(const genera_dataset* d, int order, char** out_json) {
    return guarded([&] {
        require(d != nullptr && out_json != nullptr, "report: null argument");
        *out_json = dup_string(dump_json(full_report(d->fps, order)));
    });
}

genera_status genera_semifree_profile(int n, const char* lambda, char** out_json) {
    return guarded([&] {
        require(lambda != nullptr && out_json != nullptr,
                "semifree_profile: null argument");
        require(n >= 1, "semifree_profile: n must be at least 1");
        Rational lam = Rational::from_string(lambda);
        SemifreeProfile solved = solve_semifree_system(n, lam);
        SemifreeProfile closed = semifree_profile(n, lam);
        *out_json = dup_string(dump_json(semifree_to_json(solved, closed)));
    });
}

}  // extern "C"
