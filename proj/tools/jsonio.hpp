#ifndef TRW_TOOLS_JSONIO_HPP
#define TRW_TOOLS_JSONIO_HPP

// JSON encoding of the core types for machine-readable certificates.
// All big integers are emitted as decimal strings: JSON numbers would
// silently lose precision past 2^53 in downstream consumers.

#include <fstream>
#include <string>
#include <utility>

#include <trw/families.hpp>
#include <trw/intpoly.hpp>
#include <trw/multiparam.hpp>
#include <trw/version.hpp>

#include "json.hpp"

namespace trwcli {

using ordered_json = nlohmann::ordered_json;

inline ordered_json poly_to_json(const trw::IntPoly& f) {
    ordered_json j;
    j["var"] = "x";
    ordered_json coeffs = ordered_json::array();
    for (std::size_t i = 0; i < f.size(); ++i) coeffs.push_back(f.coeff(i).get_str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline ordered_json param_poly_to_json(const trw::MultiParamPoly& p) {
    ordered_json j;
    j["params"] = p.params();
    ordered_json terms = ordered_json::array();
    for (const auto& [exps, coeff] : p.terms()) {
        ordered_json t;
        t["exps"] = exps;
        t["coeff"] = coeff.get_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

// Polynomial in x whose coefficients are parametric: one nested parametric
// object per x-power, ascending, mirroring the plain "coeffs" layout.
inline ordered_json family_poly_to_json(const trw::ParamXPoly& p) {
    ordered_json j;
    j["var"] = "x";
    ordered_json coeffs = ordered_json::array();
    for (int k = 0; k <= p.degree(); ++k)
        coeffs.push_back(param_poly_to_json(p.coeff(static_cast<std::size_t>(k))));
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline ordered_json range_to_json(const std::string& param, const trw::ParamRange& r) {
    ordered_json j;
    j["param"] = param;
    j["lo"] = r.lo.get_str();
    j["hi"] = r.hi.get_str();
    return j;
}

inline ordered_json family_to_json(const trw::ParamFamily& fam) {
    ordered_json j;
    j["name"] = fam.name;
    j["params"] = fam.params;
    j["degree"] = fam.degree;
    j["poly"] = family_poly_to_json(fam.poly);
    ordered_json ranges = ordered_json::array();
    for (std::size_t i = 0; i < fam.params.size(); ++i)
        ranges.push_back(range_to_json(fam.params[i], fam.default_ranges[i]));
    j["default_ranges"] = std::move(ranges);
    j["provenance"] = fam.provenance;
    return j;
}

// Assembles a certificate and optionally writes it.  elapsed_ms is pinned to
// zero so that re-running a command yields byte-identical output; wall-clock
// timings are reported on the human-readable stream only.
struct CertSink {
    std::string command;
    ordered_json inputs = ordered_json::object();
    ordered_json results = ordered_json::object();
    ordered_json failures = ordered_json::array();
    std::string json_path;

    int finish() const {
        if (!json_path.empty()) {
            ordered_json cert;
            cert["tool_version"] = trw::version;
            cert["command"] = command;
            cert["inputs"] = inputs;
            cert["results"] = results;
            cert["failures"] = failures;
            cert["elapsed_ms"] = 0;
            std::ofstream out(json_path, std::ios::binary);
            if (!out) throw trw::Error("cannot open '" + json_path + "' for writing");
            out << cert.dump(2) << '\n';
            if (!out) throw trw::Error("failed writing certificate to '" + json_path + "'");
        }
        return failures.empty() ? 0 : 1;
    }
};

}  // namespace trwcli

#endif
