// trw — command line frontend for the root-power toolkit.
//
// Every subcommand prints a human-readable report on stdout and, with
// `--json <path>`, writes a machine-readable certificate (see
// certificate.schema.json next to this file).  Exit codes: 0 all checks
// passed, 1 checks ran and something failed, 2 usage or input error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <trw/families.hpp>
#include <trw/family_dsl.hpp>
#include <trw/intpoly.hpp>
#include <trw/multiparam.hpp>
#include <trw/realroots.hpp>
#include <trw/symfun.hpp>
#include <trw/version.hpp>
#include <trw/waring.hpp>

#include "CLI11.hpp"
#include "jsonio.hpp"

namespace {

using trwcli::CertSink;
using trwcli::ordered_json;

// ---------------------------------------------------------------- helpers

const trw::ParamFamily& lookup_family(const std::string& key) {
    const auto& reg = trw::registry();
    for (const auto& f : reg)
        if (f.name == key) return f;
    const trw::ParamFamily* hit = nullptr;
    std::string matches, all;
    for (const auto& f : reg) {
        if (!all.empty()) all += ", ";
        all += f.name;
        if (f.name.rfind(key, 0) == 0) {
            if (!matches.empty()) matches += ", ";
            matches += f.name;
            hit = &f;
        }
    }
    if (hit != nullptr && matches == hit->name) return *hit;
    if (matches.empty())
        throw trw::Error("unknown family '" + key + "'; known families: " + all);
    throw trw::Error("ambiguous family '" + key + "': matches " + matches);
}

// Polynomial literal in the variable x (family DSL expression grammar).
trw::IntPoly parse_poly_arg(const std::string& text) {
    return trw::parse_poly_expr(text, {}).instantiate({});
}

mpz_class parse_int_arg(const std::string& text, const char* what) {
    try {
        return mpz_class(text);
    } catch (const std::invalid_argument&) {
        throw trw::Error(std::string("invalid ") + what + " '" + text +
                         "' (expected a decimal integer)");
    }
}

mpq_class parse_rational_arg(const std::string& text, const char* what) {
    mpq_class q;
    try {
        q = mpq_class(text);
    } catch (const std::invalid_argument&) {
        throw trw::Error(std::string("invalid ") + what + " '" + text +
                         "' (expected p or p/q in decimal)");
    }
    if (q.get_den() == 0)
        throw trw::Error(std::string("zero denominator in ") + what + " '" + text + "'");
    q.canonicalize();
    return q;
}

struct RangeArg {
    std::string param;
    trw::ParamRange range;
};

// "name=lo..hi", e.g. "a=-1..50".
RangeArg parse_range_arg(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0)
        throw trw::Error("invalid range '" + text + "' (expected name=lo..hi)");
    const std::string body = text.substr(eq + 1);
    const auto dots = body.find("..");
    if (dots == std::string::npos)
        throw trw::Error("invalid range '" + text + "' (expected name=lo..hi)");
    RangeArg r;
    r.param = text.substr(0, eq);
    r.range.lo = parse_int_arg(body.substr(0, dots), "range endpoint");
    r.range.hi = parse_int_arg(body.substr(dots + 2), "range endpoint");
    if (r.range.lo > r.range.hi)
        throw trw::Error("empty range '" + text + "' (lo > hi)");
    return r;
}

std::string join_mpz(const std::vector<mpz_class>& v, const char* sep) {
    std::string out;
    for (const auto& x : v) {
        if (!out.empty()) out += sep;
        out += x.get_str();
    }
    return out;
}

// -------------------------------------------------------------- commands

struct ListOpts {
    std::string json_path;
};

int run_list_families(const ListOpts& o) {
    CertSink cert{"list-families"};
    cert.json_path = o.json_path;
    ordered_json fams = ordered_json::array();
    for (const auto& fam : trw::registry()) {
        fams.push_back(trwcli::family_to_json(fam));
        std::cout << fam.name << " (degree " << fam.degree << "): " << fam.poly.to_string()
                  << "\n";
        for (std::size_t i = 0; i < fam.params.size(); ++i)
            std::cout << "  parameter " << fam.params[i] << " in [" << fam.default_ranges[i].lo
                      << ", " << fam.default_ranges[i].hi << "]\n";
        std::cout << "  " << fam.provenance << "\n";
    }
    cert.results["families"] = std::move(fams);
    return cert.finish();
}

struct VerifyOpts {
    std::string family;
    std::vector<std::string> ranges;
    unsigned jobs = 1;
    std::string json_path;
};

int run_verify(const VerifyOpts& o) {
    const auto& fam = lookup_family(o.family);
    std::vector<trw::ParamRange> ranges = fam.default_ranges;
    std::vector<bool> seen(fam.params.size(), false);
    for (const auto& text : o.ranges) {
        RangeArg r = parse_range_arg(text);
        std::size_t idx = fam.params.size();
        for (std::size_t i = 0; i < fam.params.size(); ++i)
            if (fam.params[i] == r.param) idx = i;
        if (idx == fam.params.size())
            throw trw::Error("family " + fam.name + " has no parameter '" + r.param + "'");
        if (seen[idx]) throw trw::Error("parameter '" + r.param + "' given two ranges");
        seen[idx] = true;
        ranges[idx] = r.range;
    }

    trw::FamilyReport rep = trw::verify_range(fam, ranges, o.jobs);

    CertSink cert{"verify"};
    cert.json_path = o.json_path;
    cert.inputs["family"] = fam.name;
    ordered_json jranges = ordered_json::array();
    for (std::size_t i = 0; i < fam.params.size(); ++i)
        jranges.push_back(trwcli::range_to_json(fam.params[i], ranges[i]));
    cert.inputs["ranges"] = std::move(jranges);
    cert.results["instances"] = rep.instances;
    cert.results["failure_count"] = rep.failures.size();

    std::cout << "family " << fam.name << ": " << rep.instances << " instances, "
              << rep.failures.size() << " failures (" << rep.elapsed_ms << " ms)\n";
    for (const auto& inst : rep.failures) {
        ordered_json f;
        ordered_json assignment = ordered_json::object();
        std::string human;
        for (const auto& [p, v] : inst.assignment) {
            assignment[p] = v.get_str();
            if (!human.empty()) human += ", ";
            human += p + "=" + v.get_str();
        }
        f["assignment"] = std::move(assignment);
        f["totally_real"] = inst.totally_real;
        f["unit_constant"] = inst.unit_constant;
        f["degree_ok"] = inst.degree_ok;
        cert.failures.push_back(std::move(f));
        std::cout << "  FAIL " << human << ": totally_real=" << (inst.totally_real ? "yes" : "no")
                  << " unit_constant=" << (inst.unit_constant ? "yes" : "no")
                  << " degree=" << (inst.degree_ok ? "yes" : "no") << "\n";
    }
    return cert.finish();
}

struct WitnessOpts {
    std::string family;
    unsigned n = 0;
    std::string json_path;
};

int run_witness(const WitnessOpts& o) {
    const auto& fam = lookup_family(o.family);
    CertSink cert{"witness"};
    cert.json_path = o.json_path;
    cert.inputs["family"] = fam.name;
    cert.inputs["torsion_half_order"] = o.n;
    try {
        trw::WitnessReport w = trw::build_witness(fam, o.n);
        cert.results["k"] = w.k;
        cert.results["exponent"] = w.exponent;
        cert.results["witness"] = trwcli::param_poly_to_json(w.witness);
        cert.results["nonconstant"] = w.nonconstant;
        std::cout << "family " << fam.name << ", torsion half-order N = " << w.N << "\n"
                  << "  k = " << w.k << ", exponent 2Nk = " << w.exponent << "\n"
                  << "  witness q_" << w.exponent << "(" << fam.params[0]
                  << ") = " << w.witness.to_string() << "  [nonconstant]\n";
    } catch (const trw::NoWitnessInRange& e) {
        ordered_json f;
        f["type"] = "no_witness";
        f["message"] = e.what();
        cert.failures.push_back(std::move(f));
        std::cout << "family " << fam.name << ": " << e.what() << "\n";
    }
    return cert.finish();
}

struct PowersumOpts {
    std::string poly;
    unsigned m_max = 0;
    std::string json_path;
};

int run_powersum(const PowersumOpts& o) {
    trw::IntPoly f = parse_poly_arg(o.poly);
    trw::PowerSums ps = trw::power_sums_from_coeffs(f, o.m_max);
    CertSink cert{"powersum"};
    cert.json_path = o.json_path;
    cert.inputs["poly"] = trwcli::poly_to_json(f);
    cert.inputs["m_max"] = o.m_max;
    ordered_json values = ordered_json::array();
    for (std::size_t i = 0; i < ps.values.size(); ++i) {
        values.push_back(ps.values[i].get_str());
        std::cout << "q_" << (i + 1) << " = " << ps.values[i] << "\n";
    }
    cert.results["values"] = std::move(values);
    return cert.finish();
}

struct RootpowerOpts {
    std::string poly;
    unsigned power = 0;
    std::string json_path;
};

int run_rootpower(const RootpowerOpts& o) {
    trw::IntPoly f = parse_poly_arg(o.poly);
    trw::IntPoly g = trw::root_power_transform(f, o.power);
    CertSink cert{"rootpower"};
    cert.json_path = o.json_path;
    cert.inputs["poly"] = trwcli::poly_to_json(f);
    cert.inputs["power"] = o.power;
    cert.results["result"] = trwcli::poly_to_json(g);
    std::cout << trw::to_string(g) << "\n";
    return cert.finish();
}

struct SturmOpts {
    std::string poly;
    std::string json_path;
};

int run_sturm(const SturmOpts& o) {
    trw::IntPoly f = parse_poly_arg(o.poly);
    trw::SturmChain chain = trw::sturm_chain(f);
    unsigned count = trw::count_real_roots(f);
    CertSink cert{"sturm"};
    cert.json_path = o.json_path;
    cert.inputs["poly"] = trwcli::poly_to_json(f);
    ordered_json jchain = ordered_json::array();
    std::cout << "Sturm chain of the squarefree part:\n";
    for (std::size_t i = 0; i < chain.chain.size(); ++i) {
        jchain.push_back(trwcli::poly_to_json(chain.chain[i]));
        std::cout << "  S_" << i << " = " << trw::to_string(chain.chain[i]) << "\n";
    }
    cert.results["chain"] = std::move(jchain);
    cert.results["real_roots"] = count;
    std::cout << "distinct real roots: " << count << "\n";
    return cert.finish();
}

struct CountRootsOpts {
    std::string poly;
    std::string lo, hi;
    std::string json_path;
};

int run_count_roots(const CountRootsOpts& o) {
    trw::IntPoly f = parse_poly_arg(o.poly);
    CertSink cert{"count-roots"};
    cert.json_path = o.json_path;
    cert.inputs["poly"] = trwcli::poly_to_json(f);
    unsigned count = 0;
    if (o.lo.empty()) {
        cert.inputs["lo"] = nullptr;
        cert.inputs["hi"] = nullptr;
        count = trw::count_real_roots(f);
        std::cout << "distinct real roots: " << count << "\n";
    } else {
        mpq_class lo = parse_rational_arg(o.lo, "interval endpoint");
        mpq_class hi = parse_rational_arg(o.hi, "interval endpoint");
        cert.inputs["lo"] = lo.get_str();
        cert.inputs["hi"] = hi.get_str();
        count = trw::count_real_roots(f, lo, hi);
        std::cout << "distinct real roots in (" << lo << ", " << hi << "): " << count << "\n";
    }
    cert.results["count"] = count;
    return cert.finish();
}

struct PolyOnlyOpts {
    std::string poly;
    std::string json_path;
};

int run_discriminant(const PolyOnlyOpts& o) {
    trw::IntPoly f = parse_poly_arg(o.poly);
    mpz_class disc = trw::discriminant(f);
    CertSink cert{"discriminant"};
    cert.json_path = o.json_path;
    cert.inputs["poly"] = trwcli::poly_to_json(f);
    cert.results["discriminant"] = disc.get_str();
    std::cout << "discriminant = " << disc << "\n";
    return cert.finish();
}

int run_cyclic_cubic(const PolyOnlyOpts& o) {
    trw::IntPoly f = parse_poly_arg(o.poly);
    bool cyclic = trw::cyclic_cubic_check(f);
    mpz_class disc = trw::discriminant(f);
    CertSink cert{"cyclic-cubic"};
    cert.json_path = o.json_path;
    cert.inputs["poly"] = trwcli::poly_to_json(f);
    cert.results["discriminant"] = disc.get_str();
    cert.results["cyclic"] = cyclic;
    if (cyclic) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
        cert.results["sqrt"] = root.get_str();
        std::cout << "cyclic: discriminant " << disc << " = " << root << "^2\n";
    } else {
        ordered_json fail;
        fail["type"] = "not_cyclic";
        fail["message"] =
            "discriminant " + disc.get_str() + " is not a positive perfect square";
        cert.failures.push_back(std::move(fail));
        std::cout << "not cyclic: discriminant " << disc
                  << " is not a positive perfect square\n";
    }
    return cert.finish();
}

struct GenQuarticOpts {
    std::string a, b, d;
    std::string json_path;
};

int run_gen_quartic2(const GenQuarticOpts& o) {
    mpz_class a = parse_int_arg(o.a, "a");
    mpz_class b = parse_int_arg(o.b, "b");
    mpz_class d = parse_int_arg(o.d, "d");
    trw::IntPoly f = trw::gen_quartic_2param(a, b, d);
    CertSink cert{"gen-quartic2"};
    cert.json_path = o.json_path;
    cert.inputs["a"] = a.get_str();
    cert.inputs["b"] = b.get_str();
    cert.inputs["d"] = d.get_str();
    cert.results["poly"] = trwcli::poly_to_json(f);
    std::cout << trw::to_string(f) << "\n";
    return cert.finish();
}

struct GenUnitOpts {
    std::string h;
    std::string alpha;
    std::string params = "t1,t2";
    std::string json_path;
};

int run_gen_unit_family(const GenUnitOpts& o) {
    const auto comma = o.params.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == o.params.size())
        throw trw::Error("--params expects two comma-separated names, e.g. t1,t2");
    std::vector<std::string> names{o.params.substr(0, comma), o.params.substr(comma + 1)};
    if (names[0] == names[1]) throw trw::Error("--params names must be distinct");

    trw::ParamXPoly hx = trw::parse_poly_expr(o.h, names);
    if (hx.degree() > 0)
        throw trw::Error("h must not involve x; it is a polynomial in " + names[0] + " and " +
                         names[1] + " only");
    trw::MultiParamPoly h = hx.coeff(0);
    trw::IntPoly alpha = parse_poly_arg(o.alpha);

    trw::ParamFamily fam = trw::gen_unit_family(h, alpha);
    CertSink cert{"gen-unit-family"};
    cert.json_path = o.json_path;
    cert.inputs["h"] = trwcli::param_poly_to_json(h);
    cert.inputs["alpha"] = trwcli::poly_to_json(alpha);
    cert.results["family"] = trwcli::family_to_json(fam);
    std::cout << fam.name << " (degree " << fam.degree << "): " << fam.poly.to_string() << "\n"
              << "  " << fam.provenance << "\n";
    return cert.finish();
}

struct FourSquaresOpts {
    std::string m;
    std::string json_path;
};

int run_foursquares(const FourSquaresOpts& o) {
    mpz_class m = parse_int_arg(o.m, "m");
    trw::FourSquares s = trw::four_squares(m);
    CertSink cert{"foursquares"};
    cert.json_path = o.json_path;
    cert.inputs["m"] = m.get_str();
    ordered_json parts = ordered_json::array();
    std::cout << m << " =";
    for (std::size_t i = 0; i < 4; ++i) {
        parts.push_back(s.parts[i].get_str());
        std::cout << (i == 0 ? " " : " + ") << s.parts[i] << "^2";
    }
    std::cout << "\n";
    cert.results["parts"] = std::move(parts);
    return cert.finish();
}

struct KamkeOpts {
    std::string poly;
    std::string m;
    unsigned r = 0;
    std::string json_path;
};

int run_kamke(const KamkeOpts& o) {
    trw::IntPoly f = parse_poly_arg(o.poly);
    mpz_class m = parse_int_arg(o.m, "m");
    auto rep = trw::kamke_represent(f, m, o.r);
    CertSink cert{"kamke"};
    cert.json_path = o.json_path;
    cert.inputs["poly"] = trwcli::poly_to_json(f);
    cert.inputs["m"] = m.get_str();
    cert.inputs["r"] = o.r;
    if (rep.has_value()) {
        // Re-check the certificate independently of the search.
        mpz_class sum = rep->s2;
        for (const auto& t : rep->terms) sum += trw::eval(f, t);
        if (sum != m || rep->s2 < 0 ||
            rep->s2 + static_cast<long>(rep->terms.size()) > static_cast<long>(o.r))
            throw trw::Error("internal error: search returned an invalid representation");
        cert.results["found"] = true;
        ordered_json terms = ordered_json::array();
        for (const auto& t : rep->terms) terms.push_back(t.get_str());
        cert.results["terms"] = std::move(terms);
        cert.results["s2"] = rep->s2.get_str();
        std::cout << m << " = ";
        for (std::size_t i = 0; i < rep->terms.size(); ++i)
            std::cout << (i == 0 ? "" : " + ") << "f(" << rep->terms[i] << ")";
        if (rep->s2 != 0 || rep->terms.empty())
            std::cout << (rep->terms.empty() ? "" : " + ") << rep->s2 << "*1";
        std::cout << "  (terms " << join_mpz(rep->terms, ", ") << "; s2 = " << rep->s2 << ")\n";
    } else {
        cert.results["found"] = false;
        ordered_json fail;
        fail["type"] = "not_found";
        fail["message"] =
            "no representation of " + m.get_str() + " with budget r = " + std::to_string(o.r);
        cert.failures.push_back(std::move(fail));
        std::cout << "no representation of " << m << " with budget r = " << o.r << "\n";
    }
    return cert.finish();
}

struct KamkeScanOpts {
    std::string poly;
    unsigned m_max = 0;
    unsigned r_max = 0;
    unsigned jobs = 1;
    std::string json_path;
};

int run_kamke_scan(const KamkeScanOpts& o) {
    trw::IntPoly f = parse_poly_arg(o.poly);
    const auto start = std::chrono::steady_clock::now();
    trw::KamkeScan scan = trw::kamke_scan(f, o.m_max, o.r_max, o.jobs);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    CertSink cert{"kamke-scan"};
    cert.json_path = o.json_path;
    cert.inputs["poly"] = trwcli::poly_to_json(f);
    cert.inputs["m_max"] = o.m_max;
    cert.inputs["r_max"] = o.r_max;
    cert.results["min_r"] = scan.min_r;
    cert.results["gaps"] = scan.gaps;
    cert.results["overall_max"] = scan.overall_max;
    cert.results["attained_at"] = scan.attained_at;
    std::cout << "m <= " << o.m_max << ", budget <= " << o.r_max << " (" << ms << " ms)\n";
    if (scan.attained_at != 0)
        std::cout << "overall maximum r = " << scan.overall_max << ", first attained at m = "
                  << scan.attained_at << "\n";
    if (scan.gaps.empty()) {
        std::cout << "gaps: none\n";
    } else {
        std::cout << "gaps (no representation within budget):";
        for (unsigned g : scan.gaps) std::cout << " " << g;
        std::cout << "\n";
    }
    return cert.finish();
}

struct PhiwOpts {
    std::string a, b;
    unsigned x_max = 100;
    std::string json_path;
};

int run_phiw(const PhiwOpts& o) {
    mpz_class a = parse_int_arg(o.a, "a");
    mpz_class b = parse_int_arg(o.b, "b");
    trw::PhiWReport rep = trw::phi_w_set(a, b, o.x_max);
    CertSink cert{"phiw"};
    cert.json_path = o.json_path;
    cert.inputs["a"] = a.get_str();
    cert.inputs["b"] = b.get_str();
    cert.inputs["x_max"] = o.x_max;
    ordered_json members = ordered_json::array();
    for (const auto& x : rep.members) members.push_back(x.get_str());
    cert.results["members"] = std::move(members);
    cert.results["chain_equal"] = rep.chain_equal;
    std::cout << "{" << join_mpz(rep.members, ", ") << "}\n";
    if (rep.chain_equal) {
        std::cout << "containment chain: EQUAL\n";
    } else {
        ordered_json fail;
        fail["type"] = "chain_mismatch";
        fail["message"] = "phi_W set differs from {x : 0 < ax < b} on the window";
        cert.failures.push_back(std::move(fail));
        std::cout << "containment chain: NOT EQUAL\n";
    }
    return cert.finish();
}

struct ParseOpts {
    std::string file;
    std::string json_path;
};

int run_parse(const ParseOpts& o) {
    std::ifstream in(o.file, std::ios::binary);
    if (!in) throw trw::Error("cannot open '" + o.file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    CertSink cert{"parse"};
    cert.json_path = o.json_path;
    cert.inputs["file"] = o.file;
    cert.inputs["text"] = text;
    try {
        trw::ParamFamily fam = trw::parse_family(text);
        cert.results["family"] = trwcli::family_to_json(fam);
        std::cout << "ok: family " << fam.name << " (degree " << fam.degree << "): "
                  << fam.poly.to_string() << "\n";
        for (std::size_t i = 0; i < fam.params.size(); ++i)
            std::cout << "  parameter " << fam.params[i] << " in [" << fam.default_ranges[i].lo
                      << ", " << fam.default_ranges[i].hi << "]\n";
    } catch (const trw::SyntaxError& e) {
        ordered_json fail;
        fail["type"] = "syntax_error";
        fail["line"] = e.line;
        fail["column"] = e.column;
        fail["expected"] = e.expected;
        fail["found"] = e.found;
        fail["message"] = e.what();
        cert.failures.push_back(std::move(fail));
        std::cout << e.what() << "\n";
    } catch (const trw::HypothesisViolation& e) {
        ordered_json fail;
        fail["type"] = "hypothesis_violation";
        fail["hypothesis"] = e.hypothesis;
        fail["detail"] = e.detail;
        fail["message"] = e.what();
        cert.failures.push_back(std::move(fail));
        std::cout << e.what() << "\n";
    } catch (const trw::Error& e) {
        ordered_json fail;
        fail["type"] = "invalid_family";
        fail["message"] = e.what();
        cert.failures.push_back(std::move(fail));
        std::cout << e.what() << "\n";
    }
    return cert.finish();
}

void add_json_flag(CLI::App* sub, std::string& path) {
    sub->add_option("--json", path, "write a JSON certificate to this path");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"root-power toolkit: power sums, root-power transforms, witness polynomials,\n"
                 "Sturm real-root checks, and four-squares/Kamke searches, all in exact\n"
                 "arbitrary-precision arithmetic"};
    app.set_version_flag("--version", trw::version);
    app.require_subcommand(1);

    int rc = 0;

    {
        auto o = std::make_shared<ListOpts>();
        auto* sub = app.add_subcommand("list-families", "list the built-in parametrized families");
        add_json_flag(sub, o->json_path);
        sub->callback([&rc, o] { rc = run_list_families(*o); });
    }
    {
        auto o = std::make_shared<VerifyOpts>();
        auto* sub = app.add_subcommand(
            "verify", "check totally-real + unit hypotheses over a parameter box");
        sub->add_option("--family", o->family, "family name or unique prefix")->required();
        sub->add_option("--range", o->ranges,
                        "parameter range as name=lo..hi (default: family range)");
        sub->add_option("--jobs", o->jobs, "worker threads")
            ->envname("TRW_JOBS")
            ->check(CLI::PositiveNumber);
        add_json_flag(sub, o->json_path);
        sub->callback([&rc, o] { rc = run_verify(*o); });
    }
    {
        auto o = std::make_shared<WitnessOpts>();
        auto* sub = app.add_subcommand(
            "witness", "build the nonconstant power-sum witness polynomial for a family");
        sub->add_option("--family", o->family, "family name or unique prefix")->required();
        sub->add_option("--torsion-half-order,-N", o->n, "torsion half-order N >= 1")
            ->required()
            ->check(CLI::PositiveNumber);
        add_json_flag(sub, o->json_path);
        sub->callback([&rc, o] { rc = run_witness(*o); });
    }
    {
        auto o = std::make_shared<PowersumOpts>();
        auto* sub = app.add_subcommand("powersum", "power sums q_1..q_M of the roots");
        sub->add_option("--poly", o->poly, "monic integer polynomial in x")->required();
        sub->add_option("--m-max", o->m_max, "number of power sums M >= 1")
            ->required()
            ->check(CLI::PositiveNumber);
        add_json_flag(sub, o->json_path);
        sub->callback([&rc, o] { rc = run_powersum(*o); });
    }
    {
        auto o = std::make_shared<RootpowerOpts>();
        auto* sub = app.add_subcommand(
            "rootpower", "polynomial whose roots are the N-th powers of the input's roots");
        sub->add_option("--poly", o->poly, "monic integer polynomial in x")->required();
        sub->add_option("--power,-N", o->power, "power N >= 1")
            ->required()
            ->check(CLI::PositiveNumber);
        add_json_flag(sub, o->json_path);
        sub->callback([&rc, o] { rc = run_rootpower(*o); });
    }
    {
        auto o = std::make_shared<SturmOpts>();
        auto* sub = app.add_subcommand("sturm", "Sturm chain and real-root count");
        sub->add_option("--poly", o->poly, "integer polynomial in x")->required();
        add_json_flag(sub, o->json_path);
        sub->callback([&rc, o] { rc = run_sturm(*o); });
    }
    {
        auto o = std::make_shared<CountRootsOpts>();
        auto* sub = app.add_subcommand(
            "count-roots", "count distinct real roots, optionally in an open interval");
        sub->add_option("--poly", o->poly, "integer polynomial in x")->required();
        auto* lo = sub->add_option("--lo", o->lo, "interval lower endpoint (rational p/q)");
        auto* hi = sub->add_option("--hi", o->hi, "interval upper endpoint (rational p/q)");
        lo->needs(hi);
        hi->needs(lo);
        add_json_flag(sub, o->json_path);
        sub->callback([&rc, o] { rc = run_count_roots(*o); });
    }
    {
        auto o = std::make_shared<PolyOnlyOpts>();
        auto* sub = app.add_subcommand("discriminant", "discriminant of a monic polynomial");
        sub->add_option("--poly", o->poly, "monic integer polynomial in x")->required();
        add_json_flag(sub, o->json_path);
        sub->callback([&rc, o] { rc = run_discriminant(*o); });
    }
    {
        auto o = std::make_shared<PolyOnlyOpts>();
        auto* sub = app.add_subcommand(
            "cyclic-cubic", "check a monic cubic for positive square discriminant");
        sub->add_option("--poly", o->poly, "monic cubic in x")->required();
        add_json_flag(sub, o->json_path);
        sub->callback([&rc, o] { rc = run_cyclic_cubic(*o); });
    }
    {
        auto o = std::make_shared<GenQuarticOpts>();
        auto* sub = app.add_subcommand(
            "gen-quartic2", "expand (x^2-2(a+b*sqrt(d))x-1)(x^2-2(a-b*sqrt(d))x-1)");
        sub->add_option("--a", o->a, "rational part a")->required();
        sub->add_option("--b", o->b, "irrational part b")->required();
        sub->add_option("--d", o->d, "positive squarefree d")->required();
        add_json_flag(sub, o->json_path);
        sub->callback([&rc, o] { rc = run_gen_quartic2(*o); });
    }
    {
        auto o = std::make_shared<GenUnitOpts>();
        auto* sub = app.add_subcommand(
            "gen-unit-family",
            "one-parameter unit family from h and the minimal polynomial of alpha");
        // --h needs the short name "h", so this subcommand keeps only --help.
        sub->set_help_flag("--help", "print this help message and exit");
        sub->add_option("--h", o->h, "polynomial in the two --params names")->required();
        sub->add_option("--alpha", o->alpha,
                        "monic, totally real minimal polynomial of alpha, written in x")
            ->required();
        sub->add_option("--params", o->params,
                        "family parameter and alpha placeholder names (default t1,t2)");
        add_json_flag(sub, o->json_path);
        sub->callback([&rc, o] { rc = run_gen_unit_family(*o); });
    }
    {
        auto o = std::make_shared<FourSquaresOpts>();
        auto* sub = app.add_subcommand("foursquares",
                                       "write m >= 0 as a sum of four integer squares");
        sub->add_option("--m", o->m, "the integer to decompose")->required();
        add_json_flag(sub, o->json_path);
        sub->callback([&rc, o] { rc = run_foursquares(*o); });
    }
    {
        auto o = std::make_shared<KamkeOpts>();
        auto* sub = app.add_subcommand(
            "kamke", "represent m as f(a_1)+...+f(a_s)+s2 with s+s2 <= r, a_i >= 1");
        sub->add_option("--poly", o->poly, "integer polynomial in x, eventually nonnegative")
            ->required();
        sub->add_option("--m", o->m, "the integer to represent")->required();
        sub->add_option("--r", o->r, "budget r >= 1")->required()->check(CLI::PositiveNumber);
        add_json_flag(sub, o->json_path);
        sub->callback([&rc, o] { rc = run_kamke(*o); });
    }
    {
        auto o = std::make_shared<KamkeScanOpts>();
        auto* sub = app.add_subcommand("kamke-scan",
                                       "minimal representation budgets for every m <= m-max");
        sub->add_option("--poly", o->poly, "integer polynomial in x, eventually nonnegative")
            ->required();
        sub->add_option("--m-max", o->m_max, "scan 1..m_max")
            ->required()
            ->check(CLI::PositiveNumber);
        sub->add_option("--r-max", o->r_max, "largest budget to try")
            ->required()
            ->check(CLI::PositiveNumber);
        sub->add_option("--jobs", o->jobs, "worker threads")
            ->envname("TRW_JOBS")
            ->check(CLI::PositiveNumber);
        add_json_flag(sub, o->json_path);
        sub->callback([&rc, o] { rc = run_kamke_scan(*o); });
    }
    {
        auto o = std::make_shared<PhiwOpts>();
        auto* sub = app.add_subcommand(
            "phiw", "the set {x : ax != 0, ax != b, ax and b-ax are four-square sums}");
        sub->add_option("--a", o->a, "positive integer a")->required();
        sub->add_option("--b", o->b, "positive integer b")->required();
        sub->add_option("--x-max", o->x_max, "window half-width (default 100)")
            ->check(CLI::PositiveNumber);
        add_json_flag(sub, o->json_path);
        sub->callback([&rc, o] { rc = run_phiw(*o); });
    }
    {
        auto o = std::make_shared<ParseOpts>();
        auto* sub = app.add_subcommand("parse", "validate a family definition file");
        sub->add_option("file", o->file, "family definition file")
            ->required()
            ->check(CLI::ExistingFile);
        add_json_flag(sub, o->json_path);
        sub->callback([&rc, o] { rc = run_parse(*o); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const trw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
