// Acceptance suite: one PASS/FAIL line per criterion, exit 0 only if all pass.
// Run as: trw_acceptance --cli <path-to-trw-binary> --golden <golden-dir>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <trw/families.hpp>
#include <trw/family_dsl.hpp>
#include <trw/realroots.hpp>
#include <trw/symfun.hpp>
#include <trw/waring.hpp>

#include "util.hpp"

namespace {

// Pinned tolerances.
constexpr double kRelTol = 1e-6;           // numeric-vs-exact comparisons
constexpr double kApproxTol = 1e-12;       // root refinement target
constexpr double kVerifyBudgetSecs = 60.0; // criterion 1 wall-clock budget
constexpr double kSquaresBudgetSecs = 30.0;// criterion 8 wall-clock budget

using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool g_all_ok = true;

void report(int id, bool ok, const std::string& label) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << id << ": " << label << std::endl;
    if (!ok) g_all_ok = false;
}

void criterion(int id, const std::function<std::pair<bool, std::string>()>& body) {
    bool ok = false;
    std::string label;
    try {
        auto res = body();
        ok = res.first;
        label = res.second;
    } catch (const std::exception& e) {
        ok = false;
        label = std::string("unexpected exception: ") + e.what();
    }
    report(id, ok, label);
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli, golden;
    for (int i = 1; i + 1 < argc; ++i) {
        std::string a = argv[i];
        if (a == "--cli") cli = argv[++i];
        else if (a == "--golden") golden = argv[++i];
    }

    // 1. Every built-in family verifies cleanly over its default box, fast.
    criterion(1, [] {
        auto t0 = Clock::now();
        std::uint64_t total = 0;
        bool clean = true;
        for (const auto& fam : trw::registry()) {
            auto rep = trw::verify_range(fam, {}, 4);
            total += rep.instances;
            clean = clean && rep.failures.empty();
        }
        double s = secs_since(t0);
        std::ostringstream msg;
        msg << "built-in families verify with zero failures over default ranges (" << total
            << " instances in " << s << "s, budget " << kVerifyBudgetSecs << "s)";
        return std::make_pair(clean && s < kVerifyBudgetSecs, msg.str());
    });

    // 2. Power sums agree across three independent oracles.
    criterion(2, [] {
        testutil::Rng rng(9001);
        int checked = 0;
        for (int iter = 0; iter < 200; ++iter) {
            trw::IntPoly f = testutil::random_monic_squarefree(
                rng, static_cast<int>(rng.uniform(1, 6)), -10, 10);
            auto ps = trw::power_sums_from_coeffs(f, 12);
            auto ar = trw::approx_roots(f, kApproxTol);
            if (ar.roots.size() != static_cast<std::size_t>(f.degree()))
                return std::make_pair(false, std::string("numeric oracle lost a root"));
            for (unsigned m = 1; m <= 12; ++m) {
                if (ps.values[m - 1] != trw::trace_power(f, m))
                    return std::make_pair(false,
                                          std::string("recurrence disagrees with matrix trace"));
                std::complex<double> sum = 0.0;
                double scale = 1.0;
                for (const auto& z : ar.roots) {
                    sum += std::pow(z, static_cast<int>(m));
                    scale += std::pow(std::abs(z), static_cast<int>(m));
                }
                double exact = ps.values[m - 1].get_d();
                if (std::abs(sum.real() - exact) > kRelTol * scale ||
                    std::abs(sum.imag()) > kRelTol * scale)
                    return std::make_pair(false, std::string("numeric root-power sum outside "
                                                             "relative tolerance"));
                ++checked;
            }
        }
        std::ostringstream msg;
        msg << "power sums match companion-matrix traces exactly and numeric root sums within "
            << kRelTol << " relative (200 random polynomials, " << checked << " comparisons)";
        return std::make_pair(true, msg.str());
    });

    // 3. Newton roundtrip: coefficients -> power sums -> coefficients.
    criterion(3, [] {
        testutil::Rng rng(9002);
        for (int iter = 0; iter < 200; ++iter) {
            int n = static_cast<int>(rng.uniform(1, 8));
            trw::IntPoly f = testutil::random_monic(rng, n, -10, 10);
            auto ps = trw::power_sums_from_coeffs(f, static_cast<unsigned>(n));
            auto e = trw::elem_from_power_sums(ps, static_cast<unsigned>(n));
            for (int k = 1; k <= n; ++k) {
                mpz_class expect = e.values[static_cast<std::size_t>(k) - 1];
                if (k % 2 != 0) expect = -expect;
                if (f.coeff(static_cast<std::size_t>(n - k)) != expect)
                    return std::make_pair(false, std::string("roundtrip mismatch"));
            }
        }
        return std::make_pair(true, std::string("power-sum/elementary-symmetric roundtrip is "
                                                "exact on 200 random polynomials of degree <= 8"));
    });

    // 4. Root-power transform laws.
    criterion(4, [] {
        testutil::Rng rng(9003);
        for (int iter = 0; iter < 100; ++iter) {
            trw::IntPoly f = testutil::random_monic(rng, static_cast<int>(rng.uniform(1, 6)),
                                                    -10, 10);
            if (!(trw::root_power_transform(f, 1) == f))
                return std::make_pair(false, std::string("transform at N=1 is not the identity"));
            for (unsigned N = 2; N <= 4; ++N) {
                trw::IntPoly g = trw::root_power_transform(f, N);
                if (g.degree() != f.degree())
                    return std::make_pair(false, std::string("transform changed the degree"));
                auto qhat = trw::power_sums_from_coeffs(g, 8);
                auto q = trw::power_sums_from_coeffs(f, 8 * N);
                for (unsigned k = 1; k <= 8; ++k)
                    if (qhat.values[k - 1] != q.values[k * N - 1])
                        return std::make_pair(false,
                                              std::string("transform trace identity failed"));
            }
            if (!(trw::root_power_transform(trw::root_power_transform(f, 2), 2) ==
                  trw::root_power_transform(f, 4)))
                return std::make_pair(false, std::string("transform composition failed"));
        }
        return std::make_pair(true, std::string("root-power transform satisfies identity, "
                                                "composition, and the power-sum law for k <= 8, "
                                                "N <= 4 on 100 random polynomials"));
    });

    // 5. Witness construction on every built-in family.
    criterion(5, [] {
        for (const auto& fam : trw::registry()) {
            for (unsigned N = 1; N <= 3; ++N) {
                auto rep = trw::build_witness(fam, N);
                if (rep.k != 1 || rep.exponent != 2 * N || !rep.nonconstant)
                    return std::make_pair(false, "unexpected witness shape for " + fam.name);
                for (long v : {-5L, -1L, 0L, 2L, 9L}) {
                    std::map<std::string, mpz_class> asg{{fam.params[0], mpz_class(v)}};
                    if (rep.witness.instantiate(asg) !=
                        trw::trace_power(fam.poly.instantiate(asg), rep.exponent))
                        return std::make_pair(false, "witness disagrees with trace for " +
                                                         fam.name);
                }
            }
        }
        auto mruv = trw::build_witness(trw::registry()[0], 1);
        if (mruv.witness.to_string() != "4*a^2 + 2")
            return std::make_pair(false, std::string("quadratic family witness is not 4*a^2 + 2"));
        return std::make_pair(true, std::string("every built-in family has a nonconstant degree-1 "
                                                "witness at half-orders 1..3 matching the "
                                                "companion-matrix trace"));
    });

    // 6. Discriminant identity and cyclicity for the simplest cubic family.
    criterion(6, [] {
        const trw::ParamFamily* shanks = nullptr;
        for (const auto& fam : trw::registry())
            if (fam.name == "shanks_cubic") shanks = &fam;
        if (!shanks) return std::make_pair(false, std::string("shanks_cubic not registered"));
        for (long a = -1; a <= 50; ++a) {
            mpz_class A(a);
            trw::IntPoly f = shanks->poly.instantiate({{"a", A}});
            mpz_class expect = A * A + 3 * A + 9;
            if (trw::discriminant(f) != expect * expect)
                return std::make_pair(false, std::string("discriminant identity failed at a = ") +
                                                 std::to_string(a));
            if (!trw::cyclic_cubic_check(f))
                return std::make_pair(false, std::string("cyclicity check failed at a = ") +
                                                 std::to_string(a));
        }
        if (trw::cyclic_cubic_check(trw::IntPoly{-1, -1, 0, 1}) ||
            trw::cyclic_cubic_check(trw::IntPoly{-1, -4, 0, 1}))
            return std::make_pair(false, std::string("non-cyclic cubic accepted"));
        return std::make_pair(true, std::string("disc(x^3 - a*x^2 - (a+3)*x - 1) = (a^2+3a+9)^2 "
                                                "and the cyclicity test holds for a in [-1, 50]"));
    });

    // 7. Quartic generator vs independent expansion; generated unit family
    //    reproduces the built-in quadratic one.
    criterion(7, [] {
        for (long a = 0; a <= 10; ++a)
            for (long b = 0; b <= 10; ++b)
                for (long d : {2L, 3L, 5L}) {
                    mpz_class A(a), B(b), D(d);
                    trw::IntPoly expect(std::vector<mpz_class>{
                        1, 4 * A, 4 * (A * A - B * B * D) - 2, -4 * A, 1});
                    if (!(trw::gen_quartic_2param(A, B, D) == expect))
                        return std::make_pair(false, std::string("quartic generator mismatch"));
                }
        std::vector<std::string> hp{"t1", "t2"};
        auto fam = trw::gen_unit_family(trw::MultiParamPoly::param(hp, "t1"),
                                        trw::IntPoly{-1, 1});
        const auto& mruv = trw::registry()[0];
        for (long v = -10; v <= 10; ++v)
            if (!(fam.poly.instantiate({{"t1", mpz_class(v)}}) ==
                  mruv.poly.instantiate({{"a", mpz_class(v)}})))
                return std::make_pair(false, std::string("generated quadratic family differs "
                                                         "from the built-in one"));
        return std::make_pair(true, std::string("quartic generator matches its closed form on "
                                                "363 inputs; generated unit family over x - 1 "
                                                "reproduces the quadratic family"));
    });

    // 8. Four-squares sweep and representation searches.
    criterion(8, [] {
        auto t0 = Clock::now();
        for (long m = 0; m <= 100000; ++m) {
            auto fs = trw::four_squares(m);
            mpz_class sum = 0;
            for (const auto& p : fs.parts) sum += p * p;
            if (sum != m || fs.parts[0] < fs.parts[1] || fs.parts[1] < fs.parts[2] ||
                fs.parts[2] < fs.parts[3] || fs.parts[3] < 0)
                return std::make_pair(false, std::string("invalid four-square decomposition"));
        }
        double s = secs_since(t0);
        if (s >= kSquaresBudgetSecs)
            return std::make_pair(false, std::string("four-square sweep too slow"));

        auto squares = trw::kamke_scan(trw::IntPoly{0, 0, 1}, 100, 6);
        if (!squares.gaps.empty() || squares.overall_max != 4)
            return std::make_pair(false, std::string("square scan disagrees with Lagrange"));
        auto cubes = trw::kamke_scan(trw::IntPoly{0, 0, 0, 1}, 300, 9);
        if (!cubes.gaps.empty() || cubes.overall_max != 9 || cubes.attained_at != 23)
            return std::make_pair(false, std::string("cube scan disagrees with Wieferich"));
        if (trw::kamke_represent(trw::IntPoly{0, 0, 0, 1}, 5, 3).has_value())
            return std::make_pair(false, std::string("phantom cube representation"));
        std::ostringstream msg;
        msg << "four-square decompositions validate for all m <= 100000 (" << s
            << "s, budget " << kSquaresBudgetSecs << "s); square/cube budget scans match the "
            << "classical bounds";
        return std::make_pair(true, msg.str());
    });

    // 9. phi_w sets equal the open interval 0 < ax < b.
    criterion(9, [] {
        for (long a = 1; a <= 30; ++a)
            for (long b = 1; b <= 30; ++b) {
                auto rep = trw::phi_w_set(a, b, 100);
                std::vector<mpz_class> expect;
                for (long x = -100; x <= 100; ++x)
                    if (0 < a * x && a * x < b) expect.emplace_back(x);
                if (rep.members != expect || !rep.chain_equal)
                    return std::make_pair(false, "phi_w mismatch at a = " + std::to_string(a) +
                                                     ", b = " + std::to_string(b));
            }
        return std::make_pair(true, std::string("phi_w sets equal {x : 0 < ax < b} with the "
                                                "containment chain collapsed, for all "
                                                "1 <= a, b <= 30"));
    });

    // 10. Certificate JSON is byte-identical to the golden files, including
    //     across a different thread count.
    criterion(10, [&] {
        if (cli.empty() || golden.empty())
            return std::make_pair(false, std::string("--cli and --golden are required"));
        namespace fs = std::filesystem;
        fs::path tmp = fs::temp_directory_path();
        fs::path v1 = tmp / "trw_acc_verify1.json";
        fs::path v2 = tmp / "trw_acc_verify2.json";
        fs::path w1 = tmp / "trw_acc_witness.json";
        fs::path p1 = tmp / "trw_acc_phiw.json";
        auto run = [&](const std::string& args) {
            std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
            return std::system(cmd.c_str()) == 0;
        };
        if (!run("verify --family shanks_cubic --json " + v1.string()) ||
            !run("verify --family shanks_cubic --jobs 3 --json " + v2.string()) ||
            !run("witness --family mruv_quadratic --torsion-half-order 1 --json " + w1.string()) ||
            !run("phiw --a 1 --b 5 --json " + p1.string()))
            return std::make_pair(false, std::string("a CLI invocation exited nonzero"));
        struct Pair {
            fs::path got;
            const char* want;
        };
        const Pair pairs[] = {{v1, "verify_shanks.json"},
                              {v2, "verify_shanks.json"},
                              {w1, "witness_mruv.json"},
                              {p1, "phiw_1_5.json"}};
        for (const auto& pr : pairs) {
            std::string got = read_file(pr.got);
            std::string want = read_file(fs::path(golden) / pr.want);
            if (got != want)
                return std::make_pair(false, std::string("certificate differs from golden ") +
                                                 pr.want);
        }
        for (const auto& p : {v1, v2, w1, p1}) {
            std::error_code ec;
            fs::remove(p, ec);
        }
        return std::make_pair(true, std::string("certificates are byte-identical to the golden "
                                                "files, including across --jobs 3"));
    });

    return g_all_ok ? 0 : 1;
}
