// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "alextor/complexes.hpp"
#include "alextor/corpus.hpp"
#include "alextor/io.hpp"
#include "alextor/knots.hpp"
#include "alextor/ruelle.hpp"
#include "alextor/verify.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace alextor;

namespace {

using Clock = std::chrono::steady_clock;

const std::string data_dir = ALEXTOR_DATA_DIR;

struct Line {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void report(int n, const std::string& title, Line& line)
{
    std::cout << (line.ok ? "PASS" : "FAIL") << "  " << n << ". " << title << ":" << line.detail.str() << "\n";
    if (!line.ok) ++failures;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct SuiteRun {
    std::map<std::string, PropertyResult> props;
    double seconds = 0;
};

SuiteRun run_suite(const std::string& suite)
{
    VerifyOptions opt;
    opt.suite = suite;
    auto t0 = Clock::now();
    VerificationRun run = verify_suite(opt);
    SuiteRun out;
    out.seconds = seconds_since(t0);
    for (auto& p : run.properties) out.props[p.name] = p;
    return out;
}

// Every item passed, none failed, at least min_passed checked.
void require_property(Line& line, const SuiteRun& s, const std::string& name, std::size_t min_passed)
{
    auto it = s.props.find(name);
    if (it == s.props.end()) {
        line.require(false, name + " missing");
        return;
    }
    const auto& p = it->second;
    line.detail << " " << name << " " << p.passed << "/" << p.passed + p.failed;
    if (p.skipped) line.detail << " (" << p.skipped << " skipped)";
    line.require(p.failed == 0, name + ": " + (p.failures.empty() ? "" : p.failures.front()));
    line.require(p.passed >= min_passed, name + " checked too few items");
}

struct DataCase {
    std::string knot, rep;
};

const std::vector<DataCase> data_cases = {
    {"unknot", "trivial"},
    {"trefoil", "trivial"},
    {"trefoil", "trivial2"},
    {"trefoil", "trefoil_s3"},
    {"trefoil", "trefoil_s3_twisted"},
    {"trefoil_wirtinger3", "trivial"},
    {"trefoil_wirtinger3", "trefoil3_s3"},
    {"figure_eight", "trivial"},
    {"figure_eight", "figure_eight_d5"},
    {"cinquefoil", "trivial"},
    {"cinquefoil", "cinquefoil_d5"},
    {"three_twist", "trivial"},
    {"three_twist", "three_twist_d7"},
};

struct Loaded {
    Presentation p;
    Representation rho;
    Augmentation eps;
};

Loaded load_case(const DataCase& c)
{
    Presentation p = load_presentation(data_dir + "/knots/" + c.knot + ".toml");
    Representation rho = load_representation(data_dir + "/reps/" + c.rep + ".toml", p);
    return {p, rho, augmentation_for(p)};
}

LaurentPoly poly(std::vector<long> coeffs)
{
    std::vector<CycloNumber> c(coeffs.begin(), coeffs.end());
    return LaurentPoly::from_coeffs(0, c);
}

std::string run_cli(const std::string& args, int& status)
{
    std::string cmd = std::string("\"") + ALEXTOR_CLI + "\" " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return {};
    }
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    status = pclose(pipe);
    return out;
}

} // namespace

int main()
{
    SuiteRun complexes = run_suite("complexes");
    SuiteRun monodromy = run_suite("monodromy");
    SuiteRun knots = run_suite("knots");
    SuiteRun fox = run_suite("fox");
    const VerifyOptions defaults;

    {
        Line l;
        require_property(l, complexes, "complexes.torsion_homology", 100);
        require_property(l, complexes, "complexes.ideal_equality", 100);
        require_property(l, complexes, "complexes.certificate_replay", 100);
        l.detail << " time " << complexes.seconds << " s";
        l.require(complexes.seconds < 60, "suite slower than 60 s");
        report(1, "torsion over Alexander invariant is a unit", l);
    }
    {
        Line l;
        require_property(l, complexes, "complexes.order_equality", 100);
        require_property(l, complexes, "complexes.unit_order_invariance", 100);
        require_property(l, complexes, "complexes.leading_limit", 100);
        require_property(l, complexes, "complexes.specialization", 1);
        l.require(complexes.props["complexes.specialization"].skipped > 0, "no (t - 1)-torsion case reached the skip path");
        report(2, "order at t = 1 and specialization", l);
    }
    {
        Line l;
        require_property(l, complexes, "complexes.duality_plain", 100);
        require_property(l, complexes, "complexes.duality_unitary", 100);
        require_property(l, complexes, "complexes.dual_involution", 100);
        report(3, "Alexander invariants of a complex and its dual multiply to 1", l);
    }
    {
        Line l;
        const LaurentPoly tm1 = t_minus_one();
        const std::vector<std::pair<std::string, RatFunc>> golden = {
            {"unknot", RatFunc(LaurentPoly(1L), tm1)},
            {"trefoil", RatFunc(poly({1, -1, 1}), tm1)},
            {"figure_eight", RatFunc(poly({1, -3, 1}), tm1)},
            {"cinquefoil", RatFunc(poly({1, -1, 1, -1, 1}), tm1)},
            {"three_twist", RatFunc(poly({2, -3, 2}), tm1)},
        };
        for (const auto& [knot, expected] : golden) {
            Loaded c = load_case({knot, "trivial"});
            KitanoResult r = twisted_alexander(c.p, c.rho, c.eps, 0);
            bool eq = r.normalized.canonical == unit_normalize(expected).canonical;
            l.detail << " " << knot << " " << r.normalized.canonical.to_string();
            l.require(eq, knot + " differs from " + expected.to_string());
        }
        l.require(std::filesystem::exists(std::filesystem::path(ALEXTOR_SOURCE_DIR) / "tests/oracles/fox_oracle.py"),
                  "symbolic oracle script missing");
        report(4, "golden twisted Alexander polynomials", l);
    }
    {
        Line l;
        require_property(l, knots, "knots.kitano_column_independence", defaults.knots);
        std::size_t n = 0;
        for (const auto& dc : data_cases) {
            Loaded c = load_case(dc);
            ColumnCheck cc = column_independence_check(c.p, c.rho, c.eps);
            l.require(cc.all_equal, dc.knot + "/" + dc.rep);
            ++n;
        }
        l.detail << " data pairs " << n;
        report(5, "Kitano determinant is independent of the deleted column", l);
    }
    {
        Line l;
        require_property(l, knots, "knots.dual_torsion_inverse", defaults.knots);
        for (const auto& dc : data_cases) {
            Loaded c = load_case(dc);
            l.require(theorem41_check(c.p, c.rho, c.eps).verdict == Verdict::holds, dc.knot + "/" + dc.rep);
        }
        l.detail << " data pairs " << data_cases.size();
        report(6, "dual twisted torsion is 1 / Delta", l);
    }
    {
        Line l;
        require_property(l, monodromy, "monodromy_semisimple.order_equals_minus_beta", defaults.monodromies);
        require_property(l, monodromy, "monodromy_semisimple.torsion_limit", defaults.monodromies);
        require_property(l, monodromy, "monodromy_jordan.strict_inequality", defaults.jordans);
        report(7, "mapping torus order dichotomy and limit formula", l);
    }
    {
        Line l;
        for (long beta = 0; beta <= 12; ++beta) l.require(predict_order(0, beta) == -2 * beta, "predict_order(0, beta)");
        require_property(l, monodromy, "monodromy_semisimple.ruelle_order", defaults.monodromies);
        require_property(l, monodromy, "monodromy_semisimple.ruelle_leading", defaults.monodromies);
        require_property(l, monodromy, "monodromy_jordan.ruelle_order_bound", defaults.jordans);
        require_property(l, knots, "knots.ruelle_two_routes", 1);
        report(8, "Ruelle order and leading constant predictions agree", l);
    }
    {
        Line l;
        require_property(l, fox, "fox.fundamental_identity", defaults.words);
        require_property(l, fox, "fox.fundamental_identity_phi", defaults.words);
        require_property(l, knots, "knots.boundary_composition", defaults.knots);
        for (const auto& dc : data_cases) {
            Loaded c = load_case(dc);
            TwistedComplex tc = build_twisted_complex(c.p, c.rho, c.eps);
            l.require((tc.complex.boundary(1) * tc.complex.boundary(2)).is_zero(), dc.knot + "/" + dc.rep + " d1 d2");
        }
        report(9, "Fox fundamental identity and d1 d2 = 0", l);
    }
    {
        Line l;
        int s1 = 0, s2 = 0;
        auto t0 = Clock::now();
        std::string a = run_cli("--json verify --seed 42", s1);
        double first = seconds_since(t0);
        t0 = Clock::now();
        std::string b = run_cli("--json verify --seed 42", s2);
        double second = seconds_since(t0);
        l.detail << " runs " << first << " s and " << second << " s, " << a.size() << " bytes";
        l.require(s1 == 0 && s2 == 0, "verify exited nonzero");
        l.require(!a.empty() && a == b, "outputs differ");
        l.require(first < 300 && second < 300, "slower than 5 minutes");
        report(10, "verify --seed 42 is deterministic and fast", l);
    }

    std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria pass") << "\n";
    return failures ? 1 : 0;
}
