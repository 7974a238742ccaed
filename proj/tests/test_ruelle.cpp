#include "alextor/errors.hpp"
#include "alextor/mapping_torus.hpp"
#include "alextor/ruelle.hpp"

#include <doctest.h>

#include <cmath>

using namespace alextor;

namespace {

const std::string kData = ALEXTOR_DATA_DIR;

Real num(double v) { return Real(v, 128); }

Complex cnum(double re, double im) { return Complex(num(re), num(im)); }

} // namespace

TEST_CASE("predicted order")
{
    for (long b = 0; b < 10; ++b) CHECK(predict_order(0, b) == -2 * b);
    CHECK(predict_order(0, 0) == 0);
    CHECK(predict_order(1, 3) == -2);
    CHECK_THROWS_AS(predict_order(-1, 0), InputError);
}

TEST_CASE("predicted leading constants")
{
    CHECK(predict_leading_from_torsion(num(1)).to_double() == doctest::Approx(1.0));
    CHECK(predict_leading_from_torsion(num(0.25)).to_double() == doctest::Approx(1.0 / 16));
    CHECK_THROWS_AS(predict_leading_from_torsion(num(0)), InputError);
    CHECK(predict_R0_from_alexander(num(1), num(1)).to_double() == doctest::Approx(1.0));
    Real third = Real(1L, 128) / Real(3L, 128);
    CHECK(predict_R0_from_alexander(num(2), third).to_double() == doctest::Approx(4.0 / 9));
}

TEST_CASE("mapping torus consistency")
{
    CycloMatrix f(2, 2);
    f(0, 0) = CycloNumber(-1L);
    f(1, 1) = CycloNumber(-1L);
    auto t = torsion_from_monodromy(f);
    Real lead = predict_leading_from_torsion(*t.abs_torsion);
    CHECK(lead.to_double() == doctest::Approx(1.0 / 16));
    auto r = theorem35_report(f, true);
    Real alex = *r.limit * *r.limit;
    CHECK(relative_difference(lead, alex).to_double() < 1e-18);
}

TEST_CASE("truncated product")
{
    auto single = load_spectrum(kData + "/spectra/single.csv");
    auto v = evaluate_truncated(single, cnum(1, 0), num(10));
    CHECK(v.terms_used == 1);
    CHECK(v.value.re.to_double() == doctest::Approx(1 - std::exp(-1.0)).epsilon(1e-14));
    CHECK(v.value.im.to_double() == doctest::Approx(0.0));

    auto two = load_spectrum(kData + "/spectra/two_entries.csv");
    auto w = evaluate_truncated(two, cnum(2, 0), num(10));
    CHECK(w.terms_used == 2);
    double expected = (1 + std::exp(-2.0)) * (1 - std::exp(-4.0));
    CHECK(w.value.re.to_double() == doctest::Approx(expected).epsilon(1e-14));
    CHECK(evaluate_truncated(two, cnum(2, 0), num(1.5)).terms_used == 1);
    CHECK_THROWS_AS(evaluate_truncated(two, cnum(2, 0), num(0.5)), InputError);

    auto z4 = load_spectrum(kData + "/spectra/rank2_z4.csv");
    CHECK(z4.dimension == 2);
    CHECK(z4.entries.size() == 4);
    auto u = evaluate_truncated(z4, cnum(3, 0.5), num(5));
    CHECK(u.terms_used == 4);
    CHECK(u.last_factor_deviation.to_double() < 0.01);
}

TEST_CASE("spectrum format errors")
{
    CHECK_THROWS_AS(parse_spectrum_csv("2,1,charpoly:t-1\n1,1,charpoly:t-1\n", "s"), InputError);
    CHECK_THROWS_AS(parse_spectrum_csv("-1,1,charpoly:t-1\n", "s"), InputError);
    CHECK_THROWS_AS(parse_spectrum_csv("1,0,charpoly:t-1\n", "s"), InputError);
    CHECK_THROWS_AS(parse_spectrum_csv("1,1,t-1\n", "s"), InputError);
    CHECK_THROWS_AS(parse_spectrum_csv("1,1,\"matrix:2\"\n", "s"), InputError);
    CHECK_THROWS_AS(parse_spectrum_csv("1,1,charpoly:t-1\n2,1,charpoly:t^2-1\n", "s"), InputError);
    try {
        parse_spectrum_csv("length,multiplicity,holonomy\n1,1,charpoly:t-1\nx,1,charpoly:t-1\n", "lengths.csv");
        FAIL("expected an error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("lengths.csv:3") != std::string::npos);
    }
}
