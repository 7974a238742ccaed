#include "alextor/corpus.hpp"
#include "alextor/errors.hpp"
#include "alextor/io.hpp"
#include "alextor/mapping_torus.hpp"
#include "alextor/parse.hpp"

#include <doctest.h>

using namespace alextor;

namespace {

const std::string kData = ALEXTOR_DATA_DIR;

CycloMatrix M(std::size_t n, std::vector<long> v)
{
    std::vector<CycloNumber> c(v.begin(), v.end());
    return CycloMatrix(n, n, c);
}

RatFunc R(const char* s) { return parse_ratfunc(s, 1); }

double abs_torsion(const CycloMatrix& f) { return torsion_from_monodromy(f).abs_torsion->to_double(); }

} // namespace

TEST_CASE("quotient I")
{
    auto id = quotient_I(CycloMatrix::identity(3));
    CHECK(id.beta == 3);
    CHECK(id.i_dim == 0);
    auto d2 = quotient_I(M(1, {2}));
    CHECK(d2.beta == 0);
    CHECK(d2.i_dim == 1);
    auto j = quotient_I(M(2, {1, 1, 0, 1}));
    CHECK(j.beta == 1);
    CHECK(j.i_dim == 1);
    CHECK(j.induced == CycloMatrix::identity(1));
    CHECK_THROWS_AS(quotient_I(M(2, {1, 0, 0, 0})), InputError);
}

TEST_CASE("torsion from monodromy")
{
    CHECK(abs_torsion(CycloMatrix::identity(2)) == doctest::Approx(1.0));
    CHECK(abs_torsion(M(1, {2})) == doctest::Approx(1.0));
    CHECK(abs_torsion(M(2, {-1, 0, 0, -1})) == doctest::Approx(0.25));
    auto j = torsion_from_monodromy(M(2, {1, 1, 0, 1}));
    CHECK_FALSE(j.abs_torsion);
    CHECK_FALSE(j.within_hypothesis);
    // Not semisimple away from 1: value returned but flagged.
    auto k = torsion_from_monodromy(M(2, {2, 1, 0, 2}));
    REQUIRE(k.abs_torsion);
    CHECK(k.abs_torsion->to_double() == doctest::Approx(1.0));
    CHECK_FALSE(k.within_hypothesis);
}

TEST_CASE("alexander from monodromy")
{
    CHECK(alexander_from_monodromy(CycloMatrix::identity(1)) == R("1/(t - 1)"));
    CHECK(alexander_from_monodromy(M(1, {2})) == R("1/(t - 2)"));
    CHECK(alexander_from_monodromy(M(2, {1, 1, 0, 1})) == R("1/(t - 1)^2"));
}

TEST_CASE("order and limit report for monodromies")
{
    auto a = theorem35_report(CycloMatrix::identity(2), true);
    CHECK(a.verdict == Verdict::holds);
    CHECK(a.order_astar == -2);
    CHECK(a.beta == 2);
    CHECK(a.limit->to_double() == doctest::Approx(1.0));

    auto j = theorem35_report(M(2, {1, 1, 0, 1}), true);
    CHECK(j.verdict == Verdict::holds);
    CHECK(j.order_astar == -2);
    CHECK(j.beta == 1);
    CHECK(j.strict_inequality);
    CHECK_FALSE(j.limit_checked);

    auto d = theorem35_report(M(1, {2}), true);
    CHECK(d.beta == 0);
    CHECK(d.limit->to_double() == doctest::Approx(1.0));

    CHECK(theorem35_report(M(1, {2}), false).verdict == Verdict::not_applicable);
}

TEST_CASE("monodromy data files")
{
    auto m = load_monodromy(kData + "/monodromy/rotation_z3.toml");
    CHECK(m.cyclotomic_order == 3);
    CHECK(m.h0_vanishes);
    auto r = theorem35_report(m.F, m.h0_vanishes);
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.beta == 1);
    CHECK(r.globally_semisimple);
}

TEST_CASE("random semisimple corpus")
{
    Rng rng(42);
    for (int i = 0; i < 60; ++i) {
        CycloMatrix f = random_semisimple_monodromy(rng);
        auto q = quotient_I(f);
        auto s = semisimplicity(f);
        REQUIRE(s.global);
        REQUIRE(order_at_one(alexander_from_monodromy(f)) == -static_cast<int>(q.beta));
        auto r = theorem35_report(f, true);
        REQUIRE(r.verdict == Verdict::holds);
        REQUIRE(r.relative_error->to_double() < 1e-20);

        // Base change leaves the exact determinant alone.
        CycloMatrix p = CycloMatrix::identity(f.rows());
        if (f.rows() >= 2) p(0, 1) = random_scalar(rng, 4);
        auto g = p * f * field_inverse(p);
        REQUIRE(*torsion_from_monodromy(g).det_f_minus_one_on_I == *torsion_from_monodromy(f).det_f_minus_one_on_I);
    }
}

TEST_CASE("random jordan corpus")
{
    Rng rng(43);
    for (int i = 0; i < 40; ++i) {
        CycloMatrix f = random_jordan_monodromy(rng);
        auto r = theorem35_report(f, true);
        REQUIRE(r.verdict == Verdict::holds);
        REQUIRE(r.strict_inequality);
        REQUIRE_FALSE(r.semisimple_at_one);
    }
}
