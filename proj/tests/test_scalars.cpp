#include "alextor/scalars.hpp"

#include <doctest.h>

#include <random>

using namespace alextor;

namespace {

CycloNumber random_cyclo(std::mt19937_64& rng, unsigned n)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    std::vector<Rational> c(euler_phi(n));
    for (auto& x : c) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return CycloNumber::from_coords(n, c);
}

} // namespace

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Integer>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
    CHECK(euler_phi(12) == 4);
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
}

TEST_CASE("cyclo_arith examples")
{
    auto i = CycloNumber::zeta(4);
    CHECK(cyclo_arith(i, i, CycloOp::mul) == CycloNumber(-1L));
    CHECK(cyclo_arith(i, CycloNumber(), CycloOp::add) == i);
    auto w = CycloNumber::zeta(3);
    CHECK((CycloNumber(1L) + w) * (CycloNumber(1L) + w * w) == CycloNumber(1L));
    CHECK_THROWS(cyclo_arith(i, CycloNumber(), CycloOp::div));
    CHECK(CycloNumber::zeta(6, 2) == w);
    CHECK(CycloNumber::zeta(4, 2) + CycloNumber(1L) == CycloNumber());
}

TEST_CASE("conjugation")
{
    auto i = CycloNumber::zeta(4);
    CHECK(conjugate(i) == -i);
    CHECK(conjugate(CycloNumber(Rational(3, 7))) == CycloNumber(Rational(3, 7)));
    std::mt19937_64 rng(7);
    for (int k = 0; k < 50; ++k) {
        auto a = random_cyclo(rng, 5);
        CHECK(conjugate(conjugate(a)) == a);
    }
}

TEST_CASE("numeric embedding")
{
    auto e = embed_numeric(CycloNumber::zeta(4), 128);
    CHECK(std::abs(e.re.to_double()) < 1e-30);
    CHECK(e.im.to_double() == 1.0);
    auto h = embed_numeric(CycloNumber(Rational(1, 2)), 128);
    CHECK(h.re.to_double() == 0.5);
    CHECK(h.im.is_zero());
    auto m = embed_numeric(CycloNumber(1L) + CycloNumber::zeta(4), 128).modulus();
    auto r2 = sqrt(Real(2L, 128));
    CHECK(relative_difference(m, r2).to_double() < 1e-35);
}

TEST_CASE("a * conj(a) embeds as a real number")
{
    std::mt19937_64 rng(11);
    const unsigned orders[] = {3, 4, 5, 7, 8, 12};
    for (int k = 0; k < 1000; ++k) {
        auto a = random_cyclo(rng, orders[k % 6]);
        auto z = embed_numeric(a * conjugate(a), 128);
        CHECK(std::abs(z.im.to_double()) < 1e-30 * (1.0 + std::abs(z.re.to_double())));
    }
}

TEST_CASE("field axioms on random triples")
{
    std::mt19937_64 rng(3);
    const unsigned orders[] = {3, 4, 5, 6, 10};
    for (int k = 0; k < 100; ++k) {
        auto a = random_cyclo(rng, orders[k % 5]);
        auto b = random_cyclo(rng, orders[(k + 1) % 5]);
        auto c = random_cyclo(rng, orders[(k + 2) % 5]);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
            CHECK(b * b.inverse() == CycloNumber(1L));
        }
    }
}

TEST_CASE("lift and project")
{
    std::mt19937_64 rng(5);
    for (unsigned n : {3u, 4u, 5u, 6u}) {
        auto a = random_cyclo(rng, n);
        auto lifted = a.lifted(n * 6);
        CHECK(lifted.order() == n * 6);
        auto back = lifted.projected(n);
        REQUIRE(back.has_value());
        CHECK(back->coords() == a.coords());
        CHECK(lifted == a);
    }
    CHECK_FALSE(CycloNumber::zeta(12).projected(4).has_value());
    CHECK(CycloNumber::zeta(12, 3).projected(4).value() == CycloNumber::zeta(4));
}

TEST_CASE("string form")
{
    CHECK(CycloNumber(Rational(1, 2)).to_string() == "1/2");
    auto x = CycloNumber(Rational(1, 2)) + CycloNumber(Rational(1, 2)) * CycloNumber::zeta(5, 2);
    CHECK(x.to_string() == "1/2 + 1/2*z^2");
    CHECK(CycloNumber::zeta(4).to_string() == "z");
    CHECK((-CycloNumber::zeta(4)).to_string() == "-z");
}
