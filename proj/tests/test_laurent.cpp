#include "alextor/errors.hpp"
#include "alextor/laurent.hpp"

#include <doctest.h>

#include <random>

using namespace alextor;

namespace {

LaurentPoly T(int k = 1) { return LaurentPoly::monomial(CycloNumber(1L), k); }

LaurentPoly random_poly(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> c(-3, 3);
    std::uniform_int_distribution<int> lo(-2, 2), len(1, 4);
    std::vector<CycloNumber> cs(len(rng));
    for (auto& x : cs) x = CycloNumber(c(rng));
    auto p = LaurentPoly::from_coeffs(lo(rng), cs);
    return p.is_zero() ? T(lo(rng)) : p;
}

} // namespace

TEST_CASE("laurent basics")
{
    auto p = LaurentPoly::from_coeffs(-1, {CycloNumber(), CycloNumber(2L), CycloNumber(3L), CycloNumber()});
    CHECK(p.min_exp() == 0);
    CHECK(p.max_exp() == 1);
    CHECK(p == LaurentPoly(2L) + T() * CycloNumber(3L));
    CHECK((T() - 1L) * (T() + 1L) == T(2) - 1L);
    CHECK(T(-1) * T() == LaurentPoly(1L));
    CHECK(p.to_string() == "3*t + 2");
    CHECK((T(-2) - T() * CycloNumber::zeta(4)).to_string() == "-z*t + t^-2");
}

TEST_CASE("division and gcd")
{
    auto a = (T() - 1L) * (T() - 1L) * (T() + 2L);
    auto b = (T() - 1L) * (T() + 3L);
    CHECK(gcd(a, b) == T() - 1L);
    CHECK(exact_div(a, T() - 1L) == (T() - 1L) * (T() + 2L));
    CHECK_THROWS_AS(exact_div(a, T() + 3L), InvariantViolation);
    CHECK(divides(T(5), T(2)));
    auto [q, r] = poly_divmod(T(3) + 1L, T() + 1L);
    CHECK(r.is_zero());
    CHECK(q == T(2) - T() + 1L);
}

TEST_CASE("order_at_one")
{
    auto s = T() - 1L;
    CHECK(order_at_one(RatFunc(s * s)) == 2);
    CHECK(order_at_one(RatFunc(T(5) * CycloNumber(-3L))) == 0);
    CHECK(order_at_one(RatFunc(T(2) - 1L, s * s * s)) == -2);
    CHECK_THROWS(order_at_one(RatFunc()));
}

TEST_CASE("leading_at_one")
{
    auto s = T() - 1L;
    CHECK(leading_at_one(RatFunc(s * s)) == CycloNumber(1L));
    CHECK(leading_at_one(RatFunc(s * CycloNumber(3L), s)) == CycloNumber(3L));
    CHECK(leading_at_one(RatFunc(T(2) - 1L, s)) == CycloNumber(2L));
    CHECK_THROWS(leading_at_one(RatFunc()));
}

TEST_CASE("unit_normalize")
{
    auto s = T() - 1L;
    auto r = unit_normalize(RatFunc(T(3) * s * CycloNumber(5L)));
    CHECK(r.canonical == RatFunc(s));
    CHECK(r.unit.exponent == 3);
    CHECK(r.unit.coefficient == CycloNumber(5L));

    auto id = unit_normalize(RatFunc(s));
    CHECK(id.unit.exponent == 0);
    CHECK(id.unit.coefficient == CycloNumber(1L));

    auto d = unit_normalize(RatFunc(T(2) * CycloNumber(2L) - T() * CycloNumber(2L), T(3)));
    CHECK(d.canonical == RatFunc(s));
    CHECK(d.unit.exponent == -2);
    CHECK(d.unit.coefficient == CycloNumber(2L));
}

TEST_CASE("order properties on random data")
{
    std::mt19937_64 rng(17);
    for (int k = 0; k < 500; ++k) {
        RatFunc f(random_poly(rng), random_poly(rng));
        RatFunc g(random_poly(rng), random_poly(rng));
        CHECK(order_at_one(f * g) == order_at_one(f) + order_at_one(g));
        std::uniform_int_distribution<long> c(1, 9);
        std::uniform_int_distribution<int> e(-4, 4);
        RatFunc u(LaurentPoly::monomial(CycloNumber(c(rng)) * CycloNumber::zeta(3, c(rng)), e(rng)));
        CHECK(order_at_one(f * u) == order_at_one(f));
        auto n1 = unit_normalize(f);
        auto n2 = unit_normalize(n1.canonical);
        CHECK(n2.canonical == n1.canonical);
        CHECK(n2.unit.exponent == 0);
        CHECK(n2.unit.coefficient == CycloNumber(1L));
        auto ratio = unit_ratio(f * u, f);
        REQUIRE(ratio.has_value());
    }
}

TEST_CASE("ratfunc arithmetic")
{
    auto s = T() - 1L;
    RatFunc f(T(2) - 1L, s);
    CHECK(f == RatFunc(T() + 1L));
    CHECK(f.is_laurent());
    RatFunc g(LaurentPoly(1L), s);
    CHECK(g * RatFunc(s) == RatFunc(1L));
    CHECK(g + g == RatFunc(LaurentPoly(2L), s));
    CHECK(g.inverse() == RatFunc(s));
    CHECK(RatFunc(T() * CycloNumber::zeta(4)).conjugated() == RatFunc(T() * -CycloNumber::zeta(4)));
}
