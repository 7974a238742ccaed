#include "alextor/errors.hpp"
#include "alextor/foxcalc.hpp"
#include "alextor/parse.hpp"

#include <doctest.h>

#include <random>

using namespace alextor;

namespace {

const std::vector<std::string> XY = {"x", "y"};

FreeWord W(const char* s, const std::vector<std::string>& g = XY) { return parse_word(s, g); }
LaurentPoly P(const char* s) { return parse_laurent(s, 1); }

Augmentation ones(std::size_t k) { return Augmentation{std::vector<long>(k, 1)}; }

// The word as a group ring element minus the identity.
GroupRingElement minus_one(const FreeWord& w) { return GroupRingElement(w) - GroupRingElement::one(); }

FreeWord random_word(std::mt19937_64& rng, std::size_t k, std::size_t max_len)
{
    std::uniform_int_distribution<std::size_t> len(0, max_len), gen(0, k - 1);
    std::bernoulli_distribution sign(0.5);
    std::vector<Letter> letters;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) letters.push_back({gen(rng), sign(rng) ? 1 : -1});
    return FreeWord(letters);
}

// 2-dim dihedral rep of D_n on k generators sending generator g to the reflection with angle z^g.
Representation dihedral(std::size_t k, unsigned n)
{
    Representation r;
    r.dimension = 2;
    r.cyclotomic_order = n;
    for (std::size_t g = 0; g < k; ++g) {
        CycloMatrix m(2, 2);
        m(0, 1) = CycloNumber::zeta(n, static_cast<long>(g));
        m(1, 0) = CycloNumber::zeta(n, -static_cast<long>(g));
        r.matrices.push_back(m);
    }
    return r;
}

} // namespace

TEST_CASE("words parse, reduce and print")
{
    CHECK(W("x y Y x").to_string(XY) == "x x");
    CHECK(W("x^3 x^-2").to_string(XY) == "x");
    CHECK(W("1").is_identity());
    CHECK(W("x y").inverse() == W("y^-1 x^-1"));
    CHECK(W("x y x^-1").rotated(2) == W("y"));
    CHECK_THROWS_AS(W("x w"), InputError);
    CHECK_THROWS_AS(W("x^"), InputError);
}

TEST_CASE("fox derivative examples")
{
    CHECK(fox_derivative(W("x y"), 1) == GroupRingElement(W("x")));
    CHECK(fox_derivative(W("x^-1"), 0) == -GroupRingElement(W("x^-1")));
    auto d = fox_derivative(W("x y x y^-1 x^-1 y^-1"), 0);
    auto expected = GroupRingElement::one() + GroupRingElement(W("x y")) - GroupRingElement(W("x y x y^-1 x^-1"));
    CHECK(d == expected);
}

TEST_CASE("phi examples")
{
    auto rho = Representation::trivial(2);
    auto eps = ones(2);
    CHECK(phi(GroupRingElement(W("x")), rho, eps) == LaurentMatrix(1, 1, P("t")));
    CHECK(phi(minus_one(W("x")), rho, eps) == LaurentMatrix(1, 1, P("t - 1")));
    CHECK(phi(fox_derivative(W("x y x y^-1 x^-1 y^-1"), 0), rho, eps) == LaurentMatrix(1, 1, P("t^2 - t + 1")));
}

TEST_CASE("abelianization")
{
    Presentation trefoil{"trefoil", XY, {W("x y x y^-1 x^-1 y^-1")}, std::nullopt};
    CHECK(abelianization_epsilon(trefoil).values == std::vector<long>{1, 1});
    Presentation free1{"free", {"x"}, {}, std::nullopt};
    CHECK(abelianization_epsilon(free1).values == std::vector<long>{1});
    Presentation bad{"bad", XY, {W("x y x^-1 y^-1"), W("x x")}, std::nullopt};
    CHECK_THROWS_AS(abelianization_epsilon(bad), InputError);
    bad.augmentation = std::vector<long>{0, 1};
    CHECK(augmentation_for(bad).values == std::vector<long>{0, 1});
    Presentation wrong = trefoil;
    wrong.augmentation = std::vector<long>{1, 2};
    CHECK_THROWS_AS(augmentation_for(wrong), InputError);
}

TEST_CASE("representation validation")
{
    Presentation trefoil{"trefoil", XY, {W("x y x y^-1 x^-1 y^-1")}, std::nullopt};
    CHECK_NOTHROW(validate_representation(trefoil, dihedral(2, 3)));
    // D_4 reflections do not satisfy the braid relation.
    CHECK_THROWS_AS(validate_representation(trefoil, dihedral(2, 4)), InputError);
    auto r = dihedral(2, 3);
    r.matrices[0](0, 1) = CycloNumber(2L);
    CHECK_THROWS_AS(validate_representation(trefoil, r), InputError);
}

TEST_CASE("fundamental identity on random words")
{
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 500; ++iter) {
        std::size_t k = 1 + iter % 4;
        FreeWord w = random_word(rng, k, 12);
        GroupRingElement sum;
        for (std::size_t g = 0; g < k; ++g) sum += fox_derivative(w, g) * minus_one(FreeWord::generator(g));
        REQUIRE(sum == minus_one(w));

        std::uniform_int_distribution<long> e(-2, 2);
        Augmentation eps{std::vector<long>(k)};
        for (auto& v : eps.values) v = e(rng);
        auto rho = dihedral(k, 5);
        LaurentMatrix lhs(2, 2);
        for (std::size_t g = 0; g < k; ++g)
            lhs = lhs + phi(fox_derivative(w, g), rho, eps) * phi(minus_one(FreeWord::generator(g)), rho, eps);
        REQUIRE(lhs == phi(minus_one(w), rho, eps));
    }
}

TEST_CASE("phi is a ring map")
{
    std::mt19937_64 rng(11);
    auto rho = dihedral(3, 4);
    Augmentation eps{{1, -1, 2}};
    for (int iter = 0; iter < 100; ++iter) {
        GroupRingElement u = GroupRingElement(random_word(rng, 3, 6)) - GroupRingElement(random_word(rng, 3, 6), 2);
        GroupRingElement v = GroupRingElement(random_word(rng, 3, 6)) + GroupRingElement::one();
        REQUIRE(phi(u * v, rho, eps) == phi(u, rho, eps) * phi(v, rho, eps));
        REQUIRE(phi(u + v, rho, eps) == phi(u, rho, eps) + phi(v, rho, eps));
    }
}

TEST_CASE("integer smith form")
{
    auto s = integer_smith({{2, 4}, {6, 8}}, 2);
    CHECK(s.rank == 2);
    CHECK(s.d == std::vector<Integer>{2, 4});
}
