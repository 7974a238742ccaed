#include "alextor/corpus.hpp"
#include "alextor/errors.hpp"
#include "alextor/io.hpp"

#include <doctest.h>

using namespace alextor;

namespace {

const std::string kData = ALEXTOR_DATA_DIR;

std::string error_of(auto&& f)
{
    try {
        f();
    } catch (const InputError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("presentation files")
{
    auto p = load_presentation(kData + "/knots/figure_eight.toml");
    CHECK(p.rank() == 2);
    CHECK(p.deficiency_one());
    auto e = error_of([] { presentation_from_toml("generators = [\"x\"]\nrelators = [\"x w\"]\n", "k.toml"); });
    CHECK(e.find("k.toml") != std::string::npos);
    CHECK_FALSE(error_of([] { presentation_from_toml("generators = [\n", "k.toml"); }).empty());
}

TEST_CASE("representation files")
{
    auto p = load_presentation(kData + "/knots/trefoil.toml");
    auto r = load_representation(kData + "/reps/trefoil_s3.toml", p);
    CHECK(r.dimension == 2);
    CHECK(r.cyclotomic_order == 3);
    auto t = load_representation(kData + "/reps/trivial2.toml", p);
    CHECK(t.dimension == 2);
    auto bad = "cyclotomic_order = 3\ndimension = 1\n[matrices]\nx = [[\"z\"]]\ny = [[\"1\"]]\n";
    CHECK_FALSE(error_of([&] { representation_from_toml(bad, "r.toml", p); }).empty());
}

TEST_CASE("complex json round trip")
{
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        ComplexGenOptions opt;
        opt.cyclotomic_order = i % 2 ? 3 : 1;
        auto c = random_complex(rng, opt);
        auto j = complex_to_json(c);
        auto back = complex_from_json(Json::parse(j.dump()));
        REQUIRE(complex_to_json(back) == j);
        auto d = dualize(c, DualKind::plain);
        REQUIRE(complex_to_json(complex_from_json(complex_to_json(d))) == complex_to_json(d));
    }
}

TEST_CASE("broken complex is rejected")
{
    Json j = complex_to_json(BasedComplex(0, {1, 1, 1}, {{1, LaurentMatrix(1, 1, LaurentPoly(1L))}}));
    j["boundaries"]["2"] = Json::array({Json::array({"t"})});
    CHECK_THROWS_AS(complex_from_json(j), InputError);
}
