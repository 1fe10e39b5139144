#include <catch_amalgamated.hpp>

#include <random>

#include "corpus.hpp"
#include "wreath/quiver.hpp"

using namespace wreath;
using namespace wreath::testing;

namespace {

Quiver d4_affine()
{
    return Quiver({"c", "1", "2", "3", "4"},
                  {{"a", "1", "c"}, {"b", "2", "c"}, {"d", "c", "3"}, {"e", "4", "c"}});
}

DimVector random_dims(std::mt19937& rng, int size)
{
    std::uniform_int_distribution<int> d(-3, 3);
    DimVector out(size);
    for (auto& x : out)
        x = d(rng);
    return out;
}

}   // namespace

TEST_CASE("quiver construction", "[quiver]")
{
    const Quiver qv = affine_a1();
    CHECK(qv.num_vertices() == 2);
    CHECK(qv.num_arrows() == 4);
    CHECK(qv.arrow_name(1) == "a0*");
    CHECK(qv.arrow_index("a1*") == 3);
    CHECK(qv.arrow_tail(1) == 1);
    CHECK(qv.arrow_head(1) == 0);
    CHECK(qv.adjacent(0, 1));
    CHECK_FALSE(qv.has_loop(0));
    CHECK_THROWS_AS(qv.vertex_index("7"), UnknownVertex);
    CHECK_THROWS_AS(Quiver({"0"}, {{"a", "0", "1"}}), QuiverError);
    CHECK_THROWS_AS(Quiver({"0", "1"}, {{"a", "0", "1"}, {"a", "1", "0"}}), QuiverError);
    CHECK_THROWS_AS(Quiver({"0", "1"}, {{"a*", "0", "1"}}), QuiverError);
}

TEST_CASE("Ringel form on the Kronecker quiver", "[quiver]")
{
    const Quiver qv = affine_a1();
    const DimVector e0 = coordinate_vector(qv, 0);
    const DimVector e1 = coordinate_vector(qv, 1);
    CHECK(ringel_form(qv, e0, e1) == -2);
    CHECK(ringel_form(qv, e1, e0) == 0);
    CHECK(symmetrized_form(qv, e0, e1) == -2);
    CHECK(symmetrized_form(qv, {1, 1}, {1, 1}) == 0);
    CHECK(symmetrized_form(qv, e0, e0) == 2);
}

TEST_CASE("simple reflections", "[quiver]")
{
    const Quiver qv = affine_a1();
    CHECK(simple_reflection(qv, 0, {0, 1}) == DimVector{2, 1});
    CHECK(simple_reflection(qv, 0, {1, 1}) == DimVector{1, 1});
    CHECK(simple_reflection(qv, 0, simple_reflection(qv, 0, {0, 1})) == DimVector{0, 1});
    const Quiver loop({"0", "1"}, {{"l", "0", "0"}, {"a", "0", "1"}});
    CHECK(loop.has_loop(0));
    CHECK_THROWS_AS(simple_reflection(loop, 0, {1, 0}), EdgeLoop);
    CHECK_THROWS_AS(dual_reflection(loop, 0, weight({"1", "0"})), EdgeLoop);
}

TEST_CASE("dual reflections", "[quiver]")
{
    const Quiver qv = affine_a1();
    CHECK(dual_reflection(qv, 0, weight({"1", "0"})) == weight({"-1", "2"}));
    CHECK(dual_reflection(qv, 0, weight({"0", "5/7"})) == weight({"0", "5/7"}));
    const Weight w = weight({"3/2", "-5"});
    CHECK(dual_reflection(qv, 0, dual_reflection(qv, 0, w)) == w);
}

TEST_CASE("form invariance and pairing compatibility", "[quiver]")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (const Quiver& qv : {affine_a1(), affine_a2(), affine_a3(), d4_affine()})
    {
        const int size = qv.num_vertices();
        for (int trial = 0; trial < 20; ++trial)
        {
            const DimVector a = random_dims(rng, size);
            const DimVector b = random_dims(rng, size);
            const DimVector c = random_dims(rng, size);
            DimVector ab(size);
            for (int v = 0; v < size; ++v)
                ab[v] = a[v] + 2 * b[v];
            CHECK(ringel_form(qv, ab, c) == ringel_form(qv, a, c) + 2 * ringel_form(qv, b, c));
            CHECK(ringel_form(qv, c, ab) == ringel_form(qv, c, a) + 2 * ringel_form(qv, c, b));
            Weight lambda(size);
            for (auto& x : lambda)
                x = Scalar(Rational(coeff(rng), 1 + (trial % 3)));
            for (int i = 0; i < size; ++i)
            {
                const DimVector sa = simple_reflection(qv, i, a);
                CHECK(symmetrized_form(qv, sa, simple_reflection(qv, i, b)) == symmetrized_form(qv, a, b));
                CHECK(pairing(dual_reflection(qv, i, lambda), sa) == pairing(lambda, a));
                CHECK(pairing(dual_reflection(qv, i, lambda), a) == pairing(lambda, sa));
            }
        }
    }
}

TEST_CASE("affine data by radical computation", "[quiver]")
{
    CHECK(affine_data(affine_a1()) == DimVector{1, 1});
    CHECK(affine_data(affine_a2()) == DimVector{1, 1, 1});
    CHECK(affine_data(Quiver({"0"}, {})) == std::nullopt);
    CHECK(affine_data(Quiver({"0", "1", "2"}, {{"a", "0", "1"}, {"b", "1", "2"}})) == std::nullopt);
    const Quiver d4 = d4_affine();
    const auto delta = affine_data(d4);
    REQUIRE(delta);
    CHECK(*delta == DimVector{2, 1, 1, 1, 1});
    for (const Quiver& qv : {affine_a1(), affine_a2(), affine_a3(), d4})
    {
        const DimVector dl = *affine_data(qv);
        for (int i = 0; i < qv.num_vertices(); ++i)
            CHECK(symmetrized_form(qv, dl, coordinate_vector(qv, i)) == 0);
    }
}

TEST_CASE("word validation", "[quiver]")
{
    const Quiver qv = affine_a1();
    const Weight lambda = weight({"1", "0"});

    const WordReport one = validate_word(qv, lambda, {0});
    CHECK(one.pass);
    CHECK(one.steps.at(0).pivot == Scalar(1));
    CHECK(one.final_weight == weight({"-1", "2"}));

    const WordReport bad = validate_word(qv, lambda, {1, 0});
    CHECK_FALSE(bad.pass);
    CHECK(bad.failed_at == 1);
    CHECK(bad.steps.at(0).pivot == Scalar(0));

    const WordReport two = validate_word(qv, lambda, {0, 1});
    CHECK(two.pass);
    CHECK(two.steps.at(0).pivot == Scalar(1));
    CHECK(two.steps.at(1).pivot == Scalar(2));
    CHECK(two.final_weight == weight({"3", "-2"}));

    // pairing compatibility against s_1 s_0 on a basis
    for (int v = 0; v < 2; ++v)
    {
        const DimVector e = coordinate_vector(qv, v);
        const DimVector back = apply_word(qv, {1, 0}, e);
        CHECK(pairing(two.final_weight, e) == pairing(lambda, back));
    }
    CHECK(apply_word(qv, {0, 1}, {0, 1}) == simple_reflection(qv, 1, simple_reflection(qv, 0, {0, 1})));
    CHECK(validate_word(qv, lambda, {}).pass);
}

TEST_CASE("cartan matrix and reorientation", "[quiver]")
{
    const Quiver qv = affine_a2();
    const DenseMatrix<long> c = cartan_matrix(qv);
    CHECK(c(0, 0) == 2);
    CHECK(c(0, 1) == -1);
    CHECK(c(0, 2) == -1);
    const Quiver flipped = qv.reoriented({0});
    CHECK(flipped.edge(0).tail == 1);
    CHECK(flipped.edge(0).head == 0);
    CHECK(flipped.edge(0).name == "a0");
    CHECK(cartan_matrix(flipped) == c);
    CHECK(qv.connected());
    CHECK_FALSE(Quiver({"0", "1"}, {}).connected());
}
