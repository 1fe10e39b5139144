#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "lemmas.hpp"
#include "oracles.hpp"
#include "wreath/reflect.hpp"

using namespace wreath;
using namespace wreath::testing;

namespace {

WreathModule s1(const Weight& lambda)
{
    return n1_module(affine_a1(), lambda, {0, 1}, {});
}

// two edges a, b : 1 -> 0, so vertex 0 is a sink
Quiver sink_kronecker()
{
    return Quiver({"0", "1"}, {{"a", "1", "0"}, {"b", "1", "0"}});
}

WreathModule sink_line(const Weight& lambda)
{
    return n1_module(sink_kronecker(), lambda, {1, 1},
                     {{"a", mat({{"1"}})}, {"a*", mat({{"2"}})}, {"b", mat({{"3"}})}, {"b*", mat({{"1"}})}});
}

WreathModule s1_square()
{
    const Params p = make_params(affine_a1(), 2, weight({"1", "0"}), 0);
    return build_outer_tensor(p, {{s1(weight({"1", "0"})), 2, trivial_rep(2)}});
}

std::map<Tuple, int> dims(std::initializer_list<std::pair<const Tuple, int>> list)
{
    return std::map<Tuple, int>(list);
}

}   // namespace

TEST_CASE("pi and mu blocks", "[reflect]")
{
    CHECK_THROWS(SinkEngine(s1(weight({"1", "0"})), 0));
    const WreathModule sink_s1 = reorient_module(s1(weight({"1", "0"})), sink_flips(affine_a1(), 0));
    const SinkEngine s(sink_s1, 0);
    const Mat p = s.pi({0}, 1, 0);
    CHECK(p.rows() == 0);
    CHECK(p.cols() == 2);
    CHECK(s.mu({0}, 1, 0).rows() == 2);
    CHECK(s.mu({0}, 1, 0).cols() == 0);

    const WreathModule v = sink_line(weight({"5", "-5"}));
    REQUIRE(verify_relations(v).ok());
    const SinkEngine e(v, 0);
    CHECK(e.pi({0}, 1, 0) == mat({{"1", "3"}}));
    CHECK(e.mu({0}, 1, 0) == mat({{"2"}, {"1"}}));
    CHECK(mul<Scalar>(e.pi({0}, 1, 0), e.mu({0}, 1, 0)) == mat({{"5"}}));
    CHECK_THROWS(e.pi({0}, 0, 0));
}

TEST_CASE("big spaces index maps xi in mixed radix", "[reflect]")
{
    const WreathModule v = reorient_module(s1_square(), sink_flips(affine_a1(), 0));
    const SinkEngine e(v, 0);
    const BigSpace b = e.space({0, 0}, 3);
    CHECK(b.radix == 2);
    CHECK(b.xis.size() == 4);
    CHECK(b.dim == 4);
    CHECK(b.index_of({1, 0}) == 2);
    CHECK(b.summands.at(0) == Tuple{1, 1});
    CHECK(e.delta({0, 1}) == 1);
}

TEST_CASE("reflection functor examples", "[reflect]")
{
    const ReflectionOutput out = reflection_functor(s1(weight({"1", "0"})), 0);
    CHECK(out.module.support() == dims({{{0}, 2}, {{1}, 1}}));
    CHECK(out.module.params().lambda == weight({"-1", "2"}));
    CHECK(verify_relations(out.module).ok());

    const WreathModule zero(make_params(affine_a1(), 2, weight({"1", "0"}), 0));
    CHECK(reflection_functor(zero, 0).module.total_dim() == 0);

    const ReflectionOutput sq = reflection_functor(s1_square(), 0);
    CHECK(sq.module.support() == dims({{{1, 1}, 1}, {{0, 1}, 2}, {{1, 0}, 2}, {{0, 0}, 4}}));
    CHECK(sq.ambient.at({0, 0}) == 4);

    const Quiver loop({"0", "1"}, {{"l", "0", "0"}, {"a", "0", "1"}});
    const WreathModule looped(make_params(loop, 1, weight({"0", "0"}), 0));
    CHECK_THROWS_AS(reflection_functor(looped, 0), EdgeLoop);
    CHECK_THROWS(reflection_functor(s1(weight({"1", "1"})), 0));
}

TEST_CASE("reflection outputs are modules over the reflected weight", "[reflect]")
{
    for (const CorpusEntry& e : reflect_corpus())
        for (int i = 0; i < e.module.quiver().num_vertices(); ++i)
        {
            INFO(e.name << " at " << i);
            const ReflectionOutput out = reflection_functor(e.module, i);
            CHECK(out.module.params().lambda == dual_reflection(e.module.quiver(), i, e.module.params().lambda));
            CHECK(verify_relations(out.module).ok());
            CHECK(oracle_is_module(out.module));
        }
}

TEST_CASE("n = 1 dimension vectors follow s_i at generic weights", "[reflect]")
{
    for (const CorpusEntry& e : reflect_corpus())
    {
        if (e.module.n() != 1)
            continue;
        const Quiver& qv = e.module.quiver();
        DimVector alpha(qv.num_vertices(), 0);
        for (const auto& [j, d] : e.module.support())
            alpha[j[0]] += d;
        for (int i = 0; i < qv.num_vertices(); ++i)
        {
            if (!is_generic(e.module.params(), i))
                continue;
            const WreathModule out = reflection_functor(e.module, i).module;
            DimVector beta(qv.num_vertices(), 0);
            for (const auto& [j, d] : out.support())
                beta[j[0]] += d;
            CHECK(beta == oracle_reflect_dims(qv, i, alpha));
        }
    }
}

TEST_CASE("genericity closed form and oracle", "[reflect]")
{
    const Params bad = make_params(affine_a1(), 3, weight({"2", "0"}), 1);
    CHECK_FALSE(is_generic(bad, 0));
    const GenericCheck g = genericity(bad, 0);
    CHECK(g.p == 2);
    CHECK(g.branch == -1);
    CHECK(is_generic(make_params(affine_a1(), 3, weight({"2", "0"}), q("1/3")), 0));
    for (int n = 1; n <= 3; ++n)
        CHECK_FALSE(is_generic(make_params(affine_a1(), n, weight({"0", "1"}), q("1/2")), 0));
    for (const char* nu : {"0", "1", "-1/2", "2"})
        for (const char* l : {"0", "1", "-1", "3/2"})
        {
            const Params p = make_params(affine_a1(), 3, weight({l, "1"}), q(nu));
            CHECK(is_generic(p, 0) == is_generic_oracle(p, 0));
        }
}

TEST_CASE("morphisms", "[reflect]")
{
    const WreathModule v = s1(weight({"1", "0"}));
    const ReflectionOutput fv = reflection_functor(v, 0);
    const TupleMaps id = reflect_morphism(fv, fv, identity_maps(v));
    CHECK(check_intertwiner(fv.module, fv.module, id));
    for (const auto& [j, m] : id)
        CHECK(m == Mat::Identity(m.rows(), m.cols()));

    TupleMaps zero;
    for (const auto& [j, d] : v.support())
        zero[j] = Mat::Zero(d, d);
    for (const auto& [j, m] : reflect_morphism(fv, fv, zero))
        CHECK(is_zero<Scalar>(m));

    const WreathModule two = direct_sum(v, v);
    const ReflectionOutput f2 = reflection_functor(two, 0);
    TupleMaps proj;
    proj[{1}] = mat({{"1", "0"}, {"0", "0"}});
    REQUIRE(check_intertwiner(two, two, proj, false));
    const TupleMaps image = reflect_morphism(f2, f2, proj);
    CHECK(check_intertwiner(f2.module, f2.module, image, false));
    for (const auto& [j, d] : f2.module.support())
        CHECK(rank<Scalar>(image.at(j)) * 2 == d);

    // functoriality: F(g f) = F(g) F(f)
    TupleMaps swap;
    swap[{1}] = mat({{"0", "1"}, {"1", "0"}});
    TupleMaps composite;
    composite[{1}] = mul<Scalar>(swap.at({1}), proj.at({1}));
    const TupleMaps fs = reflect_morphism(f2, f2, swap);
    const TupleMaps fc = reflect_morphism(f2, f2, composite);
    for (const auto& [j, m] : fc)
        CHECK(m == mul<Scalar>(fs.at(j), image.at(j)));

    TupleMaps broken;
    broken[{0}] = Mat::Zero(1, 1);
    const WreathModule p = n1_module(affine_a1(), weight({"1", "-1"}), {1, 1}, {{"a0", mat({{"1"}})}, {"a0*", mat({{"-1"}})}});
    const ReflectionOutput fp = reflection_functor(p, 0);
    broken[{1}] = mat({{"1"}});
    CHECK_THROWS(reflect_morphism(fp, fp, broken));
}

TEST_CASE("involution witnesses", "[reflect]")
{
    const InvolutionWitness w = involution_witness(s1(weight({"1", "0"})), 0);
    CHECK(w.verified);
    CHECK(w.twice.module.support() == dims({{{1}, 1}}));

    const WreathModule zero(make_params(affine_a1(), 1, weight({"1", "0"}), 0));
    CHECK(involution_witness(zero, 0).verified);

    const InvolutionWitness sq = involution_witness(s1_square(), 0);
    CHECK(sq.verified);
    CHECK(sq.twice.module.support() == dims({{{1, 1}, 1}}));

    CHECK_THROWS_AS(involution_witness(s1(weight({"0", "0"})), 0), NotGeneric);
}

TEST_CASE("functor words", "[reflect]")
{
    const WreathModule v = s1(weight({"1", "0"}));
    CHECK(apply_functor_word(v, {}).module == v);

    const WordResult back = apply_functor_word(v, {0, 0}, true);
    CHECK(back.module.support() == v.support());
    CHECK(back.trace.size() == 3);

    const WordResult two = apply_functor_word(v, {0, 1});
    DimVector alpha(2, 0);
    for (const auto& [j, d] : two.module.support())
        alpha[j[0]] += d;
    CHECK(alpha == apply_word(affine_a1(), {0, 1}, {0, 1}));
    CHECK(alpha == DimVector{2, 3});
    CHECK(two.module.params().lambda == weight({"3", "-2"}));
}

TEST_CASE("block map identities", "[reflect]")
{
    for (const CorpusEntry& e : reflect_corpus())
        for (int i = 0; i < e.module.quiver().num_vertices(); ++i)
        {
            INFO(e.name << " at " << i);
            const SinkEngine engine(reorient_module(e.module, sink_flips(e.module.quiver(), i)), i);
            const LemmaTally t = check_all_lemmas(engine);
            CHECK(t.failures.empty());
        }
    // the identities detect a weight that does not match the module
    const SinkEngine off(sink_line(weight({"2", "-5"})), 0);
    CHECK_FALSE(check_all_lemmas(off).failures.empty());
}

TEST_CASE("reflection is exact at generic weights", "[reflect]")
{
    const WreathModule p = n1_module(affine_a1(), weight({"1", "-1"}), {1, 1},
                                     {{"a0", mat({{"1"}})}, {"a0*", mat({{"-2"}})}, {"a1", mat({{"1"}})}, {"a1*", mat({{"1"}})}});
    const WreathModule pb = n1_module(affine_a1(), weight({"1", "-1"}), {1, 1}, {{"a0", mat({{"1"}})}, {"a0*", mat({{"-1"}})}});
    const WreathModule sum = direct_sum(p, pb);
    const std::vector<TupleMaps> generators = {
        {{{0}, mat({{"1"}, {"1"}})}},
        {{{1}, mat({{"1"}, {"0"}})}},
        {{{0}, mat({{"0"}, {"1"}})}},
    };
    for (const TupleMaps& g : generators)
    {
        const Subquotient sq = generated_submodule(sum, g);
        for (int i = 0; i < 2; ++i)
        {
            REQUIRE(is_generic(sum.params(), i));
            const WreathModule fv = reflection_functor(sum, i).module;
            const WreathModule fu = reflection_functor(sq.sub, i).module;
            const WreathModule fw = reflection_functor(sq.quotient, i).module;
            for (const auto& [j, d] : fv.support())
                CHECK(d == fu.dim(j) + fw.dim(j));
            CHECK(fv.total_dim() == fu.total_dim() + fw.total_dim());
        }
    }
}

TEST_CASE("reflection commutes with graph automorphisms", "[reflect]")
{
    const std::vector<int> rotate = {1, 2, 0};
    for (const CorpusEntry& e : reflect_corpus())
    {
        if (e.module.quiver().num_vertices() != 3)
            continue;
        for (int i = 0; i < 3; ++i)
        {
            INFO(e.name << " at " << i);
            const WreathModule left = graph_automorphism_transport(reflection_functor(e.module, i).module, rotate);
            const WreathModule right =
                reflection_functor(graph_automorphism_transport(e.module, rotate), rotate[i]).module;
            CHECK(left.params().lambda == right.params().lambda);
            CHECK(left.support() == right.support());
            CHECK(oracle_find_isomorphism(left, right).has_value());
        }
    }
    const std::vector<int> swap = {1, 0};
    for (const CorpusEntry& e : reflect_corpus())
    {
        if (e.module.quiver().num_vertices() != 2)
            continue;
        for (int i = 0; i < 2; ++i)
        {
            INFO(e.name << " at " << i);
            const WreathModule left = graph_automorphism_transport(reflection_functor(e.module, i).module, swap);
            const WreathModule right = reflection_functor(graph_automorphism_transport(e.module, swap), swap[i]).module;
            CHECK(left.params().lambda == right.params().lambda);
            CHECK(left.support() == right.support());
            CHECK(oracle_find_isomorphism(left, right).has_value());
        }
    }
}
