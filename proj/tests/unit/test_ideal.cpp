#include "fixtures.hpp"
#include "oracles.hpp"

#include "vspread/errors.hpp"
#include "vspread/ideal.hpp"
#include "vspread/spread_ops.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace vspread;
using fixture::mono;
using fixture::monos;
using oracle::Exp;

namespace {

// Stable: only the largest index may be exchanged.
bool stable_by_definition(const std::vector<Exp>& gens, int n, const std::vector<int>& t)
{
    const int d = static_cast<int>(t.size()) + 1;
    for (int l = 1; l <= d; ++l)
        for (const auto& u : oracle::spread_monomials(n, l, t)) {
            if (!oracle::in_ideal(gens, u))
                continue;
            const int m = oracle::index_sequence(u).back();
            for (int j = 1; j < m; ++j) {
                Exp w = u;
                --w[static_cast<std::size_t>(m - 1)];
                ++w[static_cast<std::size_t>(j - 1)];
                if (oracle::is_spread(w, t) && !oracle::in_ideal(gens, w))
                    return false;
            }
        }
    return true;
}

// Lex: every spread w of the same degree that is lex above a spread u in I is in I.
// spread_monomials lists lex largest first, so I must fill a prefix.
bool lex_by_definition(const std::vector<Exp>& gens, int n, const std::vector<int>& t)
{
    const int d = static_cast<int>(t.size()) + 1;
    for (int l = 1; l <= d; ++l) {
        bool left_ideal = false;
        for (const auto& u : oracle::spread_monomials(n, l, t)) {
            const bool in = oracle::in_ideal(gens, u);
            if (in && left_ideal)
                return false;
            left_ideal = left_ideal || !in;
        }
    }
    return true;
}

struct RandomSpreadIdeal {
    int n;
    std::vector<int> t;
    std::vector<Exp> gens;
};

RandomSpreadIdeal random_spread_ideal(std::mt19937_64& rng)
{
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    RandomSpreadIdeal r;
    r.n = pick(2, 5);
    r.t.resize(static_cast<std::size_t>(pick(1, 2)));
    for (auto& x : r.t)
        x = pick(0, 2);
    const int count = pick(1, 4);
    for (int c = 0; c < count; ++c) {
        const auto pool = oracle::spread_monomials(r.n, pick(1, static_cast<int>(r.t.size()) + 1), r.t);
        if (!pool.empty())
            r.gens.push_back(pool[static_cast<std::size_t>(pick(0, static_cast<int>(pool.size()) - 1))]);
    }
    r.gens = oracle::minimal(r.gens);
    return r;
}

} // namespace

TEST(Ideal, MinimalizeKeepsTheMinimalElementsInCanonicalOrder)
{
    const MonomialIdeal I = minimalize(
        4, monos({"x1*x2", "x1*x3", "x1*x2^2", "x1*x2*x3", "x1*x2*x4", "x1*x3^2", "x1*x3*x4", "x1*x4^2"}, 4));
    EXPECT_EQ(I.generators(), monos({"x1*x2", "x1*x3", "x1*x4^2"}, 4));
    EXPECT_EQ(minimalize(3, monos({"x2*x3"}, 3)).generators(), monos({"x2*x3"}, 3));
    EXPECT_EQ(minimalize(3, monos({"x1*x2", "x1"}, 3)).generators(), monos({"x1"}, 3));
    EXPECT_TRUE(minimalize(3, {}).is_zero());
    EXPECT_TRUE(minimalize(3, {Monomial(3), mono("x1", 3)}).is_unit());
}

TEST(Ideal, GeneratorOrderIsDegreeThenPlexDescending)
{
    const MonomialIdeal I(4, monos({"x2*x3", "x1*x4^2", "x1*x3", "x2^2", "x2^2*x4"}, 4));
    EXPECT_EQ(I.generators(), monos({"x1*x3", "x2^2", "x2*x3", "x1*x4^2"}, 4));
    EXPECT_TRUE(generator_order_less(mono("x4", 4), mono("x1^2", 4)));
    EXPECT_TRUE(generator_order_less(mono("x1*x3", 4), mono("x2^2", 4)));
    EXPECT_EQ(I.max_generator_degree(), 3);
    EXPECT_EQ(I.generators_of_degree(2).size(), 3u);
    EXPECT_EQ(I.generator_position(mono("x1*x4^2", 4)), 3);
    EXPECT_EQ(I.generator_position(mono("x1", 4)), -1);
}

TEST(Ideal, SpreadTagRejectsNonSpreadGenerators)
{
    EXPECT_THROW(MonomialIdeal(3, monos({"x1^2"}, 3), SpreadVector({1})), PreconditionError);
    EXPECT_NO_THROW(MonomialIdeal(3, monos({"x1*x2"}, 3), SpreadVector({1})));
    EXPECT_THROW(MonomialIdeal(3, {mono("x1", 4)}), PreconditionError);
}

TEST(Ideal, Membership)
{
    const MonomialIdeal I = fixture::six_variable();
    EXPECT_TRUE(contains(I, mono("x2*x3^2*x5", 6)));
    EXPECT_FALSE(contains(I, mono("x2*x4", 6)));
    EXPECT_FALSE(contains(I, Monomial(6)));
    EXPECT_TRUE(contains(MonomialIdeal::unit(6), Monomial(6)));
    EXPECT_FALSE(contains(MonomialIdeal::zero(6), mono("x1", 6)));
    EXPECT_TRUE(is_contained(MonomialIdeal(3, monos({"x1*x2"}, 3)), MonomialIdeal(3, monos({"x1"}, 3))));
    EXPECT_FALSE(is_contained(MonomialIdeal(3, monos({"x1"}, 3)), MonomialIdeal(3, monos({"x1*x2"}, 3))));
}

TEST(IdealClass, FixtureExamples)
{
    EXPECT_TRUE(is_t_strongly_stable(fixture::six_variable(), fixture::six_variable_t()));
    EXPECT_TRUE(is_t_strongly_stable(fixture::three_generator(), fixture::three_generator_t()));
    for (int n = 2; n <= 5; ++n)
        for (const auto& t : {SpreadVector({0}), SpreadVector({1, 2})}) {
            const MonomialIdeal I(n, {mono("x2", n)});
            const auto w = find_class_violation(I, t, IdealClass::strongly_stable);
            ASSERT_TRUE(w.has_value());
            EXPECT_EQ(w->describe(), "x_1·(x_2/x_2) ∉ I");
            EXPECT_EQ(w->w, mono("x1", n));
        }
}

TEST(IdealClass, ZeroAndUnitIdealsBelongToEveryClass)
{
    for (auto cls : {IdealClass::stable, IdealClass::strongly_stable, IdealClass::lex}) {
        EXPECT_FALSE(find_class_violation(MonomialIdeal::zero(4), SpreadVector({1}), cls));
        EXPECT_FALSE(find_class_violation(MonomialIdeal::unit(4), SpreadVector({1}), cls));
    }
}

TEST(IdealClass, NonSpreadGeneratorIsAPreconditionFailure)
{
    EXPECT_THROW(is_t_strongly_stable(MonomialIdeal(3, monos({"x1^2"}, 3)), SpreadVector({1})), PreconditionError);
}

TEST(IdealClass, LexWitnessDescribesBothMonomials)
{
    // (x1x3) with t = (1): x1x2 is lex above and missing
    const auto w = find_class_violation(MonomialIdeal(3, monos({"x1*x3"}, 3)), SpreadVector({1}), IdealClass::lex);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->describe(), "x_1x_2 ∉ I but x_1x_3 ∈ I");
}

TEST(IdealClass, PredicatesAgreeWithDefinitionsAndNest)
{
    std::mt19937_64 rng(1234);
    int counts[3] = {0, 0, 0};
    for (int trial = 0; trial < 400; ++trial) {
        const auto r = random_spread_ideal(rng);
        const MonomialIdeal I(r.n, oracle::from_exps(r.gens));
        const SpreadVector t(r.t);
        const bool st = is_t_stable(I, t);
        const bool ss = is_t_strongly_stable(I, t);
        const bool lx = is_t_lex(I, t);
        ASSERT_EQ(st, stable_by_definition(r.gens, r.n, r.t)) << to_string(I);
        ASSERT_EQ(ss, oracle::strongly_stable_by_definition(r.gens, r.n, r.t)) << to_string(I);
        ASSERT_EQ(lx, lex_by_definition(r.gens, r.n, r.t)) << to_string(I);
        EXPECT_TRUE(!lx || ss);
        EXPECT_TRUE(!ss || st);
        counts[0] += st;
        counts[1] += ss;
        counts[2] += lx;
    }
    EXPECT_GT(counts[2], 0);
    EXPECT_LT(counts[0], 400);
}

TEST(IdealClass, ClassesAreStrictlyNested)
{
    const SpreadVector t({0});
    // strongly stable, not lex: x1x3 is missing below x2^2
    const MonomialIdeal a(3, monos({"x1^2", "x1*x2", "x2^2"}, 3));
    EXPECT_TRUE(is_t_strongly_stable(a, t));
    EXPECT_FALSE(is_t_lex(a, t));
    // stable, not strongly stable: x1 (x2x3 / x2) is missing
    const MonomialIdeal b(3, monos({"x1^2", "x1*x2", "x2^2", "x2*x3"}, 3));
    EXPECT_TRUE(is_t_stable(b, t));
    EXPECT_FALSE(is_t_strongly_stable(b, t));
    const auto w = find_class_violation(b, t, IdealClass::strongly_stable);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->w, mono("x1*x3", 3));
}

TEST(IdealClass, ParseClassNames)
{
    EXPECT_EQ(parse_ideal_class("strongly-stable"), IdealClass::strongly_stable);
    EXPECT_EQ(to_string(parse_ideal_class("lex")), "lex");
    EXPECT_THROW(parse_ideal_class("borel"), ParseError);
}

TEST(Closure, SmallExamples)
{
    for (int a = 1; a <= 3; ++a) {
        const Monomial p = Monomial(4, std::vector<int>(static_cast<std::size_t>(a), 1));
        EXPECT_EQ(strongly_stable_closure(4, {p}, SpreadVector::zero(3)), MonomialIdeal(4, {p}));
    }
    const SpreadVector t({1, 0, 2});
    const MonomialIdeal c = strongly_stable_closure(6, {mono("x2*x4^2*x6", 6)}, t);
    EXPECT_TRUE(contains(c, mono("x1*x3^2*x5", 6)));
    EXPECT_TRUE(is_t_strongly_stable(c, t));
    EXPECT_THROW(strongly_stable_closure(6, {mono("x1^2", 6)}, t), PreconditionError);
}

TEST(Closure, IdempotentExtensiveMonotoneAndMatchesOracle)
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        const auto r = random_spread_ideal(rng);
        const SpreadVector t(r.t);
        const auto gens = oracle::from_exps(r.gens);
        const MonomialIdeal c = strongly_stable_closure(r.n, gens, t);
        ASSERT_EQ(c, MonomialIdeal(r.n, oracle::from_exps(oracle::exchange_closure(r.gens, r.n, r.t))));
        ASSERT_TRUE(is_t_strongly_stable(c, t));
        ASSERT_EQ(strongly_stable_closure(r.n, c.generators(), t), c);
        for (const auto& g : gens)
            ASSERT_TRUE(contains(c, g));
        // monotone: closure of a subset lies in the closure
        std::vector<Monomial> part(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>((gens.size() + 1) / 2));
        ASSERT_TRUE(is_contained(strongly_stable_closure(r.n, part, t), c));
    }
    EXPECT_EQ(strongly_stable_closure(6, fixture::six_variable().generators(), fixture::six_variable_t()),
              fixture::six_variable());
}

TEST(StandardDecomposition, Examples)
{
    const MonomialIdeal I = fixture::six_variable();
    const SpreadVector t = fixture::six_variable_t();
    for (const auto& g : I.generators()) {
        const auto sd = standard_decomposition(I, t, g);
        EXPECT_EQ(sd.u, g);
        EXPECT_TRUE(sd.v.is_one());
    }
    const auto a = standard_decomposition(I, t, mono("x2*x3^2*x5", 6));
    EXPECT_EQ(a.u, mono("x2*x3^2", 6));
    EXPECT_EQ(a.v, mono("x5", 6));
    const auto b = standard_decomposition(fixture::three_generator(), fixture::three_generator_t(), mono("x1*x2*x4", 4));
    EXPECT_EQ(b.u, mono("x1*x2", 4));
    EXPECT_EQ(b.v, mono("x4", 4));
    EXPECT_THROW(standard_decomposition(I, t, mono("x2*x4", 6)), PreconditionError);
}

TEST(StandardDecomposition, UniqueOnRandomIdeals)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const auto r = oracle::random_strongly_stable(rng, {});
        const MonomialIdeal I = oracle::to_ideal(r);
        const SpreadVector t(r.t);
        for (int l = 1; l <= t.d(); ++l)
            for (const auto& e : oracle::spread_monomials(r.n, l, r.t)) {
                if (!oracle::in_ideal(r.generators, e))
                    continue;
                const Monomial w = oracle::from_exp(e);
                const auto sd = standard_decomposition(I, t, w);
                // count all splittings w = u v with u in G(I), max(u) <= min(v)
                int splittings = 0;
                for (const auto& g : I.generators())
                    if (divides(g, w) && g.max_index() <= (w / g).min_index())
                        ++splittings;
                ASSERT_EQ(splittings, 1) << to_string(w) << " in " << to_string(I);
                ASSERT_EQ(sd.u * sd.v, w);
                ASSERT_TRUE(I.is_generator(sd.u));
                ASSERT_LE(sd.u.max_index(), sd.v.min_index());
            }
    }
}

TEST(DecompositionFunction, Examples)
{
    const MonomialIdeal I = fixture::three_generator();
    const SpreadVector t = fixture::three_generator_t();
    EXPECT_EQ(decomposition_function(I, t, mono("x1*x2*x3", 4)), mono("x1*x2", 4));
    EXPECT_EQ(decomposition_function(I, t, mono("x1*x2*x4^2", 4)), mono("x1*x2", 4));
    EXPECT_EQ(decomposition_function(I, t, mono("x1*x3*x4^2", 4)), mono("x1*x3", 4));
    for (const auto& g : I.generators())
        EXPECT_EQ(decomposition_function(I, t, g), g);
    EXPECT_THROW(decomposition_function(I, t, mono("x2*x3", 4)), PreconditionError);
    EXPECT_THROW(decomposition_function(fixture::six_variable(), fixture::six_variable_t(), mono("x1", 6)),
                 PreconditionError);
}

TEST(Hilbert, Examples)
{
    const auto zero = hilbert_function(MonomialIdeal::zero(4), 8);
    const auto x1 = hilbert_function(MonomialIdeal(4, monos({"x1"}, 4)), 8);
    for (int q = 0; q <= 8; ++q) {
        EXPECT_EQ(zero[static_cast<std::size_t>(q)], oracle::binomial(q + 3, 3));
        EXPECT_EQ(x1[static_cast<std::size_t>(q)], oracle::binomial(q + 2, 2));
    }
    const auto unit = hilbert_function(MonomialIdeal::unit(3), 4);
    EXPECT_EQ(unit, std::vector<std::uint64_t>(5, 0));
    EXPECT_THROW(hilbert_function(MonomialIdeal::zero(3), -1), PreconditionError);
}

TEST(Hilbert, InvariantUnderUnspreading)
{
    const MonomialIdeal I = fixture::three_generator();
    const MonomialIdeal J = apply_spread_map_ideal(SpreadMap::unspread(fixture::three_generator_t()), I, 4);
    EXPECT_EQ(hilbert_function(I, 10), hilbert_function(J, 10));
    const std::vector<Exp> gens = {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 2}};
    EXPECT_EQ(hilbert_function(I, 10), oracle::hilbert_by_listing(gens, 4, 10));
}

TEST(Hilbert, MatchesListingOnRandomIdeals)
{
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        const auto r = oracle::random_strongly_stable(rng, {});
        ASSERT_EQ(hilbert_function(oracle::to_ideal(r), 7), oracle::hilbert_by_listing(r.generators, r.n, 7));
    }
}
