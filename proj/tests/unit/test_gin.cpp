#include "fixtures.hpp"
#include "oracles.hpp"

#include "vspread/errors.hpp"
#include "vspread/gin.hpp"
#include "vspread/spread_ops.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace vspread;
using fixture::mono;
using fixture::monos;

TEST(CoordinateChange, DeterminantAndApply)
{
    const CoordinateChange g({{1, 2}, {3, 4}}, 4);
    EXPECT_EQ(g.determinant(), Integer(-2));
    // x1 -> x1 + 2 x2, x2 -> 3 x1 + 4 x2
    EXPECT_EQ(to_string(g.apply(mono("x1*x2", 2))), "3*x1^2 + 10*x1*x2 + 8*x2^2");
    EXPECT_EQ(to_string(g.apply(Monomial(2))), "1");
    EXPECT_THROW(CoordinateChange({{1, 2}, {2, 4}}, 4), PreconditionError);
    EXPECT_THROW(CoordinateChange({{1, 2}}, 4), PreconditionError);
}

TEST(CoordinateChange, RandomIsInvertibleAndBounded)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const CoordinateChange g = CoordinateChange::random(3, 1, rng);
        EXPECT_NE(g.determinant(), 0);
        for (const auto& row : g.matrix())
            for (long a : row)
                EXPECT_LE(std::abs(a), 1);
    }
}

TEST(Gin, ThreeGeneratorFixture)
{
    const GinResult r = gin(fixture::three_generator());
    EXPECT_EQ(r.ideal, MonomialIdeal(4, monos({"x1^2", "x1*x2", "x1*x3^2"}, 4)));
    EXPECT_EQ(r.ideal, apply_spread_map_ideal(SpreadMap::unspread(fixture::three_generator_t()),
                                              fixture::three_generator(), 4));
    EXPECT_EQ(r.attempts, 1);
    EXPECT_EQ(r.bound, 100);
}

TEST(Gin, PurePowerAndZeroIdeal)
{
    for (int a = 1; a <= 4; ++a) {
        const MonomialIdeal p(3, {Monomial(3, std::vector<int>(static_cast<std::size_t>(a), 1))});
        EXPECT_EQ(gin(p).ideal, p);
    }
    EXPECT_TRUE(gin(MonomialIdeal::zero(3)).ideal.is_zero());
    EXPECT_TRUE(gin(MonomialIdeal::unit(3)).ideal.is_unit());
}

TEST(Gin, StronglyStableIdealsAreFixedAndResultsIdempotent)
{
    std::mt19937_64 rng(17);
    oracle::RandomIdealShape shape;
    shape.max_n = 4;
    shape.max_d = 3;
    shape.max_generators = 10;
    for (int trial = 0; trial < 12; ++trial) {
        const auto r = oracle::random_strongly_stable(rng, shape);
        const MonomialIdeal I = oracle::to_ideal(r);
        // the unspread image is 0-spread strongly stable
        const MonomialIdeal J = apply_spread_map_ideal(SpreadMap::unspread(SpreadVector(r.t)), I, r.n);
        ASSERT_TRUE(is_t_strongly_stable(J, SpreadVector::zero(static_cast<int>(r.t.size()) + 1)));
        const MonomialIdeal G = gin(J).ideal;
        ASSERT_EQ(G, J) << to_string(J);
        ASSERT_EQ(gin(G).ideal, G);
        ASSERT_EQ(gin(I).ideal, J) << to_string(I);
    }
}

TEST(Gin, NonStableInputKeepsTheHilbertFunction)
{
    for (const auto& texts : std::vector<std::vector<std::string>>{
             {"x2"}, {"x3^2"}, {"x2*x3"}, {"x1*x3", "x2^2"}, {"x2^2", "x3^3"}}) {
        const MonomialIdeal I(3, monos(texts, 3));
        const MonomialIdeal G = gin(I).ideal;
        EXPECT_TRUE(is_t_strongly_stable(G, SpreadVector::zero(4))) << to_string(G);
        EXPECT_EQ(hilbert_function(G, 8), hilbert_function(I, 8)) << to_string(I);
        EXPECT_EQ(gin(G).ideal, G);
    }
    // (x2) moves to (x1), the generic linear form
    EXPECT_EQ(gin(MonomialIdeal(3, {mono("x2", 3)})).ideal, MonomialIdeal(3, {mono("x1", 3)}));
}

TEST(Gin, SeedDoesNotChangeTheResult)
{
    const MonomialIdeal I(3, monos({"x1*x3", "x2^2"}, 3));
    const MonomialIdeal a = gin(I, {1, 100, 3}).ideal;
    const MonomialIdeal b = gin(I, {99, 100, 3}).ideal;
    EXPECT_EQ(a, b);
    EXPECT_THROW(gin(I, {1, 0, 3}), PreconditionError);
}

TEST(Shift, FixtureAndSmallExamples)
{
    EXPECT_EQ(shift(fixture::six_variable(), fixture::six_variable_t()), fixture::six_variable());
    EXPECT_EQ(shift(fixture::three_generator(), fixture::three_generator_t()), fixture::three_generator());
    const MonomialIdeal x1x2(3, {mono("x1*x2", 3)});
    EXPECT_EQ(shift(x1x2, SpreadVector({1})), x1x2);
    // Gin has a generator of degree 3 > d = 2
    EXPECT_THROW(shift(MonomialIdeal(3, {mono("x2^3", 3)}), SpreadVector({1})), PreconditionError);
}

TEST(Shift, PropertiesOnFixtures)
{
    const ShiftReport six = verify_shift_properties(fixture::six_variable(), std::nullopt, fixture::six_variable_t());
    EXPECT_TRUE(six.ok());
    EXPECT_EQ(six.status[0], PropertyStatus::holds);
    EXPECT_EQ(six.status[1], PropertyStatus::holds);
    EXPECT_EQ(six.status[2], PropertyStatus::holds);
    EXPECT_EQ(six.status[3], PropertyStatus::not_applicable);

    const ShiftReport three =
        verify_shift_properties(fixture::three_generator(), std::nullopt, fixture::three_generator_t(), 10);
    EXPECT_TRUE(three.ok());
    EXPECT_EQ(three.hilbert_bound, 10);

    const MonomialIdeal I(3, {mono("x1*x2", 3)});
    const MonomialIdeal J(3, {mono("x1", 3)});
    const ShiftReport mono4 = verify_shift_properties(I, J, SpreadVector({1}));
    EXPECT_TRUE(mono4.ok());
    EXPECT_EQ(mono4.status[3], PropertyStatus::holds);
    EXPECT_THROW(verify_shift_properties(J, I, SpreadVector({1})), PreconditionError);
    EXPECT_EQ(to_string(PropertyStatus::not_applicable), "n/a");
}

TEST(Shift, RandomMonomialIdealsBecomeStronglyStable)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3;
        std::vector<Monomial> gens;
        for (int k = 0; k < 2; ++k) {
            const auto pool = oracle::all_monomials(n, 2);
            gens.push_back(oracle::from_exp(pool[rng() % pool.size()]));
        }
        const MonomialIdeal I(n, gens);
        // two quadrics in three variables: Gin is generated in degree <= 3 < d
        const SpreadVector t({static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), 0});
        const ShiftReport rep = verify_shift_properties(I, std::nullopt, t);
        EXPECT_TRUE(rep.ok()) << to_string(I);
        EXPECT_TRUE(is_t_strongly_stable(rep.shifted, t));
        EXPECT_NE(rep.status[1], PropertyStatus::violated);
    }
}
