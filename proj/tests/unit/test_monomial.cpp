#include "fixtures.hpp"
#include "oracles.hpp"

#include "vspread/errors.hpp"
#include "vspread/monomial.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace vspread;
using fixture::mono;

TEST(Monomial, IndicesAreSortedAndExponentsAgree)
{
    const Monomial u(5, {4, 1, 2, 1});
    EXPECT_EQ(u.indices(), (std::vector<int>{1, 1, 2, 4}));
    EXPECT_EQ(u.exponents(), (std::vector<int>{2, 1, 0, 1, 0}));
    EXPECT_EQ(u.support(), (std::vector<int>{1, 2, 4}));
    EXPECT_EQ(u.degree(), 4);
    EXPECT_EQ(u.max_index(), 4);
    EXPECT_EQ(u.min_index(), 1);
    EXPECT_EQ(Monomial::from_exponents(u.exponents()), u);
}

TEST(Monomial, UnitHasAmbientAsMaxAndMin)
{
    const Monomial one(7);
    EXPECT_TRUE(one.is_one());
    EXPECT_EQ(one.max_index(), 7);
    EXPECT_EQ(one.min_index(), 7);
    EXPECT_EQ(to_string(one), "1");
}

TEST(Monomial, RejectsBadIndicesAndMixedRings)
{
    EXPECT_THROW(Monomial(3, {4}), PreconditionError);
    EXPECT_THROW(Monomial(3, {0}), PreconditionError);
    EXPECT_THROW(Monomial(0), PreconditionError);
    EXPECT_THROW(Monomial(3, {1}) * Monomial(4, {1}), PreconditionError);
    EXPECT_THROW(Monomial(3, {1}).without(2), PreconditionError);
    EXPECT_THROW(Monomial(3).without_max(), PreconditionError);
    EXPECT_THROW(Monomial(3, {1, 3}).with_ambient(2), PreconditionError);
}

TEST(Monomial, ProductQuotientLcm)
{
    const Monomial a = mono("x1*x2^2", 4);
    const Monomial b = mono("x2*x4", 4);
    EXPECT_EQ(a * b, mono("x1*x2^3*x4", 4));
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(lcm(a, b), mono("x1*x2^2*x4", 4));
    EXPECT_THROW(a / b, PreconditionError);
    EXPECT_EQ(a.without_max(), mono("x1*x2", 4));
    EXPECT_EQ(a.times(3), mono("x1*x2^2*x3", 4));
}

TEST(Monomial, TSpreadExamples)
{
    const Monomial u = mono("x1^3*x2*x4", 4);
    EXPECT_TRUE(is_t_spread(u, SpreadVector({0, 0, 1, 2})));
    EXPECT_FALSE(is_t_spread(u, SpreadVector({1, 0, 1, 2})));
    EXPECT_TRUE(is_t_spread(Monomial(4), SpreadVector({3, 3})));
    // degree above d is never spread
    EXPECT_FALSE(is_t_spread(mono("x1*x2*x3", 3), SpreadVector({0})));
}

TEST(Monomial, TSpreadMatchesOracleOnAllSmallMonomials)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        std::vector<int> t(1 + rng() % 3);
        for (auto& x : t)
            x = static_cast<int>(rng() % 3);
        const SpreadVector sv(t);
        for (int l = 0; l <= sv.d() + 1; ++l)
            for (const auto& e : oracle::all_monomials(n, l))
                ASSERT_EQ(is_t_spread(oracle::from_exp(e), sv), oracle::is_spread(e, t));
    }
}

TEST(Monomial, SpreadSupportExamples)
{
    EXPECT_EQ(spread_support(mono("x1^2*x2*x4*x6*x8", 8), SpreadVector({0, 0, 1, 2, 1})),
              (std::vector<int>{2, 4, 5, 6}));
    EXPECT_EQ(spread_support(mono("x2*x3*x4*x6", 6), SpreadVector({1, 0, 2})), (std::vector<int>{2, 4, 5}));
    EXPECT_TRUE(spread_support(mono("x1*x3^2", 4), SpreadVector::zero(3)).empty());
    EXPECT_THROW(spread_support(mono("x1*x2", 3), SpreadVector({2})), PreconditionError);
}

TEST(Monomial, FreeIndicesComplementSupportBelowMax)
{
    const Monomial u = mono("x2*x3*x4*x6", 6);
    EXPECT_EQ(free_indices(u, SpreadVector({1, 0, 2})), (std::vector<int>{1, 3}));
    EXPECT_EQ(free_indices(mono("x1", 6), SpreadVector({1})), std::vector<int>{});
}

TEST(Monomial, SuccessorIndexExamples)
{
    const Monomial u = mono("x1^2*x2*x4*x6*x8", 8);
    EXPECT_EQ(successor_index(u, 1), 2);
    EXPECT_EQ(successor_index(u, 7), 8);
    EXPECT_EQ(successor_index(u, 4), 6);
    EXPECT_EQ(successor_index(mono("x1*x5", 5), 3), 5);
    EXPECT_THROW(successor_index(u, 8), PreconditionError);
    EXPECT_THROW(successor_index(u, 0), PreconditionError);
}

TEST(Monomial, OrderExamples)
{
    EXPECT_EQ(compare(mono("x1*x2", 3), mono("x1*x3", 3), MonomialOrder::plex), std::strong_ordering::greater);
    EXPECT_EQ(compare(mono("x1*x3^2", 4), mono("x2*x3*x4", 4), MonomialOrder::lex), std::strong_ordering::greater);
    // lex is graded, plex is not
    EXPECT_EQ(compare(mono("x1", 3), mono("x2^3", 3), MonomialOrder::plex), std::strong_ordering::greater);
    EXPECT_EQ(compare(mono("x1", 3), mono("x2^3", 3), MonomialOrder::lex), std::strong_ordering::less);
    // degrevlex separates from lex at degree 3 in 3 variables
    EXPECT_EQ(compare(mono("x1*x3^2", 3), mono("x2^3", 3), MonomialOrder::lex), std::strong_ordering::greater);
    EXPECT_EQ(compare(mono("x1*x3^2", 3), mono("x2^3", 3), MonomialOrder::degrevlex), std::strong_ordering::less);
    for (auto order : {MonomialOrder::lex, MonomialOrder::plex, MonomialOrder::degrevlex})
        EXPECT_EQ(compare(mono("x2*x3", 3), mono("x2*x3", 3), order), std::strong_ordering::equal);
}

TEST(Monomial, OrdersAreTotalAndMultiplicative)
{
    const auto pool2 = oracle::all_monomials(3, 2);
    const auto pool3 = oracle::all_monomials(3, 3);
    std::vector<Monomial> all;
    for (const auto* pool : {&pool2, &pool3})
        for (const auto& e : *pool)
            all.push_back(oracle::from_exp(e));
    for (auto order : {MonomialOrder::lex, MonomialOrder::plex, MonomialOrder::degrevlex}) {
        for (const auto& a : all)
            for (const auto& b : all) {
                const auto ab = compare(a, b, order);
                EXPECT_EQ(ab == std::strong_ordering::equal, a == b);
                EXPECT_EQ(compare(b, a, order), 0 <=> ab);
                const Monomial w = mono("x2", 3);
                EXPECT_EQ(compare(a * w, b * w, order), ab);
            }
    }
}

TEST(Monomial, DivisibilityExamples)
{
    EXPECT_TRUE(divides(mono("x1*x2", 4), mono("x1*x2*x4^2", 4)));
    EXPECT_FALSE(divides(mono("x1*x4^2", 4), mono("x1*x2*x4", 4)));
    EXPECT_TRUE(divides(Monomial(4), mono("x3", 4)));
    EXPECT_FALSE(divides(mono("x3", 4), Monomial(4)));
}

TEST(Monomial, ParseAndPrint)
{
    const Monomial u = mono("x2 * x3^2*x2", 5);
    EXPECT_EQ(u, Monomial(5, {2, 2, 3, 3}));
    EXPECT_EQ(parse_monomial(to_string(u), 5), u);
    EXPECT_EQ(to_display_string(mono("x2*x3^2", 3)), "x_2x_3^2");
    EXPECT_EQ(parse_monomial("1", 3), Monomial(3));
}

TEST(Monomial, ParseErrorsNameTheToken)
{
    try {
        parse_monomial("x0*y2", 3);
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.token(), "x0");
        EXPECT_EQ(e.position(), 0u);
    }
    try {
        parse_monomial("x1*y2", 3);
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.token(), "y2");
        EXPECT_EQ(e.position(), 3u);
    }
    EXPECT_THROW(parse_monomial("x4", 3), ParseError);
    EXPECT_THROW(parse_monomial("x1^0", 3), ParseError);
    EXPECT_THROW(parse_monomial("", 3), ParseError);
    EXPECT_THROW(parse_monomial("x1**x2", 3), ParseError);
}

TEST(SpreadVector, BasicsAndValidation)
{
    const SpreadVector t = SpreadVector::parse("1, 0,2");
    EXPECT_EQ(t.entries(), (std::vector<int>{1, 0, 2}));
    EXPECT_EQ(t.d(), 4);
    EXPECT_EQ(t[3], 2);
    EXPECT_EQ(t.prefix_sum(0), 0);
    EXPECT_EQ(t.prefix_sum(3), 3);
    EXPECT_THROW(SpreadVector({}), PreconditionError);
    EXPECT_THROW(SpreadVector({1, -1}), PreconditionError);
    EXPECT_THROW(SpreadVector::parse("1,a"), ParseError);
    EXPECT_EQ(SpreadVector::zero(3).entries(), (std::vector<int>{0, 0}));
}

TEST(SpreadVector, AdmissibleShape)
{
    EXPECT_TRUE(SpreadVector({1, 0}).is_admissible_shape());
    EXPECT_TRUE(SpreadVector({1, 1, 0, 0}).is_admissible_shape());
    EXPECT_TRUE(SpreadVector({0, 0}).is_admissible_shape());
    EXPECT_TRUE(SpreadVector({1}).is_admissible_shape());
    EXPECT_FALSE(SpreadVector({0, 1}).is_admissible_shape());
    EXPECT_FALSE(SpreadVector({1, 0, 2}).is_admissible_shape());
}
