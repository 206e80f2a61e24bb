#ifndef VSPREAD_TESTS_FIXTURES_HPP
#define VSPREAD_TESTS_FIXTURES_HPP

#include "vspread/ideal.hpp"
#include "vspread/monomial.hpp"

#include <string>
#include <vector>

namespace fixture {

inline vspread::Monomial mono(const std::string& text, int n)
{
    return vspread::parse_monomial(text, n);
}

inline std::vector<vspread::Monomial> monos(const std::vector<std::string>& texts, int n)
{
    std::vector<vspread::Monomial> out;
    for (const auto& s : texts)
        out.push_back(mono(s, n));
    return out;
}

/// t = (1,0,2): generators x1, x2x3^2, x2x3x4x6, x2x4^2x6 in six variables.
inline vspread::SpreadVector six_variable_t()
{
    return vspread::SpreadVector({1, 0, 2});
}

inline vspread::MonomialIdeal six_variable()
{
    return vspread::MonomialIdeal(6, monos({"x1", "x2*x3^2", "x2*x3*x4*x6", "x2*x4^2*x6"}, 6), six_variable_t());
}

/// t = (1,0): generators x1x2, x1x3, x1x4^2.
inline vspread::SpreadVector three_generator_t()
{
    return vspread::SpreadVector({1, 0});
}

inline vspread::MonomialIdeal three_generator(int n = 4)
{
    return vspread::MonomialIdeal(n, monos({"x1*x2", "x1*x3", "x1*x4^2"}, n), three_generator_t());
}

} // namespace fixture

#endif
