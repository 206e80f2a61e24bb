#ifndef VSPREAD_RATIONAL_HPP
#define VSPREAD_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace vspread {

using Integer = mpz_class;
using Rational = mpq_class;

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q)
{
    return q.get_str();
}

inline std::string to_string(const Integer& z)
{
    return z.get_str();
}

} // namespace vspread

#endif
