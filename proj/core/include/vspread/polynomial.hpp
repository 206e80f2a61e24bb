#ifndef VSPREAD_POLYNOMIAL_HPP
#define VSPREAD_POLYNOMIAL_HPP

#include "vspread/monomial.hpp"
#include "vspread/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace vspread {

/// Polynomials are limited to this many variables.
inline constexpr int max_polynomial_variables = 16;

using ExponentVector = std::array<std::uint8_t, max_polynomial_variables>;

struct Term {
    ExponentVector exponents{};
    int degree = 0;
    Rational coefficient;
};

/// Degrevlex comparison of exponent vectors; positive when a > b.
int degrevlex_compare(const Term& a, const Term& b) noexcept;

/// A polynomial over Q with terms sorted degrevlex-descending and no zero
/// coefficients.
class Polynomial {
public:
    explicit Polynomial(int n);

    static Polynomial from_monomial(const Monomial& m, const Rational& c = 1);
    /// c_1 x_1 + ... + c_n x_n.
    static Polynomial linear_form(const std::vector<Rational>& coefficients);

    int ambient() const noexcept { return n_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    const Term& leading_term() const;
    Monomial leading_monomial() const;

    /// Divides by the leading coefficient.
    Polynomial& make_monic();

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    /// this - c * x^e * other, in place.
    void subtract_multiple(const Rational& c, const ExponentVector& e, int e_degree, const Polynomial& other);

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    void add_scaled_shifted(const Rational& c, const ExponentVector* e, int e_degree, const Polynomial& other);

    int n_;
    std::vector<Term> terms_;
};

ExponentVector to_exponent_vector(const Monomial& m);
Monomial to_monomial(const ExponentVector& e, int n);
bool exponent_divides(const ExponentVector& a, const ExponentVector& b, int n) noexcept;

std::string to_string(const Polynomial& p);

} // namespace vspread

#endif
