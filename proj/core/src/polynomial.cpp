#include "vspread/polynomial.hpp"

#include "vspread/errors.hpp"

#include <sstream>

namespace vspread {

int degrevlex_compare(const Term& a, const Term& b) noexcept
{
    if (a.degree != b.degree)
        return a.degree > b.degree ? 1 : -1;
    for (int k = max_polynomial_variables - 1; k >= 0; --k) {
        const auto ea = a.exponents[static_cast<std::size_t>(k)];
        const auto eb = b.exponents[static_cast<std::size_t>(k)];
        if (ea != eb)
            return ea < eb ? 1 : -1;
    }
    return 0;
}

ExponentVector to_exponent_vector(const Monomial& m)
{
    if (m.ambient() > max_polynomial_variables)
        throw PreconditionError("polynomials support at most " + std::to_string(max_polynomial_variables) +
                                " variables");
    ExponentVector e{};
    for (int j : m.indices()) {
        auto& slot = e[static_cast<std::size_t>(j - 1)];
        if (slot == 255)
            throw PreconditionError("exponent too large for a polynomial term");
        ++slot;
    }
    return e;
}

Monomial to_monomial(const ExponentVector& e, int n)
{
    std::vector<int> ex(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        ex[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k)];
    return Monomial::from_exponents(ex);
}

bool exponent_divides(const ExponentVector& a, const ExponentVector& b, int n) noexcept
{
    for (int k = 0; k < n; ++k)
        if (a[static_cast<std::size_t>(k)] > b[static_cast<std::size_t>(k)])
            return false;
    return true;
}

Polynomial::Polynomial(int n) : n_(n)
{
    if (n < 1 || n > max_polynomial_variables)
        throw PreconditionError("polynomial ring size must lie in [1, " + std::to_string(max_polynomial_variables) +
                                "]");
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& c)
{
    Polynomial p(m.ambient());
    if (c != 0)
        p.terms_.push_back({to_exponent_vector(m), m.degree(), c});
    return p;
}

Polynomial Polynomial::linear_form(const std::vector<Rational>& coefficients)
{
    Polynomial p(static_cast<int>(coefficients.size()));
    // x_1 > x_2 > ... in degrevlex among variables
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        if (coefficients[k] == 0)
            continue;
        Term t;
        t.exponents[k] = 1;
        t.degree = 1;
        t.coefficient = coefficients[k];
        p.terms_.push_back(std::move(t));
    }
    return p;
}

const Term& Polynomial::leading_term() const
{
    if (terms_.empty())
        throw PreconditionError("the zero polynomial has no leading term");
    return terms_.front();
}

Monomial Polynomial::leading_monomial() const
{
    return to_monomial(leading_term().exponents, n_);
}

Polynomial& Polynomial::make_monic()
{
    if (terms_.empty())
        return *this;
    const Rational lc = terms_.front().coefficient;
    if (lc != 1)
        for (auto& t : terms_)
            t.coefficient /= lc;
    return *this;
}

void Polynomial::add_scaled_shifted(const Rational& c, const ExponentVector* e, int e_degree, const Polynomial& other)
{
    if (other.n_ != n_)
        throw PreconditionError("polynomials live in different rings");
    if (c == 0 || other.terms_.empty())
        return;
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    auto shifted = [&](const Term& t) {
        Term s;
        s.exponents = t.exponents;
        if (e) {
            for (int k = 0; k < n_; ++k)
                s.exponents[static_cast<std::size_t>(k)] =
                    static_cast<std::uint8_t>(s.exponents[static_cast<std::size_t>(k)] + (*e)[static_cast<std::size_t>(k)]);
        }
        s.degree = t.degree + e_degree;
        s.coefficient = c * t.coefficient;
        return s;
    };
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end()) {
            out.push_back(std::move(*a++));
            continue;
        }
        Term sb = shifted(*b);
        if (a == terms_.end()) {
            out.push_back(std::move(sb));
            ++b;
            continue;
        }
        const int cmp = degrevlex_compare(*a, sb);
        if (cmp > 0) {
            out.push_back(std::move(*a++));
        } else if (cmp < 0) {
            out.push_back(std::move(sb));
            ++b;
        } else {
            a->coefficient += sb.coefficient;
            if (a->coefficient != 0)
                out.push_back(std::move(*a));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    add_scaled_shifted(Rational(1), nullptr, 0, other);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    add_scaled_shifted(Rational(-1), nullptr, 0, other);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0)
        terms_.clear();
    else
        for (auto& t : terms_)
            t.coefficient *= c;
    return *this;
}

void Polynomial::subtract_multiple(const Rational& c, const ExponentVector& e, int e_degree, const Polynomial& other)
{
    add_scaled_shifted(Rational(-c), &e, e_degree, other);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.n_ != b.n_)
        throw PreconditionError("polynomials live in different rings");
    Polynomial out(a.n_);
    for (const auto& t : a.terms_)
        out.add_scaled_shifted(t.coefficient, &t.exponents, t.degree, b);
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].exponents != b.terms_[i].exponents || a.terms_[i].coefficient != b.terms_[i].coefficient)
            return false;
    return true;
}

std::string to_string(const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool negative = t.coefficient < 0;
        const Rational mag = abs(t.coefficient);
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        const Monomial m = to_monomial(t.exponents, p.ambient());
        if (m.is_one())
            os << mag.get_str();
        else if (mag == 1)
            os << to_string(m);
        else
            os << mag.get_str() << "*" << to_string(m);
    }
    return os.str();
}

} // namespace vspread
