#ifndef VSPREAD_GROEBNER_HPP
#define VSPREAD_GROEBNER_HPP

#include "vspread/ideal.hpp"
#include "vspread/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace vspread {

struct GroebnerStats {
    std::size_t pairs_considered = 0;
    std::size_t product_criterion = 0;
    std::size_t chain_criterion = 0;
    std::size_t zero_reductions = 0;
};

/// Reduced Groebner basis for degrevlex (x_1 > ... > x_n), monic, sorted by
/// leading monomial descending. Pairs are taken by the normal strategy and
/// pruned by the product and chain criteria. Zero inputs are dropped; an
/// empty result is the zero ideal.
std::vector<Polynomial> buchberger(std::vector<Polynomial> generators, GroebnerStats* stats = nullptr);

/// Full reduction of f modulo g (remainder of the division algorithm).
Polynomial normal_form(Polynomial f, const std::vector<Polynomial>& g);

/// The monomial ideal of leading monomials; `n` is used for the empty basis.
MonomialIdeal initial_ideal(const std::vector<Polynomial>& basis, int n);

} // namespace vspread

#endif
