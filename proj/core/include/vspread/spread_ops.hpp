#ifndef VSPREAD_SPREAD_OPS_HPP
#define VSPREAD_SPREAD_OPS_HPP

#include "vspread/ideal.hpp"
#include "vspread/monomial.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace vspread {

/// The operator sigma_{source,target}: sends the k-th index j_k of a
/// source-spread monomial to j_k - (s_1 + ... + s_{k-1}) + (t_1 + ... + t_{k-1}).
/// Both vectors have the same length d - 1.
struct SpreadMap {
    SpreadVector source;
    SpreadVector target;

    SpreadMap(SpreadVector source, SpreadVector target);

    /// sigma_{0,t}.
    static SpreadMap spread(const SpreadVector& t) { return {SpreadVector::zero(t.d()), t}; }
    /// sigma_{t,0}.
    static SpreadMap unspread(const SpreadVector& t) { return {t, SpreadVector::zero(t.d())}; }

    SpreadMap inverse() const { return {target, source}; }

    /// n - sum(source) + sum(target) over the full vectors.
    int default_ambient(int n) const;
};

/// Applies the map to a source-spread monomial. Without `ambient` the image
/// lives in K[x_1, ..., x_m], m = max(default_ambient(n), largest image index).
/// With an explicit ambient, an image index beyond it is an error.
Monomial apply_spread_map(const SpreadMap& m, const Monomial& u, std::optional<int> ambient = std::nullopt);

/// G(I^sigma) = { sigma(u) : u in G(I) }. The image ambient is chosen as for
/// a single monomial, over all generators at once. Throws if the images fail
/// to be a minimal generating set.
MonomialIdeal apply_spread_map_ideal(const SpreadMap& m, const MonomialIdeal& I,
                                     std::optional<int> ambient = std::nullopt);

/// M_{n,l,t} in lex order, largest first. Requires 0 <= l <= d.
std::vector<Monomial> enumerate_spread_monomials(int n, int degree, const SpreadVector& t);

/// binom(n + l - 1 - (t_1 + ... + t_{l-1}), l); 0 when the top is below l.
std::uint64_t count_spread_monomials(int n, int degree, const SpreadVector& t);

} // namespace vspread

#endif
