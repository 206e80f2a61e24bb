#ifndef VSPREAD_MONOMIAL_HPP
#define VSPREAD_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vspread {

/// A monomial x_{j_1} x_{j_2} ... x_{j_l} of K[x_1, ..., x_n], stored as the
/// weakly increasing sequence of its variable indices (1-based). The empty
/// sequence is the monomial 1. The ambient size n is part of the value:
/// binary operations reject operands from different rings.
class Monomial {
public:
    /// The unit monomial of K[x_1, ..., x_n].
    explicit Monomial(int n);

    /// Product of the given variables; the indices are sorted, so any order
    /// of the factors is accepted. Every index must lie in [1, n].
    Monomial(int n, std::vector<int> indices);
    Monomial(int n, std::initializer_list<int> indices)
        : Monomial(n, std::vector<int>(indices)) {}

    /// Builds x_1^{e_1} ... x_n^{e_n}; `exponents.size()` is the ambient size.
    static Monomial from_exponents(std::span<const int> exponents);

    static Monomial variable(int n, int k) { return Monomial(n, {k}); }

    int ambient() const noexcept { return n_; }
    int degree() const noexcept { return static_cast<int>(indices_.size()); }
    bool is_one() const noexcept { return indices_.empty(); }

    /// j_1 <= ... <= j_l.
    const std::vector<int>& indices() const noexcept { return indices_; }
    std::vector<int> exponents() const;
    int exponent(int k) const;

    /// supp(u) as a strictly increasing list of indices.
    std::vector<int> support() const;

    /// max(u) and min(u); both are n for the monomial 1.
    int max_index() const noexcept { return indices_.empty() ? n_ : indices_.back(); }
    int min_index() const noexcept { return indices_.empty() ? n_ : indices_.front(); }

    Monomial times(int k) const;
    /// u / x_k; x_k must divide u.
    Monomial without(int k) const;
    /// u' = u / x_{max(u)}; u must not be 1.
    Monomial without_max() const;

    /// The same product, viewed in K[x_1, ..., x_m]. Every index must fit.
    Monomial with_ambient(int m) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Container order: by ambient, then lexicographically on the index
    /// sequences. Not one of the monomial orders; see compare().
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        if (auto c = a.n_ <=> b.n_; c != 0)
            return c;
        return a.indices_ <=> b.indices_;
    }

private:
    Monomial(int n, std::vector<int> sorted_indices, bool /*trusted*/)
        : n_(n), indices_(std::move(sorted_indices)) {}

    int n_;
    std::vector<int> indices_;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial operator/(const Monomial& a, const Monomial& b);
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// Exact quotient a / b; b must divide a.
Monomial operator/(const Monomial& a, const Monomial& b);

/// True iff the exponent vector of u is componentwise <= that of v.
bool divides(const Monomial& u, const Monomial& v);

Monomial lcm(const Monomial& a, const Monomial& b);

/// The vector t = (t_1, ..., t_{d-1}) of non-negative gaps; d >= 2.
class SpreadVector {
public:
    explicit SpreadVector(std::vector<int> entries);

    static SpreadVector zero(int d);
    /// Parses "1,0,2".
    static SpreadVector parse(std::string_view text);

    /// d, one more than the number of entries: the largest degree of a
    /// t-spread monomial.
    int d() const noexcept { return static_cast<int>(entries_.size()) + 1; }
    const std::vector<int>& entries() const noexcept { return entries_; }
    int operator[](int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }

    /// t_1 + ... + t_k, for 0 <= k <= d-1.
    int prefix_sum(int k) const;

    /// t = (1, ..., 1, 0, ..., 0), the shape for which the simple cycles and
    /// the explicit resolution are available.
    bool is_admissible_shape() const;

    friend bool operator==(const SpreadVector&, const SpreadVector&) = default;

private:
    std::vector<int> entries_;
};

enum class MonomialOrder { lex, plex, degrevlex };

/// `std::strong_ordering::greater` means u > v in the given order.
///  - plex: exponent vectors compared left to right;
///  - lex: degree first, then as plex (the order used on the sets M_{n,l,t});
///  - degrevlex: degree first, then the last differing exponent decides,
///    smaller exponent being larger.
std::strong_ordering compare(const Monomial& u, const Monomial& v, MonomialOrder order);

bool is_t_spread(const Monomial& u, const SpreadVector& t);

/// supp_t(u): the union of the intervals [j_i, j_i + t_i - 1], i < deg(u).
/// Returned strictly increasing. u must be t-spread.
std::vector<int> spread_support(const Monomial& u, const SpreadVector& t);

/// [max(u) - 1] \ supp_t(u): the indices a cycle label may use.
std::vector<int> free_indices(const Monomial& u, const SpreadVector& t);

/// k^{(u)} = min { j in supp(u) : j > k }; requires 1 <= k < max(u).
int successor_index(const Monomial& u, int k);

/// Text grammar: factors `x<k>` or `x<k>^<e>` joined by `*`; "1" is the unit.
Monomial parse_monomial(std::string_view text, int n);
std::string to_string(const Monomial& u);
/// Subscript form used in printed chains and witnesses, e.g. "x_2x_3^2".
std::string to_display_string(const Monomial& u);

std::ostream& operator<<(std::ostream& os, const Monomial& u);
std::ostream& operator<<(std::ostream& os, const SpreadVector& t);

struct MonomialHash {
    std::size_t operator()(const Monomial& u) const noexcept;
};

} // namespace vspread

#endif
