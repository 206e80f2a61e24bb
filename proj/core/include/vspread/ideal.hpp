#ifndef VSPREAD_IDEAL_HPP
#define VSPREAD_IDEAL_HPP

#include "vspread/monomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vspread {

/// A monomial ideal of K[x_1, ..., x_n] given by its minimal generating set.
///
/// Generators are kept in canonical order: by degree ascending, then plex
/// descending. The zero ideal has no generators; the unit ideal has G = {1}.
class MonomialIdeal {
public:
    /// Minimalizes `gens`: keeps exactly the divisibility-minimal elements.
    /// If `spread_type` is given, every minimal generator must be t-spread.
    MonomialIdeal(int n, std::vector<Monomial> gens, std::optional<SpreadVector> spread_type = std::nullopt);

    static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }
    static MonomialIdeal unit(int n) { return MonomialIdeal(n, {Monomial(n)}); }

    int ambient() const noexcept { return n_; }
    const std::vector<Monomial>& generators() const noexcept { return gens_; }
    const std::optional<SpreadVector>& spread_type() const noexcept { return spread_type_; }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

    /// G(I)_j.
    std::vector<Monomial> generators_of_degree(int j) const;
    /// Largest generator degree; 0 for the zero ideal.
    int max_generator_degree() const noexcept;
    /// Index of u in generators(), or -1.
    int generator_position(const Monomial& u) const;
    bool is_generator(const Monomial& u) const { return generator_position(u) >= 0; }

    /// The same ideal in K[x_1, ..., x_m]; m must cover every generator.
    MonomialIdeal with_ambient(int m) const;
    MonomialIdeal with_spread_type(std::optional<SpreadVector> t) const;

    /// Same ring and same minimal generators; the spread tag is ignored.
    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b)
    {
        return a.n_ == b.n_ && a.gens_ == b.gens_;
    }

private:
    int n_;
    std::vector<Monomial> gens_;
    std::optional<SpreadVector> spread_type_;
};

MonomialIdeal minimalize(int n, std::vector<Monomial> gens);

bool contains(const MonomialIdeal& I, const Monomial& w);

/// I subset of J, decided on generators.
bool is_contained(const MonomialIdeal& I, const MonomialIdeal& J);

/// Canonical generator order: degree ascending, then plex
/// descending. Returns true if a precedes b.
bool generator_order_less(const Monomial& a, const Monomial& b);

enum class IdealClass { stable, strongly_stable, lex };

std::string to_string(IdealClass c);
/// Accepts "stable", "strongly-stable", "lex".
IdealClass parse_ideal_class(std::string_view text);

/// Why a class check failed.
///
/// Stable / strongly stable: u in I is t-spread, and the exchange
/// w = x_j (u / x_i) is t-spread but not in I.
/// Lex: u in I and w not in I are t-spread of the same degree with w >lex u;
/// i and j are 0.
struct ClassWitness {
    IdealClass cls;
    Monomial u;
    int i;
    int j;
    Monomial w;

    /// "x_1·(x_2/x_2) ∉ I" or "x_1x_3 ∉ I but x_2x_3 ∈ I".
    std::string describe() const;
};

/// Checks whether I lies in the class. Strongly stable uses the generator
/// criterion; stable and lex materialize U_l = I ∩ M_{n,l,t} for l <= d.
/// Throws PreconditionError if a generator is not t-spread. The zero and unit
/// ideals belong to every class.
std::optional<ClassWitness> find_class_violation(const MonomialIdeal& I, const SpreadVector& t, IdealClass cls);

bool is_t_stable(const MonomialIdeal& I, const SpreadVector& t);
bool is_t_strongly_stable(const MonomialIdeal& I, const SpreadVector& t);
bool is_t_lex(const MonomialIdeal& I, const SpreadVector& t);

/// The smallest t-spread strongly stable ideal containing `gens`, computed
/// degreewise as the fixpoint of the exchange moves.
MonomialIdeal strongly_stable_closure(int n, const std::vector<Monomial>& gens, const SpreadVector& t);

/// The unique w = u v with u in G(I), max(u) <= min(v).
struct StandardDecomposition {
    Monomial u;
    Monomial v;
};
StandardDecomposition standard_decomposition(const MonomialIdeal& I, const SpreadVector& t, const Monomial& w);

/// g(w): the plex-largest generator dividing w. Requires t of shape
/// (1,...,1,0,...,0) and w in I.
Monomial decomposition_function(const MonomialIdeal& I, const SpreadVector& t, const Monomial& w);

/// dim_K (S/I)_q for q = 0..max_degree.
std::vector<std::uint64_t> hilbert_function(const MonomialIdeal& I, int max_degree);

std::string to_string(const MonomialIdeal& I);

} // namespace vspread

#endif
