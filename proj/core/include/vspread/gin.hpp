#ifndef VSPREAD_GIN_HPP
#define VSPREAD_GIN_HPP

#include "vspread/ideal.hpp"
#include "vspread/polynomial.hpp"
#include "vspread/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace vspread {

/// x_j -> sum_k A_{jk} x_k with integer entries in [-bound, bound] and
/// non-zero determinant.
class CoordinateChange {
public:
    CoordinateChange(std::vector<std::vector<long>> matrix, int bound);

    /// Draws matrices from `rng` until one is invertible.
    static CoordinateChange random(int n, int bound, std::mt19937_64& rng);

    int ambient() const noexcept { return static_cast<int>(matrix_.size()); }
    int bound() const noexcept { return bound_; }
    const std::vector<std::vector<long>>& matrix() const noexcept { return matrix_; }
    Integer determinant() const;

    /// The image of a monomial, expanded.
    Polynomial apply(const Monomial& m) const;

private:
    std::vector<std::vector<long>> matrix_;
    int bound_;
};

struct GinOptions {
    std::uint64_t seed = 1;
    int bound = 100;
    /// Extra attempts, each with the bound multiplied by 10, after the two
    /// runs disagree.
    int retries = 3;
};

struct GinResult {
    MonomialIdeal ideal;
    std::uint64_t seed;
    int bound;    ///< bound of the agreeing attempt
    int attempts; ///< 1 when the first pair of runs agreed
};

/// Degrevlex initial ideal after a random change of coordinates,
/// accepted when two independent changes give the same result. Throws
/// GenericityError if no pair agrees within the retries, and if the result
/// is not strongly stable.
GinResult gin(const MonomialIdeal& I, const GinOptions& options = {});

/// in_degrevlex(g(I)) for one fixed change g.
MonomialIdeal initial_ideal_after(const MonomialIdeal& I, const CoordinateChange& g);

/// I^{s,t} = sigma_{0,t}(Gin(I)), in max(n, largest image index) variables.
/// Throws PreconditionError if Gin(I) has a generator of degree > d.
MonomialIdeal shift(const MonomialIdeal& I, const SpreadVector& t, const GinOptions& options = {});

enum class PropertyStatus { holds, violated, not_applicable };
std::string to_string(PropertyStatus s);

struct ShiftReport {
    MonomialIdeal shifted;
    std::optional<MonomialIdeal> shifted_other;
    /// Shift_1 .. Shift_4 at positions 0 .. 3.
    std::array<PropertyStatus, 4> status{PropertyStatus::not_applicable, PropertyStatus::not_applicable,
                                         PropertyStatus::not_applicable, PropertyStatus::not_applicable};
    std::vector<std::string> notes;
    int hilbert_bound = 0;

    bool ok() const;
};

/// Checks Shift_1 (result is t-spread strongly stable), Shift_2 (fixed point
/// when I is t-spread strongly stable), Shift_3 (equal Hilbert functions up
/// to `hilbert_bound`, in the larger of the two ambients; default
/// reg(I^{s,t}) + 3) and, when J is given, Shift_4 (I ⊆ J implies
/// I^{s,t} ⊆ J^{s,t}; I ⊆ J is required).
ShiftReport verify_shift_properties(const MonomialIdeal& I, const std::optional<MonomialIdeal>& J,
                                    const SpreadVector& t, std::optional<int> hilbert_bound = std::nullopt,
                                    const GinOptions& options = {});

} // namespace vspread

#endif
