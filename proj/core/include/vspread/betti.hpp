#ifndef VSPREAD_BETTI_HPP
#define VSPREAD_BETTI_HPP

#include "vspread/ideal.hpp"
#include "vspread/koszul.hpp"
#include "vspread/linalg.hpp"
#include "vspread/monomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vspread {

enum class BettiModule { ideal, quotient };

/// Graded Betti numbers beta_{i,j} of either I or S/I. Only non-zero
/// entries are stored.
class BettiTable {
public:
    using Entries = std::map<std::pair<int, int>, std::uint64_t>;

    explicit BettiTable(BettiModule module) : module_(module) {}
    BettiTable(BettiModule module, Entries entries);

    BettiModule module() const noexcept { return module_; }
    const Entries& entries() const noexcept { return entries_; }
    std::uint64_t get(int i, int j) const;
    void add(int i, int j, std::uint64_t count);

    /// beta_{i+1,j}(S/I) = beta_{i,j}(I), plus beta_{0,0}(S/I) = 1 unless I is
    /// the unit ideal.
    BettiTable to_quotient() const;
    BettiTable to_ideal() const;

    /// beta_0, beta_1, ... up to the last non-zero column.
    std::vector<std::uint64_t> totals() const;
    /// max { i : beta_i != 0 }; empty for the zero table.
    std::optional<int> projective_dimension() const;
    /// max { j - i : beta_{i,j} != 0 }; empty for the zero table.
    std::optional<int> regularity() const;

    friend bool operator==(const BettiTable&, const BettiTable&) = default;

private:
    BettiModule module_;
    Entries entries_;
};

/// Rows labelled j - i, a "total:" row, "-" for zero, e.g.
///
///            0 1 2 3
///     total: 1 4 5 2
///         0: 1 1 - -
std::string format_ascii(const BettiTable& table);

/// beta_{i,i+j}(I) = sum over u in G(I)_j of binom(max(u) - 1 - (t_1 + ... + t_{j-1}), i).
/// I must be t-spread strongly stable.
BettiTable betti_table_formula(const MonomialIdeal& I, const SpreadVector& t);

struct PoincareData {
    /// Coefficient i is the total Betti number beta_i(I).
    std::vector<std::uint64_t> series;
    std::optional<int> pd;
    std::optional<int> reg;
};
PoincareData poincare_pd_reg(const MonomialIdeal& I, const SpreadVector& t);

/// Default truncation for the oracle: reg(I) + pd(I) + 1 from the closed
/// form, which covers every non-zero Betti degree of S/I.
int default_oracle_degree(const MonomialIdeal& I, const SpreadVector& t);

/// dim_K H_i(x; S/I)_q for all i and q <= q_max, by exact ranks of the
/// Koszul differentials on S/I. Works for any monomial ideal. The graded
/// pieces are split into their multidegree strands, on which the
/// differential acts block-diagonally. Only non-zero dimensions are kept.
std::map<std::pair<int, int>, std::uint64_t> oracle_homology_dimension(const MonomialIdeal& I, int q_max);

/// The oracle's dimensions as a table of S/I.
BettiTable oracle_betti_table(const MonomialIdeal& I, int q_max);

struct HomologyBasisReport {
    bool ok = true;
    int i = 0;
    int degree = 0;
    std::size_t cycles = 0;          ///< labels e(u;sigma) of this bidegree
    std::size_t non_cycles = 0;      ///< labels whose boundary is not zero
    std::size_t kernel_dimension = 0;
    std::size_t boundary_rank = 0;
    std::size_t combined_rank = 0;   ///< rank of [boundaries | cycles]
    std::string message;
};

/// Checks that the classes of e(u;sigma), |sigma| = i - 1, of internal degree
/// `degree` form a basis of H_i(x; S/I)_degree: each is a cycle, they are
/// independent modulo boundaries, and their count is dim ker - rank im.
HomologyBasisReport verify_homology_basis(const MonomialIdeal& I, const SpreadVector& t, int i, int degree);

/// The multidegree-a strand of K(x; S/I): basis[i] holds the wedges
/// tau ⊆ supp(a), |tau| = i, with x^{a - 1_tau} ∉ I, in wedge order.
struct KoszulStrand {
    std::vector<int> multidegree;
    std::vector<std::vector<WedgeIndex>> basis; ///< basis[i] spans K_i in this strand
};
KoszulStrand koszul_strand(const MonomialIdeal& I, const std::vector<int>& multidegree);
/// Matrix of ∂_i: K_i -> K_{i-1} on the strand.
RationalMatrix strand_differential(const MonomialIdeal& I, const KoszulStrand& s, int i);

} // namespace vspread

#endif
