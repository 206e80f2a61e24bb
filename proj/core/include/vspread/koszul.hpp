#ifndef VSPREAD_KOSZUL_HPP
#define VSPREAD_KOSZUL_HPP

#include "vspread/ideal.hpp"
#include "vspread/monomial.hpp"
#include "vspread/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vspread {

/// A strictly increasing index set tau; e_tau = e_{tau_1} ∧ ... ∧ e_{tau_k}.
/// std::vector's `<` puts the bigger wedge first: tau > tau' when, at the
/// first difference, tau has the smaller index.
using WedgeIndex = std::vector<int>;

/// An element of K_i(x_1, ..., x_n; S/I): a rational combination of
/// ε(m) e_tau with m ∉ I and |tau| = i. Terms whose residue lies in I and
/// wedges with a repeated index vanish when inserted. The chain keeps a
/// pointer to its ideal, which must outlive it.
class KoszulChain {
public:
    using TermMap = std::map<WedgeIndex, std::map<Monomial, Rational>>;

    KoszulChain(const MonomialIdeal& I, int homological_degree);

    /// Adds c ε(m) e_{w_1} ∧ ... ∧ e_{w_k} for the written (unsorted) order
    /// of `wedge`; the sorting sign is folded into c.
    void add_term(const Monomial& m, const std::vector<int>& wedge, const Rational& c = 1);

    const TermMap& terms() const noexcept { return terms_; }
    const MonomialIdeal& ideal() const noexcept { return *ideal_; }
    int homological_degree() const noexcept { return degree_; }
    /// deg(m) + |tau|, common to all terms; empty for the zero chain.
    std::optional<int> internal_degree() const;

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept;
    Rational coefficient(const Monomial& m, const WedgeIndex& tau) const;

    KoszulChain& operator+=(const KoszulChain& other);
    KoszulChain& operator-=(const KoszulChain& other);
    KoszulChain& operator*=(const Rational& c);
    friend KoszulChain operator+(KoszulChain a, const KoszulChain& b) { return a += b; }
    friend KoszulChain operator-(KoszulChain a, const KoszulChain& b) { return a -= b; }
    friend KoszulChain operator-(KoszulChain a) { return a *= Rational(-1); }
    friend KoszulChain operator*(const Rational& c, KoszulChain a) { return a *= c; }

    friend bool operator==(const KoszulChain& a, const KoszulChain& b)
    {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    void add_canonical(const Monomial& m, const WedgeIndex& tau, const Rational& c);

    const MonomialIdeal* ideal_;
    int degree_;
    TermMap terms_;
};

/// ∂(ε(m) e_tau) = Σ_l (-1)^{l+1} ε(x_{tau_l} m) e_{tau ∖ tau_l}, as a map of
/// K(x_{j_start}, ..., x_n; S/I); wedge indices below j_start are rejected.
KoszulChain koszul_differential(const KoszulChain& a, int j_start = 1);

/// Exterior product over S/I; both chains must belong to the same ideal.
KoszulChain wedge(const KoszulChain& a, const KoszulChain& b);
/// a ∧ e_{w_1} ∧ ... ∧ e_{w_k}.
KoszulChain wedge(const KoszulChain& a, const std::vector<int>& right);
/// e_{w_1} ∧ ... ∧ e_{w_k} ∧ a.
KoszulChain wedge(const std::vector<int>& left, const KoszulChain& a);
KoszulChain multiply(const KoszulChain& a, const Monomial& m);

/// A homology basis label (u, sigma).
struct CycleLabel {
    Monomial u;
    WedgeIndex sigma;

    friend bool operator==(const CycleLabel&, const CycleLabel&) = default;
};

/// Parity of the coefficient u(sigma; F), threaded with the monomial u that
/// defines j_r = k_r^{(u)}. Requires F ⊆ sigma ⊆ [max(u) - 1].
int sign_coefficient(const Monomial& u, const WedgeIndex& sigma, const WedgeIndex& F);

/// e(u; sigma) summed term by term over F ⊆ sigma. Requires u ∈ G(I) and
/// sigma ⊆ [max(u) - 1] ∖ supp_t(u).
KoszulChain build_cycle_e(const MonomialIdeal& I, const SpreadVector& t, const Monomial& u, const WedgeIndex& sigma);

/// e(u; sigma) through the two-case recurrence on max(sigma), grounded at
/// sigma = ∅. Same preconditions as build_cycle_e.
KoszulChain build_cycle_recursive(const MonomialIdeal& I, const SpreadVector& t, const Monomial& u,
                                  const WedgeIndex& sigma);

/// z(u; sigma) = ε(u') e_sigma ∧ e_{max(u)}; t must be (1,...,1,0,...,0).
KoszulChain build_cycle_z(const MonomialIdeal& I, const SpreadVector& t, const Monomial& u, const WedgeIndex& sigma);

/// e(u; sigma) = e_{k_1} ∧ e(u; sigma ∖ k_1) + r(u; sigma), where r collects
/// the terms with k_1 ∈ F.
struct RemainderSplit {
    KoszulChain head;
    KoszulChain rest;
};
RemainderSplit remainder_decomposition(const MonomialIdeal& I, const SpreadVector& t, const Monomial& u,
                                       const WedgeIndex& sigma);

/// All (u, sigma) with u ∈ G(I), sigma ⊆ [max(u) - 1] ∖ supp_t(u), |sigma| = i - 1,
/// in generator order and then wedge order. I must be t-spread strongly stable.
std::vector<CycleLabel> homology_basis_labels(const MonomialIdeal& I, const SpreadVector& t, int i);

/// "ε(x_2x_4^2) e_3∧e_6 − ε(x_2x_3x_4) e_4∧e_6"; "0" for the zero chain.
std::string to_display_string(const KoszulChain& a);
std::string to_display_string(const CycleLabel& label);

} // namespace vspread

#endif
