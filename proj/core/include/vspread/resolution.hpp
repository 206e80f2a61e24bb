#ifndef VSPREAD_RESOLUTION_HPP
#define VSPREAD_RESOLUTION_HPP

#include "vspread/ideal.hpp"
#include "vspread/koszul.hpp"
#include "vspread/monomial.hpp"
#include "vspread/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace vspread {

/// Sparse matrix over S = K[x_1, ..., x_n], stored by columns. An entry is a
/// polynomial given as monomial -> non-zero coefficient.
class PolynomialMatrix {
public:
    using Entry = std::map<Monomial, Rational>;

    PolynomialMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }

    /// Adds c * m at (r, c); cancelling terms are erased.
    void add(std::size_t r, std::size_t c, const Monomial& m, const Rational& coefficient);
    Entry get(std::size_t r, std::size_t c) const;
    const std::map<std::size_t, Entry>& column(std::size_t c) const { return columns_.at(c); }

    bool is_zero() const noexcept;
    std::size_t nonzero_count() const noexcept;

    friend PolynomialMatrix operator*(const PolynomialMatrix& a, const PolynomialMatrix& b);
    friend bool operator==(const PolynomialMatrix&, const PolynomialMatrix&) = default;

private:
    std::size_t rows_;
    std::vector<std::map<std::size_t, Entry>> columns_;
};

/// "x_3", "-x_4^2", "2x_1 - x_2", "0".
std::string to_display_string(const PolynomialMatrix::Entry& p);

/// f(u; sigma) in F_{|sigma|+1}, or the generator of F_0 = S when
/// `generator` is -1 (then u = 1 and sigma is empty).
struct ResolutionBasisElement {
    Monomial u;
    WedgeIndex sigma;
    int generator;

    int position() const noexcept { return generator < 0 ? 0 : static_cast<int>(sigma.size()) + 1; }
    /// deg(u) + |sigma|.
    int degree() const noexcept { return u.degree() + static_cast<int>(sigma.size()); }
    /// u * x_sigma.
    Monomial multidegree() const;

    friend bool operator==(const ResolutionBasisElement&, const ResolutionBasisElement&) = default;
};

/// 0 <- F_0 <- F_1 <- ... <- F_p <- 0 with p = pd(S/I).
struct Resolution {
    MonomialIdeal ideal;
    SpreadVector t;
    /// bases[i] is the ordered basis of F_i: generator order, then wedge
    /// order (bigger wedge first).
    std::vector<std::vector<ResolutionBasisElement>> bases;
    /// differentials[i - 1] is d_i : F_i -> F_{i-1}; rows index bases[i - 1],
    /// columns index bases[i].
    std::vector<PolynomialMatrix> differentials;

    /// The last position with a non-zero module; -1 when S/I = 0.
    int length() const noexcept { return static_cast<int>(bases.size()) - 1; }
    const PolynomialMatrix& differential(int i) const { return differentials.at(static_cast<std::size_t>(i - 1)); }
    /// Column index of f(u; sigma) at its position, or -1.
    int basis_index(const Monomial& u, const WedgeIndex& sigma) const;
};

/// The minimal free resolution of S/I with
///   d_1 f(u; ∅) = u,
///   d_i f(u; sigma) = Σ_{k ∈ sigma} (-1)^{|{s ∈ sigma : s < k}|}
///                       (-x_k f(u; sigma ∖ k) + v_k f(u_k; sigma ∖ k)),
/// u_k = g(x_k u), v_k = x_k u / u_k, and f(u_k; ·) = 0 when sigma ∖ k is not
/// a valid label for u_k. Requires t = (1,...,1,0,...,0) and I t-spread
/// strongly stable. The unit ideal yields the empty complex.
Resolution build_resolution(const MonomialIdeal& I, const SpreadVector& t);

struct ResolutionReport {
    bool complex_ok = true;     ///< d_{i-1} d_i = 0, and d_1 lands in I
    bool homogeneous_ok = true; ///< every entry matches the labels' multidegrees
    bool minimal_ok = true;     ///< no non-zero constant entries
    bool exact_ok = true;       ///< ranks per multidegree, |a| <= max_degree
    bool ranks_ok = true;       ///< basis counts equal the closed-form Betti numbers
    int max_degree = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept { return complex_ok && homogeneous_ok && minimal_ok && exact_ok && ranks_ok; }
};

/// Verifies R against I. Exactness is decided strand by strand: in
/// multidegree a, F_i has basis {x^a / mdeg(f) * f : mdeg(f) | x^a}, and
/// dim ker (d_i)_a = rank (d_{i+1})_a is required for i >= 1, with
/// coker (d_1)_a of dimension 1 exactly when x^a ∉ I. The cokernel
/// dimensions summed by degree are compared with hilbert_function.
ResolutionReport verify_resolution(const Resolution& R, const MonomialIdeal& I, int max_degree);

/// Basis listing with w1, w2, ... naming the generators, then every d_i as
/// a grid of entries with row and column labels.
std::string format_resolution_ascii(const Resolution& R);
/// "f(w3;{2,3})", "f(w1;∅)", or "1" for the generator of F_0.
std::string basis_label(const Resolution& R, const ResolutionBasisElement& f);

} // namespace vspread

#endif
