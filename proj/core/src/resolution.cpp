#include "vspread/resolution.hpp"

#include "vspread/betti.hpp"
#include "vspread/errors.hpp"
#include "vspread/linalg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace vspread {

PolynomialMatrix::PolynomialMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

void PolynomialMatrix::add(std::size_t r, std::size_t c, const Monomial& m, const Rational& coefficient)
{
    if (r >= rows_ || c >= columns_.size())
        throw PreconditionError("matrix index out of range");
    if (coefficient == 0)
        return;
    auto& col = columns_[c];
    auto& entry = col[r];
    Rational& slot = entry[m];
    slot += coefficient;
    if (slot == 0) {
        entry.erase(m);
        if (entry.empty())
            col.erase(r);
    }
}

PolynomialMatrix::Entry PolynomialMatrix::get(std::size_t r, std::size_t c) const
{
    const auto& col = columns_.at(c);
    auto it = col.find(r);
    return it == col.end() ? Entry{} : it->second;
}

bool PolynomialMatrix::is_zero() const noexcept
{
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

std::size_t PolynomialMatrix::nonzero_count() const noexcept
{
    std::size_t k = 0;
    for (const auto& c : columns_)
        k += c.size();
    return k;
}

PolynomialMatrix operator*(const PolynomialMatrix& a, const PolynomialMatrix& b)
{
    if (a.cols() != b.rows())
        throw PreconditionError("matrix shapes do not compose");
    PolynomialMatrix out(a.rows(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c)
        for (const auto& [mid, q] : b.column(c))
            for (const auto& [r, p] : a.column(mid))
                for (const auto& [mp, cp] : p)
                    for (const auto& [mq, cq] : q)
                        out.add(r, c, mp * mq, cp * cq);
    return out;
}

std::string to_display_string(const PolynomialMatrix::Entry& p)
{
    if (p.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // larger monomials first in graded lex
    std::vector<std::pair<Monomial, Rational>> terms(p.begin(), p.end());
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        return compare(x.first, y.first, MonomialOrder::lex) > 0;
    });
    for (const auto& [m, c] : terms) {
        const bool negative = c < 0;
        const Rational mag = abs(c);
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (m.is_one())
            os << mag.get_str();
        else if (mag == 1)
            os << to_display_string(m);
        else
            os << mag.get_str() << to_display_string(m);
    }
    return os.str();
}

Monomial ResolutionBasisElement::multidegree() const
{
    Monomial m = u;
    for (int k : sigma)
        m = m.times(k);
    return m;
}

int Resolution::basis_index(const Monomial& u, const WedgeIndex& sigma) const
{
    const int g = ideal.generator_position(u);
    if (g < 0)
        return -1;
    const std::size_t pos = sigma.size() + 1;
    if (pos >= bases.size())
        return -1;
    const auto& basis = bases[pos];
    // sorted by (generator, wedge)
    auto it = std::lower_bound(basis.begin(), basis.end(), std::make_pair(g, &sigma),
                               [](const ResolutionBasisElement& f, const std::pair<int, const WedgeIndex*>& key) {
                                   if (f.generator != key.first)
                                       return f.generator < key.first;
                                   return f.sigma < *key.second;
                               });
    if (it == basis.end() || it->generator != g || it->sigma != sigma)
        return -1;
    return static_cast<int>(it - basis.begin());
}

Resolution build_resolution(const MonomialIdeal& I, const SpreadVector& t)
{
    if (!t.is_admissible_shape())
        throw PreconditionError("the explicit resolution needs t = (1,...,1,0,...,0); got t = (" + [&] {
            std::ostringstream os;
            os << t;
            return os.str();
        }() + ")");
    if (auto w = find_class_violation(I, t, IdealClass::strongly_stable))
        throw PreconditionError("I is not t-spread strongly stable: " + w->describe());

    const int n = I.ambient();
    Resolution R{I, t, {}, {}};
    if (I.is_unit())
        return R;
    R.bases.push_back({ResolutionBasisElement{Monomial(n), {}, -1}});
    if (I.is_zero())
        return R;

    for (int i = 1;; ++i) {
        const auto labels = homology_basis_labels(I, t, i);
        if (labels.empty())
            break;
        std::vector<ResolutionBasisElement> basis;
        basis.reserve(labels.size());
        for (const auto& l : labels)
            basis.push_back({l.u, l.sigma, I.generator_position(l.u)});
        R.bases.push_back(std::move(basis));
    }

    // d_1: f(u; ∅) -> u
    {
        PolynomialMatrix d1(1, R.bases[1].size());
        for (std::size_t c = 0; c < R.bases[1].size(); ++c)
            d1.add(0, c, R.bases[1][c].u, Rational(1));
        R.differentials.push_back(std::move(d1));
    }

    for (std::size_t i = 2; i < R.bases.size(); ++i) {
        const auto& cols = R.bases[i];
        PolynomialMatrix d(R.bases[i - 1].size(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const auto& f = cols[c];
            for (std::size_t pos = 0; pos < f.sigma.size(); ++pos) {
                const int k = f.sigma[pos];
                // alpha(sigma; k) = pos since sigma is increasing
                const Rational sign(pos % 2 == 0 ? 1 : -1);
                WedgeIndex rest = f.sigma;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));

                const int same = R.basis_index(f.u, rest);
                if (same < 0)
                    throw PreconditionError("internal: f(u; sigma ∖ k) missing from the basis");
                d.add(static_cast<std::size_t>(same), c, Monomial::variable(n, k), -sign);

                const Monomial xu = f.u.times(k);
                const Monomial uk = decomposition_function(I, t, xu);
                const int other = R.basis_index(uk, rest);
                if (other >= 0)
                    d.add(static_cast<std::size_t>(other), c, xu / uk, sign);
            }
        }
        R.differentials.push_back(std::move(d));
    }
    return R;
}

namespace {

void fail(ResolutionReport& rep, bool ResolutionReport::*flag, const std::string& what)
{
    rep.*flag = false;
    rep.failures.push_back(what);
}

// Every exponent vector with total degree <= max_degree, by increasing total.
void for_each_multidegree(int n, int max_degree, const std::function<void(const Monomial&)>& visit)
{
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int q = 0; q <= max_degree; ++q) {
        std::function<void(int, int)> rec = [&](int k, int left) {
            if (k == n - 1) {
                e[static_cast<std::size_t>(k)] = left;
                visit(Monomial::from_exponents(e));
                return;
            }
            for (int v = left; v >= 0; --v) {
                e[static_cast<std::size_t>(k)] = v;
                rec(k + 1, left - v);
            }
        };
        rec(0, q);
    }
}

} // namespace

ResolutionReport verify_resolution(const Resolution& R, const MonomialIdeal& I, int max_degree)
{
    ResolutionReport rep;
    rep.max_degree = max_degree;
    if (max_degree < 0)
        throw PreconditionError("degree bound must be non-negative");
    if (!(R.ideal == I))
        throw PreconditionError("the resolution was built for a different ideal");
    const int n = I.ambient();
    const int len = R.length();
    if (static_cast<int>(R.differentials.size()) != std::max(0, len))
        throw PreconditionError("resolution has " + std::to_string(R.differentials.size()) +
                                " differentials for length " + std::to_string(len));

    std::vector<std::vector<Monomial>> mdeg(R.bases.size());
    for (std::size_t i = 0; i < R.bases.size(); ++i)
        for (const auto& f : R.bases[i])
            mdeg[i].push_back(f.multidegree());

    // (a) complex property; d_0 d_1 = 0 means every entry of d_1 lies in I
    if (len >= 1) {
        const auto& d1 = R.differential(1);
        for (std::size_t c = 0; c < d1.cols(); ++c)
            for (const auto& [r, p] : d1.column(c))
                for (const auto& [m, coeff] : p)
                    if (!contains(I, m))
                        fail(rep, &ResolutionReport::complex_ok,
                             "d_1 column " + std::to_string(c) + " has the entry " + to_display_string(p) +
                                 " outside I");
    }
    for (int i = 2; i <= len; ++i) {
        const PolynomialMatrix dd = R.differential(i - 1) * R.differential(i);
        for (std::size_t c = 0; c < dd.cols(); ++c) {
            if (!dd.column(c).empty()) {
                const auto& [r, p] = *dd.column(c).begin();
                fail(rep, &ResolutionReport::complex_ok,
                     "d_" + std::to_string(i - 1) + " d_" + std::to_string(i) + " is non-zero on column " +
                         std::to_string(c) + " " + basis_label(R, R.bases[static_cast<std::size_t>(i)][c]) +
                         " (row " + std::to_string(r) + ": " + to_display_string(p) + ")");
                break;
            }
        }
    }

    // (b) homogeneity and minimality
    for (int i = 1; i <= len; ++i) {
        const auto& d = R.differential(i);
        const auto& rows = mdeg[static_cast<std::size_t>(i - 1)];
        const auto& cols = mdeg[static_cast<std::size_t>(i)];
        for (std::size_t c = 0; c < d.cols(); ++c) {
            for (const auto& [r, p] : d.column(c)) {
                for (const auto& [m, coeff] : p) {
                    if (m.is_one()) {
                        fail(rep, &ResolutionReport::minimal_ok,
                             "d_" + std::to_string(i) + " has the constant entry " + coeff.get_str() + " at row " +
                                 std::to_string(r) + ", column " + std::to_string(c));
                    }
                    if (!(m * rows[r] == cols[c])) {
                        fail(rep, &ResolutionReport::homogeneous_ok,
                             "d_" + std::to_string(i) + " entry at row " + std::to_string(r) + ", column " +
                                 std::to_string(c) + " has the wrong multidegree");
                    }
                }
            }
        }
    }

    // (c) exactness per multidegree
    std::vector<std::uint64_t> coker(static_cast<std::size_t>(max_degree) + 1, 0);
    if (len >= 0) {
        for_each_multidegree(n, max_degree, [&](const Monomial& a) {
            // strand basis at each position: indices whose multidegree divides a
            std::vector<std::vector<std::size_t>> strand(R.bases.size());
            for (std::size_t i = 0; i < R.bases.size(); ++i)
                for (std::size_t k = 0; k < mdeg[i].size(); ++k)
                    if (divides(mdeg[i][k], a))
                        strand[i].push_back(k);
            // rank of d_i on the strand, i = 1..len; rank[len + 1] = 0
            std::vector<std::size_t> rank(R.bases.size() + 1, 0);
            for (int i = 1; i <= len; ++i) {
                const auto& rs = strand[static_cast<std::size_t>(i - 1)];
                const auto& cs = strand[static_cast<std::size_t>(i)];
                if (rs.empty() || cs.empty())
                    continue;
                std::map<std::size_t, std::size_t> row_of;
                for (std::size_t k = 0; k < rs.size(); ++k)
                    row_of[rs[k]] = k;
                RationalMatrix m(rs.size(), 0);
                const auto& d = R.differential(i);
                for (std::size_t col : cs) {
                    std::map<std::size_t, Rational> entries;
                    for (const auto& [r, p] : d.column(col)) {
                        auto it = row_of.find(r);
                        if (it == row_of.end())
                            continue;
                        Rational s = 0;
                        for (const auto& [mono, coeff] : p)
                            s += coeff;
                        if (s != 0)
                            entries[it->second] = s;
                    }
                    m.append_column(std::move(entries));
                }
                rank[static_cast<std::size_t>(i)] = m.rank();
            }
            const int q = a.degree();
            if (!strand[0].empty()) {
                const std::size_t c0 = strand[0].size() - rank[1];
                coker[static_cast<std::size_t>(q)] += c0;
                const std::size_t expected = contains(I, a) ? 0 : 1;
                if (c0 != expected)
                    fail(rep, &ResolutionReport::exact_ok,
                         "position 0, degree " + std::to_string(q) + ": cokernel of d_1 has dimension " +
                             std::to_string(c0) + " in multidegree " + to_string(a));
            }
            for (int i = 1; i <= len; ++i) {
                const std::size_t dim = strand[static_cast<std::size_t>(i)].size();
                const std::size_t kernel = dim - rank[static_cast<std::size_t>(i)];
                if (kernel != rank[static_cast<std::size_t>(i) + 1])
                    fail(rep, &ResolutionReport::exact_ok,
                         "position " + std::to_string(i) + ", degree " + std::to_string(q) + ": kernel dimension " +
                             std::to_string(kernel) + " but image rank " +
                             std::to_string(rank[static_cast<std::size_t>(i) + 1]) + " in multidegree " +
                             to_string(a));
            }
        });
    }
    if (len >= 0) {
        const auto hf = hilbert_function(I, max_degree);
        for (int q = 0; q <= max_degree; ++q)
            if (hf[static_cast<std::size_t>(q)] != coker[static_cast<std::size_t>(q)]) {
                fail(rep, &ResolutionReport::exact_ok,
                     "position 0, degree " + std::to_string(q) + ": cokernel dimension " +
                         std::to_string(coker[static_cast<std::size_t>(q)]) + " but Hilbert function " +
                         std::to_string(hf[static_cast<std::size_t>(q)]));
                break;
            }
    }

    // (d) graded ranks against the closed form
    const BettiTable expected = betti_table_formula(I, R.t).to_quotient();
    BettiTable actual(BettiModule::quotient);
    for (std::size_t i = 0; i < R.bases.size(); ++i)
        for (const auto& f : R.bases[i])
            actual.add(static_cast<int>(i), f.degree(), 1);
    if (!(actual == expected)) {
        for (const auto& [key, v] : expected.entries())
            if (actual.get(key.first, key.second) != v) {
                fail(rep, &ResolutionReport::ranks_ok,
                     "position " + std::to_string(key.first) + ", degree " + std::to_string(key.second) + ": " +
                         std::to_string(actual.get(key.first, key.second)) + " basis elements, expected " +
                         std::to_string(v));
                break;
            }
        if (rep.ranks_ok)
            fail(rep, &ResolutionReport::ranks_ok, "basis has elements in degrees with zero Betti number");
    }
    return rep;
}

std::string basis_label(const Resolution& R, const ResolutionBasisElement& f)
{
    (void)R;
    if (f.generator < 0)
        return "1";
    std::string s = "f(w" + std::to_string(f.generator + 1) + ";";
    if (f.sigma.empty()) {
        s += "∅";
    } else {
        s += "{";
        for (std::size_t k = 0; k < f.sigma.size(); ++k)
            s += (k ? "," : "") + std::to_string(f.sigma[k]);
        s += "}";
    }
    return s + ")";
}

namespace {

// display width of UTF-8 text
std::size_t width(const std::string& s)
{
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80)
            ++w;
    return w;
}

std::string pad(const std::string& s, std::size_t w)
{
    return s + std::string(w > width(s) ? w - width(s) : 0, ' ');
}

} // namespace

std::string format_resolution_ascii(const Resolution& R)
{
    std::ostringstream os;
    const auto& gens = R.ideal.generators();
    for (std::size_t g = 0; g < gens.size(); ++g)
        os << "w" << g + 1 << " = " << to_display_string(gens[g]) << "\n";
    if (R.bases.empty()) {
        os << "S/I = 0\n";
        return os.str();
    }
    for (std::size_t i = 0; i < R.bases.size(); ++i) {
        os << "F_" << i << ": rank " << R.bases[i].size();
        if (i > 0) {
            os << " [";
            for (std::size_t k = 0; k < R.bases[i].size(); ++k)
                os << (k ? ", " : "") << basis_label(R, R.bases[i][k]);
            os << "]";
        }
        os << "\n";
    }
    for (int i = 1; i <= R.length(); ++i) {
        const auto& d = R.differential(i);
        const auto& rows = R.bases[static_cast<std::size_t>(i - 1)];
        const auto& cols = R.bases[static_cast<std::size_t>(i)];
        std::vector<std::vector<std::string>> cell(rows.size() + 1, std::vector<std::string>(cols.size() + 1));
        for (std::size_t c = 0; c < cols.size(); ++c)
            cell[0][c + 1] = basis_label(R, cols[c]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            cell[r + 1][0] = basis_label(R, rows[r]);
            for (std::size_t c = 0; c < cols.size(); ++c)
                cell[r + 1][c + 1] = to_display_string(d.get(r, c));
        }
        std::vector<std::size_t> w(cols.size() + 1, 0);
        for (const auto& row : cell)
            for (std::size_t c = 0; c < row.size(); ++c)
                w[c] = std::max(w[c], width(row[c]));
        os << "\nd_" << i << ":\n";
        for (const auto& row : cell) {
            std::string line;
            for (std::size_t c = 0; c < row.size(); ++c)
                line += (c ? "  " : "") + pad(row[c], w[c]);
            while (!line.empty() && line.back() == ' ')
                line.pop_back();
            os << line << "\n";
        }
    }
    return os.str();
}

} // namespace vspread
