#include "vspread/betti.hpp"

#include "vspread/errors.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

namespace vspread {

BettiTable::BettiTable(BettiModule module, Entries entries) : module_(module)
{
    for (const auto& [key, v] : entries)
        if (v != 0)
            entries_.emplace(key, v);
}

std::uint64_t BettiTable::get(int i, int j) const
{
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t count)
{
    if (i < 0)
        throw PreconditionError("homological index must be non-negative");
    if (count != 0)
        entries_[{i, j}] += count;
}

BettiTable BettiTable::to_quotient() const
{
    if (module_ == BettiModule::quotient)
        return *this;
    BettiTable out(BettiModule::quotient);
    if (get(0, 0) != 0) // only the unit ideal: S/I = 0
        return out;
    out.add(0, 0, 1);
    for (const auto& [key, v] : entries_)
        out.add(key.first + 1, key.second, v);
    return out;
}

BettiTable BettiTable::to_ideal() const
{
    if (module_ == BettiModule::ideal)
        return *this;
    BettiTable out(BettiModule::ideal);
    if (entries_.empty()) // S/I = 0
        out.add(0, 0, 1);
    for (const auto& [key, v] : entries_)
        if (key.first >= 1)
            out.add(key.first - 1, key.second, v);
    return out;
}

std::vector<std::uint64_t> BettiTable::totals() const
{
    std::vector<std::uint64_t> out;
    for (const auto& [key, v] : entries_) {
        if (out.size() <= static_cast<std::size_t>(key.first))
            out.resize(static_cast<std::size_t>(key.first) + 1, 0);
        out[static_cast<std::size_t>(key.first)] += v;
    }
    return out;
}

std::optional<int> BettiTable::projective_dimension() const
{
    std::optional<int> pd;
    for (const auto& [key, v] : entries_)
        pd = std::max(pd.value_or(key.first), key.first);
    return pd;
}

std::optional<int> BettiTable::regularity() const
{
    std::optional<int> reg;
    for (const auto& [key, v] : entries_)
        reg = std::max(reg.value_or(key.second - key.first), key.second - key.first);
    return reg;
}

std::string format_ascii(const BettiTable& table)
{
    const auto totals = table.totals();
    const int cols = static_cast<int>(totals.size());
    int row_lo = 0;
    int row_hi = -1;
    bool first = true;
    for (const auto& [key, v] : table.entries()) {
        const int r = key.second - key.first;
        row_lo = first ? r : std::min(row_lo, r);
        row_hi = first ? r : std::max(row_hi, r);
        first = false;
    }

    std::vector<std::size_t> width(static_cast<std::size_t>(cols), 1);
    for (int c = 0; c < cols; ++c) {
        auto& w = width[static_cast<std::size_t>(c)];
        w = std::max(w, std::to_string(c).size());
        w = std::max(w, std::to_string(totals[static_cast<std::size_t>(c)]).size());
        for (int r = row_lo; r <= row_hi; ++r)
            w = std::max(w, std::to_string(table.get(c, c + r)).size());
    }
    std::size_t label = std::string("total:").size();
    for (int r = row_lo; r <= row_hi; ++r)
        label = std::max(label, std::to_string(r).size() + 1);

    std::ostringstream os;
    auto cell = [&](int c, const std::string& text) {
        os << ' ' << std::setw(static_cast<int>(width[static_cast<std::size_t>(c)])) << text;
    };
    os << std::string(label, ' ');
    for (int c = 0; c < cols; ++c)
        cell(c, std::to_string(c));
    os << '\n' << std::setw(static_cast<int>(label)) << "total:";
    for (int c = 0; c < cols; ++c)
        cell(c, std::to_string(totals[static_cast<std::size_t>(c)]));
    os << '\n';
    for (int r = row_lo; r <= row_hi; ++r) {
        os << std::setw(static_cast<int>(label)) << (std::to_string(r) + ":");
        for (int c = 0; c < cols; ++c) {
            const auto v = table.get(c, c + r);
            cell(c, v ? std::to_string(v) : "-");
        }
        os << '\n';
    }
    return os.str();
}

namespace {

std::uint64_t binomial(long long top, long long k)
{
    if (k < 0 || top < k)
        return 0;
    std::uint64_t r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(top - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

void require_strongly_stable(const MonomialIdeal& I, const SpreadVector& t)
{
    if (auto w = find_class_violation(I, t, IdealClass::strongly_stable))
        throw PreconditionError("ideal is not t-spread strongly stable: " + w->describe());
}

// max(u) - 1 - (t_1 + ... + t_{deg(u)-1})
int free_count(const Monomial& u, const SpreadVector& t)
{
    return u.max_index() - 1 - t.prefix_sum(u.degree() - 1);
}

} // namespace

BettiTable betti_table_formula(const MonomialIdeal& I, const SpreadVector& t)
{
    require_strongly_stable(I, t);
    BettiTable out(BettiModule::ideal);
    if (I.is_unit()) {
        out.add(0, 0, 1);
        return out;
    }
    for (const auto& u : I.generators()) {
        const int e = free_count(u, t);
        for (int i = 0; i <= e; ++i)
            out.add(i, i + u.degree(), binomial(e, i));
    }
    return out;
}

PoincareData poincare_pd_reg(const MonomialIdeal& I, const SpreadVector& t)
{
    require_strongly_stable(I, t);
    PoincareData out;
    if (I.is_zero())
        return out;
    if (I.is_unit()) {
        out.series = {1};
        out.pd = 0;
        out.reg = 0;
        return out;
    }
    for (const auto& u : I.generators()) {
        const int e = free_count(u, t);
        if (out.series.size() < static_cast<std::size_t>(e) + 1)
            out.series.resize(static_cast<std::size_t>(e) + 1, 0);
        for (int i = 0; i <= e; ++i)
            out.series[static_cast<std::size_t>(i)] += binomial(e, i);
        out.pd = std::max(out.pd.value_or(e), e);
        out.reg = std::max(out.reg.value_or(u.degree()), u.degree());
    }
    return out;
}

int default_oracle_degree(const MonomialIdeal& I, const SpreadVector& t)
{
    const auto p = poincare_pd_reg(I, t);
    return p.reg.value_or(0) + p.pd.value_or(0) + 1;
}

KoszulStrand koszul_strand(const MonomialIdeal& I, const std::vector<int>& multidegree)
{
    const int n = I.ambient();
    if (static_cast<int>(multidegree.size()) != n)
        throw PreconditionError("multidegree has the wrong length");
    KoszulStrand s;
    s.multidegree = multidegree;
    std::vector<int> support;
    for (int k = 1; k <= n; ++k)
        if (multidegree[static_cast<std::size_t>(k - 1)] > 0)
            support.push_back(k);
    const std::size_t p = support.size();
    s.basis.assign(p + 1, {});
    // subsets of the support; collected per size, then put in wedge order
    for (unsigned mask = 0; mask < (1u << p); ++mask) {
        std::vector<int> e = multidegree;
        WedgeIndex tau;
        for (std::size_t r = 0; r < p; ++r) {
            if ((mask >> r) & 1u) {
                tau.push_back(support[r]);
                --e[static_cast<std::size_t>(support[r] - 1)];
            }
        }
        if (!contains(I, Monomial::from_exponents(e)))
            s.basis[tau.size()].push_back(std::move(tau));
    }
    for (auto& b : s.basis)
        std::sort(b.begin(), b.end());
    return s;
}

RationalMatrix strand_differential(const MonomialIdeal& /*I*/, const KoszulStrand& s, int i)
{
    const auto at = [&](int k) -> const std::vector<WedgeIndex>& {
        static const std::vector<WedgeIndex> empty;
        return (k >= 0 && k < static_cast<int>(s.basis.size())) ? s.basis[static_cast<std::size_t>(k)] : empty;
    };
    const auto& src = at(i);
    const auto& dst = at(i - 1);
    RationalMatrix m(dst.size(), 0);
    for (const auto& tau : src) {
        std::map<std::size_t, Rational> col;
        for (std::size_t l = 0; l < tau.size(); ++l) {
            WedgeIndex rest = tau;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(l));
            // a face missing from the target basis has its residue in I
            auto it = std::lower_bound(dst.begin(), dst.end(), rest);
            if (it != dst.end() && *it == rest)
                col[static_cast<std::size_t>(it - dst.begin())] = (l % 2) ? -1 : 1;
        }
        m.append_column(std::move(col));
    }
    return m;
}

namespace {

// Calls f(a) for every exponent vector a of total degree q in n variables.
void for_each_multidegree(int n, int q, const std::function<void(const std::vector<int>&)>& f)
{
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == n - 1) {
            a[static_cast<std::size_t>(k)] = left;
            f(a);
            return;
        }
        for (int e = left; e >= 0; --e) {
            a[static_cast<std::size_t>(k)] = e;
            rec(k + 1, left - e);
        }
        a[static_cast<std::size_t>(k)] = 0;
    };
    rec(0, q);
}

// The strand vanishes when even the smallest residue x^{a - 1_supp(a)} is in I.
bool strand_is_zero(const MonomialIdeal& I, const std::vector<int>& a)
{
    std::vector<int> e = a;
    for (auto& v : e)
        if (v > 0)
            --v;
    return contains(I, Monomial::from_exponents(e));
}

} // namespace

std::map<std::pair<int, int>, std::uint64_t> oracle_homology_dimension(const MonomialIdeal& I, int q_max)
{
    std::map<std::pair<int, int>, std::uint64_t> out;
    if (q_max < 0)
        return out;
    const int n = I.ambient();
    for (int q = 0; q <= q_max; ++q) {
        for_each_multidegree(n, q, [&](const std::vector<int>& a) {
            if (strand_is_zero(I, a))
                return;
            const KoszulStrand s = koszul_strand(I, a);
            const int top = static_cast<int>(s.basis.size()) - 1;
            std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
            for (int i = 1; i <= top; ++i)
                rank[static_cast<std::size_t>(i)] = strand_differential(I, s, i).rank();
            for (int i = 0; i <= top; ++i) {
                const std::size_t dim = s.basis[static_cast<std::size_t>(i)].size();
                const std::size_t h = dim - rank[static_cast<std::size_t>(i)] - rank[static_cast<std::size_t>(i) + 1];
                if (h)
                    out[{i, q}] += h;
            }
        });
    }
    return out;
}

BettiTable oracle_betti_table(const MonomialIdeal& I, int q_max)
{
    BettiTable out(BettiModule::quotient);
    for (const auto& [key, v] : oracle_homology_dimension(I, q_max))
        out.add(key.first, key.second, v);
    return out;
}

HomologyBasisReport verify_homology_basis(const MonomialIdeal& I, const SpreadVector& t, int i, int degree)
{
    HomologyBasisReport rep;
    rep.i = i;
    rep.degree = degree;
    if (i < 1)
        throw PreconditionError("homological degree must be at least 1");
    const auto labels = homology_basis_labels(I, t, i);

    // labels grouped by the multidegree u * x_sigma of e(u;sigma)
    std::map<std::vector<int>, std::vector<const CycleLabel*>> by_multidegree;
    for (const auto& label : labels) {
        if (label.u.degree() + i - 1 != degree)
            continue;
        auto e = label.u.exponents();
        for (int k : label.sigma)
            ++e[static_cast<std::size_t>(k - 1)];
        by_multidegree[e].push_back(&label);
        ++rep.cycles;
    }

    std::size_t homology = 0;
    for_each_multidegree(I.ambient(), degree, [&](const std::vector<int>& a) {
        auto found = by_multidegree.find(a);
        if (strand_is_zero(I, a)) {
            if (found != by_multidegree.end()) {
                rep.non_cycles += found->second.size();
                rep.ok = false;
            }
            return;
        }
        const KoszulStrand s = koszul_strand(I, a);
        if (static_cast<int>(s.basis.size()) <= i) {
            if (found != by_multidegree.end()) {
                rep.non_cycles += found->second.size();
                rep.ok = false;
            }
            return;
        }
        const RationalMatrix d_i = strand_differential(I, s, i);
        const RationalMatrix d_next = strand_differential(I, s, i + 1);
        const std::size_t dim = s.basis[static_cast<std::size_t>(i)].size();
        const std::size_t rank_i = d_i.rank();
        const std::size_t rank_b = d_next.rank();
        rep.kernel_dimension += dim - rank_i;
        rep.boundary_rank += rank_b;
        homology += dim - rank_i - rank_b;
        if (found == by_multidegree.end()) {
            rep.combined_rank += rank_b;
            return;
        }
        const auto& basis = s.basis[static_cast<std::size_t>(i)];
        RationalMatrix cycles(basis.size(), 0);
        for (const CycleLabel* label : found->second) {
            const KoszulChain e = build_cycle_e(I, t, label->u, label->sigma);
            std::map<std::size_t, Rational> col;
            for (const auto& [tau, residues] : e.terms()) {
                auto it = std::lower_bound(basis.begin(), basis.end(), tau);
                if (it == basis.end() || *it != tau)
                    throw PreconditionError("cycle term outside its strand");
                for (const auto& [m, c] : residues)
                    col[static_cast<std::size_t>(it - basis.begin())] += c;
            }
            cycles.append_column(std::move(col));
        }
        const RationalMatrix image = d_i * cycles;
        for (std::size_t c = 0; c < image.cols(); ++c)
            if (!image.column(c).empty())
                ++rep.non_cycles;
        rep.combined_rank += RationalMatrix::hconcat(d_next, cycles).rank();
    });

    std::ostringstream msg;
    if (rep.non_cycles != 0) {
        rep.ok = false;
        msg << rep.non_cycles << " label(s) are not cycles; ";
    }
    if (rep.combined_rank != rep.boundary_rank + rep.cycles) {
        rep.ok = false;
        msg << "classes are dependent modulo boundaries (rank " << rep.combined_rank << " vs "
            << rep.boundary_rank << " + " << rep.cycles << "); ";
    }
    if (homology != rep.cycles) {
        rep.ok = false;
        msg << "dim H_" << i << " in degree " << degree << " is " << homology << " but there are " << rep.cycles
            << " labels; ";
    }
    rep.message = rep.ok ? "ok" : msg.str();
    return rep;
}

} // namespace vspread
