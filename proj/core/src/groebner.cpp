#include "vspread/groebner.hpp"

#include "vspread/errors.hpp"

#include <algorithm>
#include <set>

namespace vspread {

namespace {

struct LeadInfo {
    ExponentVector exps;
    int degree;
};

LeadInfo lead_of(const Polynomial& p)
{
    const Term& t = p.leading_term();
    return {t.exponents, t.degree};
}

ExponentVector lcm_of(const ExponentVector& a, const ExponentVector& b)
{
    ExponentVector e{};
    for (std::size_t k = 0; k < e.size(); ++k)
        e[k] = std::max(a[k], b[k]);
    return e;
}

int degree_of(const ExponentVector& e)
{
    int d = 0;
    for (auto v : e)
        d += v;
    return d;
}

ExponentVector quotient(const ExponentVector& a, const ExponentVector& b)
{
    ExponentVector e{};
    for (std::size_t k = 0; k < e.size(); ++k)
        e[k] = static_cast<std::uint8_t>(a[k] - b[k]);
    return e;
}

bool coprime(const ExponentVector& a, const ExponentVector& b)
{
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] && b[k])
            return false;
    return true;
}

// Tries one reduction step of the term at position `pos` of f; returns false
// if no divisor exists.
bool reduce_term(Polynomial& f, std::size_t pos, const std::vector<Polynomial>& g)
{
    const Term& t = f.terms()[pos];
    for (const auto& h : g) {
        const Term& lt = h.leading_term();
        if (lt.degree <= t.degree && exponent_divides(lt.exponents, t.exponents, f.ambient())) {
            const Rational c = t.coefficient / lt.coefficient;
            const ExponentVector e = quotient(t.exponents, lt.exponents);
            const int ed = t.degree - lt.degree;
            f.subtract_multiple(c, e, ed, h);
            return true;
        }
    }
    return false;
}

struct Pair {
    std::size_t i;
    std::size_t j;
    Term lcm; // coefficient unused
};

// normal strategy: smallest lcm first, ties by index for determinism
struct PairOrder {
    bool operator()(const Pair& a, const Pair& b) const
    {
        const int c = degrevlex_compare(a.lcm, b.lcm);
        if (c != 0)
            return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    }
};

} // namespace

Polynomial normal_form(Polynomial f, const std::vector<Polynomial>& g)
{
    std::size_t pos = 0;
    while (pos < f.terms().size()) {
        if (!reduce_term(f, pos, g))
            ++pos;
    }
    return f;
}

std::vector<Polynomial> buchberger(std::vector<Polynomial> generators, GroebnerStats* stats)
{
    GroebnerStats local;
    GroebnerStats& st = stats ? *stats : local;
    std::vector<Polynomial> basis;
    int n = 0;
    for (auto& p : generators) {
        if (n == 0)
            n = p.ambient();
        else if (p.ambient() != n)
            throw PreconditionError("generators live in different rings");
    }
    std::set<Pair, PairOrder> pending;
    // pairs already removed from `pending`, for the chain criterion
    std::set<std::pair<std::size_t, std::size_t>> done;

    auto add_to_basis = [&](Polynomial p) {
        p.make_monic();
        const std::size_t k = basis.size();
        basis.push_back(std::move(p));
        for (std::size_t i = 0; i < k; ++i) {
            Term l;
            l.exponents = lcm_of(basis[i].leading_term().exponents, basis[k].leading_term().exponents);
            l.degree = degree_of(l.exponents);
            pending.insert({i, k, l});
        }
    };

    for (auto& p : generators) {
        Polynomial r = normal_form(std::move(p), basis);
        if (!r.is_zero())
            add_to_basis(std::move(r));
    }

    auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };

    while (!pending.empty()) {
        const Pair pr = *pending.begin();
        pending.erase(pending.begin());
        done.insert({pr.i, pr.j});
        ++st.pairs_considered;
        const LeadInfo a = lead_of(basis[pr.i]);
        const LeadInfo b = lead_of(basis[pr.j]);
        if (coprime(a.exps, b.exps)) {
            ++st.product_criterion;
            continue;
        }
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == pr.i || k == pr.j)
                continue;
            if (exponent_divides(basis[k].leading_term().exponents, pr.lcm.exponents, n) &&
                done.count(key(pr.i, k)) && done.count(key(pr.j, k)))
                chain = true;
        }
        if (chain) {
            ++st.chain_criterion;
            continue;
        }
        Polynomial spoly(n);
        spoly.subtract_multiple(Rational(-1), quotient(pr.lcm.exponents, a.exps), pr.lcm.degree - a.degree,
                                basis[pr.i]);
        spoly.subtract_multiple(Rational(1), quotient(pr.lcm.exponents, b.exps), pr.lcm.degree - b.degree,
                                basis[pr.j]);
        Polynomial r = normal_form(std::move(spoly), basis);
        if (r.is_zero()) {
            ++st.zero_reductions;
            continue;
        }
        add_to_basis(std::move(r));
    }

    // minimal basis: drop elements whose leading monomial is a proper multiple
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        const auto& li = basis[i].leading_term();
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j)
                continue;
            const auto& lj = basis[j].leading_term();
            if (exponent_divides(lj.exponents, li.exponents, n) && (lj.exponents != li.exponents || j < i))
                redundant = true;
        }
        if (!redundant)
            minimal.push_back(basis[i]);
    }
    // interreduce tails
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        Polynomial tail = minimal[i];
        const Term& lt = tail.leading_term();
        Polynomial lt_poly = Polynomial::from_monomial(to_monomial(lt.exponents, n), lt.coefficient);
        tail -= lt_poly;
        minimal[i] = lt_poly + normal_form(std::move(tail), others);
        minimal[i].make_monic();
    }
    std::sort(minimal.begin(), minimal.end(), [](const Polynomial& x, const Polynomial& y) {
        return degrevlex_compare(x.leading_term(), y.leading_term()) > 0;
    });
    return minimal;
}

MonomialIdeal initial_ideal(const std::vector<Polynomial>& basis, int n)
{
    std::vector<Monomial> lead;
    lead.reserve(basis.size());
    for (const auto& p : basis) {
        if (p.ambient() != n)
            throw PreconditionError("basis element lives in a different ring");
        lead.push_back(p.leading_monomial());
    }
    return MonomialIdeal(n, std::move(lead));
}

} // namespace vspread
