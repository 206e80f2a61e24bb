#include "vspread/ideal.hpp"

#include "vspread/errors.hpp"
#include "vspread/spread_ops.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace vspread {

bool generator_order_less(const Monomial& a, const Monomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    // equal degree: plex descending is ascending index sequence
    return a.indices() < b.indices();
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> gens, std::optional<SpreadVector> spread_type)
    : n_(n), spread_type_(std::move(spread_type))
{
    if (n < 1)
        throw PreconditionError("ambient size must be positive");
    for (const auto& g : gens)
        if (g.ambient() != n)
            throw PreconditionError("generator " + to_string(g) + " lives in " + std::to_string(g.ambient()) +
                                    " variables, ideal in " + std::to_string(n));
    std::sort(gens.begin(), gens.end(), generator_order_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    // a divisor has degree <= its multiple, so earlier entries suffice
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : gens_) {
            if (divides(h, g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant)
            gens_.push_back(g);
    }
    std::sort(gens_.begin(), gens_.end(), generator_order_less);
    if (spread_type_) {
        for (const auto& g : gens_)
            if (!is_t_spread(g, *spread_type_))
            {
                std::ostringstream msg;
                msg << "generator " << g << " is not t-spread for t=(" << *spread_type_ << ")";
                throw PreconditionError(msg.str());
            }
    }
}

std::vector<Monomial> MonomialIdeal::generators_of_degree(int j) const
{
    std::vector<Monomial> out;
    for (const auto& g : gens_)
        if (g.degree() == j)
            out.push_back(g);
    return out;
}

int MonomialIdeal::max_generator_degree() const noexcept
{
    int m = 0;
    for (const auto& g : gens_)
        m = std::max(m, g.degree());
    return m;
}

int MonomialIdeal::generator_position(const Monomial& u) const
{
    auto it = std::lower_bound(gens_.begin(), gens_.end(), u, generator_order_less);
    if (it != gens_.end() && *it == u)
        return static_cast<int>(it - gens_.begin());
    return -1;
}

MonomialIdeal MonomialIdeal::with_ambient(int m) const
{
    std::vector<Monomial> g;
    g.reserve(gens_.size());
    for (const auto& u : gens_)
        g.push_back(u.with_ambient(m));
    return MonomialIdeal(m, std::move(g), spread_type_);
}

MonomialIdeal MonomialIdeal::with_spread_type(std::optional<SpreadVector> t) const
{
    return MonomialIdeal(n_, gens_, std::move(t));
}

MonomialIdeal minimalize(int n, std::vector<Monomial> gens)
{
    return MonomialIdeal(n, std::move(gens));
}

bool contains(const MonomialIdeal& I, const Monomial& w)
{
    if (w.ambient() != I.ambient())
        throw PreconditionError("monomial and ideal live in different rings");
    for (const auto& g : I.generators())
        if (g.degree() <= w.degree() && divides(g, w))
            return true;
    return false;
}

bool is_contained(const MonomialIdeal& I, const MonomialIdeal& J)
{
    for (const auto& g : I.generators())
        if (!contains(J, g))
            return false;
    return true;
}

std::string to_string(IdealClass c)
{
    switch (c) {
    case IdealClass::stable:
        return "stable";
    case IdealClass::strongly_stable:
        return "strongly-stable";
    case IdealClass::lex:
        return "lex";
    }
    return "";
}

IdealClass parse_ideal_class(std::string_view text)
{
    if (text == "stable")
        return IdealClass::stable;
    if (text == "strongly-stable")
        return IdealClass::strongly_stable;
    if (text == "lex")
        return IdealClass::lex;
    throw ParseError("unknown ideal class '" + std::string(text) + "'", 0, std::string(text));
}

std::string ClassWitness::describe() const
{
    if (cls == IdealClass::lex)
        return to_display_string(w) + " ∉ I but " + to_display_string(u) + " ∈ I";
    return "x_" + std::to_string(j) + "·(" + to_display_string(u) + "/x_" + std::to_string(i) + ") ∉ I";
}

namespace {

void require_spread_generators(const MonomialIdeal& I, const SpreadVector& t)
{
    for (const auto& g : I.generators())
        if (!is_t_spread(g, t))
            throw PreconditionError("generator " + to_string(g) + " is not t-spread");
}

// First failing exchange x_j (u / x_i), j < i, over the given i's.
std::optional<ClassWitness> exchange_violation(const MonomialIdeal& I, const SpreadVector& t, IdealClass cls,
                                               const Monomial& u, const std::vector<int>& positions)
{
    for (int i : positions) {
        const Monomial base = u.without(i);
        for (int j = 1; j < i; ++j) {
            Monomial w = base.times(j);
            if (is_t_spread(w, t) && !contains(I, w))
                return ClassWitness{cls, u, i, j, std::move(w)};
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<ClassWitness> find_class_violation(const MonomialIdeal& I, const SpreadVector& t, IdealClass cls)
{
    require_spread_generators(I, t);
    if (I.is_zero() || I.is_unit())
        return std::nullopt;
    const int n = I.ambient();

    switch (cls) {
    case IdealClass::strongly_stable:
        for (const auto& u : I.generators())
            if (auto w = exchange_violation(I, t, cls, u, u.support()))
                return w;
        return std::nullopt;

    case IdealClass::stable:
        for (int l = 1; l <= t.d(); ++l) {
            for (const auto& u : enumerate_spread_monomials(n, l, t)) {
                if (!contains(I, u))
                    continue;
                if (auto w = exchange_violation(I, t, cls, u, {u.max_index()}))
                    return w;
            }
        }
        return std::nullopt;

    case IdealClass::lex:
        for (int l = 1; l <= t.d(); ++l) {
            std::optional<Monomial> first_missing;
            for (const auto& u : enumerate_spread_monomials(n, l, t)) {
                const bool in = contains(I, u);
                if (!in && !first_missing)
                    first_missing = u;
                else if (in && first_missing)
                    return ClassWitness{cls, u, 0, 0, *first_missing};
            }
        }
        return std::nullopt;
    }
    return std::nullopt;
}

bool is_t_stable(const MonomialIdeal& I, const SpreadVector& t)
{
    return !find_class_violation(I, t, IdealClass::stable);
}

bool is_t_strongly_stable(const MonomialIdeal& I, const SpreadVector& t)
{
    return !find_class_violation(I, t, IdealClass::strongly_stable);
}

bool is_t_lex(const MonomialIdeal& I, const SpreadVector& t)
{
    return !find_class_violation(I, t, IdealClass::lex);
}

MonomialIdeal strongly_stable_closure(int n, const std::vector<Monomial>& gens, const SpreadVector& t)
{
    std::set<Monomial> seen;
    std::deque<Monomial> queue;
    for (const auto& g : gens) {
        if (g.ambient() != n)
            throw PreconditionError("generator " + to_string(g) + " lives in a different ring");
        if (!is_t_spread(g, t))
            throw PreconditionError(to_string(g) + " is not t-spread");
        if (seen.insert(g).second)
            queue.push_back(g);
    }
    while (!queue.empty()) {
        Monomial u = std::move(queue.front());
        queue.pop_front();
        for (int i : u.support()) {
            const Monomial base = u.without(i);
            for (int j = 1; j < i; ++j) {
                Monomial w = base.times(j);
                if (is_t_spread(w, t) && seen.insert(w).second)
                    queue.push_back(std::move(w));
            }
        }
    }
    return MonomialIdeal(n, std::vector<Monomial>(seen.begin(), seen.end()), t);
}

StandardDecomposition standard_decomposition(const MonomialIdeal& I, const SpreadVector& t, const Monomial& w)
{
    if (!is_t_spread(w, t))
        throw PreconditionError(to_string(w) + " is not t-spread");
    if (!contains(I, w))
        throw PreconditionError(to_string(w) + " is not in the ideal");
    if (!is_t_strongly_stable(I, t))
        throw PreconditionError("ideal is not t-spread strongly stable");
    const auto& idx = w.indices();
    for (std::size_t k = 0; k <= idx.size(); ++k) {
        Monomial u(w.ambient(), std::vector<int>(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k)));
        if (contains(I, u)) {
            if (!I.is_generator(u))
                throw PreconditionError("shortest prefix of " + to_string(w) + " in the ideal is not a generator");
            return {u, w / u};
        }
    }
    throw PreconditionError("no prefix of " + to_string(w) + " lies in the ideal");
}

Monomial decomposition_function(const MonomialIdeal& I, const SpreadVector& t, const Monomial& w)
{
    if (!t.is_admissible_shape())
        throw PreconditionError("decomposition function needs t of shape (1,...,1,0,...,0)");
    const Monomial* best = nullptr;
    for (const auto& g : I.generators()) {
        if (g.degree() <= w.degree() && divides(g, w)) {
            if (!best || compare(g, *best, MonomialOrder::plex) > 0)
                best = &g;
        }
    }
    if (!best)
        throw PreconditionError(to_string(w) + " is not in the ideal");
    return *best;
}

std::vector<std::uint64_t> hilbert_function(const MonomialIdeal& I, int max_degree)
{
    if (max_degree < 0)
        throw PreconditionError("degree bound must be non-negative");
    const int n = I.ambient();
    std::vector<std::uint64_t> hf(static_cast<std::size_t>(max_degree) + 1, 0);
    if (I.is_unit())
        return hf;
    const auto& gens = I.generators();
    std::vector<int> exps(static_cast<std::size_t>(n), 0);

    auto in_ideal = [&](int deg) {
        for (const auto& g : gens) {
            if (g.degree() > deg)
                break;
            bool ok = true;
            const auto& gi = g.indices();
            for (std::size_t a = 0; a < gi.size() && ok;) {
                std::size_t b = a;
                while (b < gi.size() && gi[b] == gi[a])
                    ++b;
                ok = exps[static_cast<std::size_t>(gi[a] - 1)] >= static_cast<int>(b - a);
                a = b;
            }
            if (ok)
                return true;
        }
        return false;
    };

    // nodes are monomials grown by non-decreasing variable index; a node in I
    // has every descendant in I
    std::function<void(int, int)> rec = [&](int lo, int deg) {
        ++hf[static_cast<std::size_t>(deg)];
        if (deg == max_degree)
            return;
        for (int k = lo; k <= n; ++k) {
            ++exps[static_cast<std::size_t>(k - 1)];
            if (!in_ideal(deg + 1))
                rec(k, deg + 1);
            --exps[static_cast<std::size_t>(k - 1)];
        }
    };
    rec(1, 0);
    return hf;
}

std::string to_string(const MonomialIdeal& I)
{
    if (I.is_zero())
        return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < I.generators().size(); ++i)
        s += (i ? ", " : "") + to_string(I.generators()[i]);
    return s + ")";
}

} // namespace vspread
