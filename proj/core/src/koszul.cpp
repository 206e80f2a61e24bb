#include "vspread/koszul.hpp"

#include "vspread/errors.hpp"

#include <algorithm>
#include <sstream>

namespace vspread {

KoszulChain::KoszulChain(const MonomialIdeal& I, int homological_degree) : ideal_(&I), degree_(homological_degree)
{
    if (homological_degree < 0)
        throw PreconditionError("homological degree must be non-negative");
}

void KoszulChain::add_term(const Monomial& m, const std::vector<int>& wedge, const Rational& c)
{
    if (static_cast<int>(wedge.size()) != degree_)
        throw PreconditionError("wedge of length " + std::to_string(wedge.size()) + " in a chain of degree " +
                                std::to_string(degree_));
    if (m.ambient() != ideal_->ambient())
        throw PreconditionError("residue lives in a different ring than the ideal");
    WedgeIndex tau = wedge;
    int inversions = 0;
    // insertion sort counting transpositions; lengths are tiny
    for (std::size_t a = 1; a < tau.size(); ++a) {
        for (std::size_t b = a; b > 0 && tau[b - 1] > tau[b]; --b) {
            std::swap(tau[b - 1], tau[b]);
            ++inversions;
        }
    }
    for (std::size_t a = 0; a < tau.size(); ++a) {
        if (tau[a] < 1 || tau[a] > ideal_->ambient())
            throw PreconditionError("wedge index out of range");
        if (a > 0 && tau[a] == tau[a - 1])
            return;
    }
    add_canonical(m, tau, (inversions % 2) ? Rational(-c) : c);
}

void KoszulChain::add_canonical(const Monomial& m, const WedgeIndex& tau, const Rational& c)
{
    if (c == 0 || contains(*ideal_, m))
        return;
    if (auto q = internal_degree(); q && *q != m.degree() + static_cast<int>(tau.size()))
        throw PreconditionError("inhomogeneous Koszul chain");
    auto& slot = terms_[tau];
    auto [it, inserted] = slot.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            slot.erase(it);
            if (slot.empty())
                terms_.erase(tau);
        }
    }
}

std::optional<int> KoszulChain::internal_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    const auto& [tau, residues] = *terms_.begin();
    return residues.begin()->first.degree() + static_cast<int>(tau.size());
}

std::size_t KoszulChain::size() const noexcept
{
    std::size_t s = 0;
    for (const auto& [tau, residues] : terms_)
        s += residues.size();
    return s;
}

Rational KoszulChain::coefficient(const Monomial& m, const WedgeIndex& tau) const
{
    auto it = terms_.find(tau);
    if (it == terms_.end())
        return 0;
    auto jt = it->second.find(m);
    return jt == it->second.end() ? Rational(0) : jt->second;
}

KoszulChain& KoszulChain::operator+=(const KoszulChain& other)
{
    if (other.ideal_ != ideal_ && !(*other.ideal_ == *ideal_))
        throw PreconditionError("chains over different ideals");
    if (other.degree_ != degree_)
        throw PreconditionError("chains of different homological degree");
    for (const auto& [tau, residues] : other.terms_)
        for (const auto& [m, c] : residues)
            add_canonical(m, tau, c);
    return *this;
}

KoszulChain& KoszulChain::operator-=(const KoszulChain& other)
{
    KoszulChain neg = other;
    neg *= Rational(-1);
    return *this += neg;
}

KoszulChain& KoszulChain::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [tau, residues] : terms_)
        for (auto& [m, coeff] : residues)
            coeff *= c;
    return *this;
}

KoszulChain koszul_differential(const KoszulChain& a, int j_start)
{
    if (a.homological_degree() == 0)
        throw PreconditionError("the differential is not defined on degree 0");
    KoszulChain out(a.ideal(), a.homological_degree() - 1);
    for (const auto& [tau, residues] : a.terms()) {
        if (tau.front() < j_start)
            throw PreconditionError("wedge index below the start of the variable sequence");
        for (std::size_t l = 0; l < tau.size(); ++l) {
            WedgeIndex rest = tau;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(l));
            const bool negative = (l % 2) == 1;
            for (const auto& [m, c] : residues)
                out.add_term(m.times(tau[l]), rest, negative ? Rational(-c) : c);
        }
    }
    return out;
}

KoszulChain wedge(const KoszulChain& a, const KoszulChain& b)
{
    if (!(a.ideal() == b.ideal()))
        throw PreconditionError("chains over different ideals");
    KoszulChain out(a.ideal(), a.homological_degree() + b.homological_degree());
    for (const auto& [ta, ra] : a.terms()) {
        for (const auto& [tb, rb] : b.terms()) {
            std::vector<int> w = ta;
            w.insert(w.end(), tb.begin(), tb.end());
            for (const auto& [ma, ca] : ra)
                for (const auto& [mb, cb] : rb)
                    out.add_term(ma * mb, w, ca * cb);
        }
    }
    return out;
}

KoszulChain wedge(const KoszulChain& a, const std::vector<int>& right)
{
    KoszulChain out(a.ideal(), a.homological_degree() + static_cast<int>(right.size()));
    for (const auto& [tau, residues] : a.terms()) {
        std::vector<int> w = tau;
        w.insert(w.end(), right.begin(), right.end());
        for (const auto& [m, c] : residues)
            out.add_term(m, w, c);
    }
    return out;
}

KoszulChain wedge(const std::vector<int>& left, const KoszulChain& a)
{
    KoszulChain out(a.ideal(), a.homological_degree() + static_cast<int>(left.size()));
    for (const auto& [tau, residues] : a.terms()) {
        std::vector<int> w = left;
        w.insert(w.end(), tau.begin(), tau.end());
        for (const auto& [m, c] : residues)
            out.add_term(m, w, c);
    }
    return out;
}

KoszulChain multiply(const KoszulChain& a, const Monomial& m)
{
    KoszulChain out(a.ideal(), a.homological_degree());
    for (const auto& [tau, residues] : a.terms())
        for (const auto& [r, c] : residues)
            out.add_term(r * m, tau, c);
    return out;
}

namespace {

std::vector<int> successors(const Monomial& u, const WedgeIndex& sigma)
{
    std::vector<int> js;
    js.reserve(sigma.size());
    for (int k : sigma)
        js.push_back(successor_index(u, k));
    return js;
}

void require_strictly_increasing(const WedgeIndex& s, const char* what)
{
    for (std::size_t a = 1; a < s.size(); ++a)
        if (s[a - 1] >= s[a])
            throw PreconditionError(std::string(what) + " must be strictly increasing");
}

// Parity of u(sigma; F) from the successors js of sigma and the membership
// flags of F; js is weakly increasing, so each block of equal js is a suffix
// once the larger entries are gone.
int parity_of(std::vector<int> js, std::vector<bool> in_f)
{
    int acc = 0;
    while (true) {
        const int f = static_cast<int>(std::count(in_f.begin(), in_f.end(), true));
        if (f == 0)
            return acc & 1;
        if (!in_f.back()) {
            acc += f;
            js.pop_back();
            in_f.pop_back();
            continue;
        }
        const int top = js.back();
        int block = 0;
        while (!js.empty() && js.back() == top) {
            js.pop_back();
            in_f.pop_back();
            ++block;
        }
        acc += (block - 1) * (f + 1) + 1;
    }
}

void require_label(const MonomialIdeal& I, const SpreadVector& t, const Monomial& u, const WedgeIndex& sigma)
{
    if (u.ambient() != I.ambient())
        throw PreconditionError("generator lives in a different ring than the ideal");
    if (!I.is_generator(u))
        throw PreconditionError(to_string(u) + " is not a minimal generator of the ideal");
    if (u.is_one())
        throw PreconditionError("the unit ideal has no cycles of this form");
    require_strictly_increasing(sigma, "sigma");
    const auto allowed = free_indices(u, t);
    for (int k : sigma)
        if (!std::binary_search(allowed.begin(), allowed.end(), k))
            throw PreconditionError("index " + std::to_string(k) + " is not in [max(u)-1] minus supp_t(u) for u=" +
                                    to_string(u));
}

// Adds the F-terms of e(u; sigma) for every F accepted by `keep`.
template <class Keep>
void add_cycle_terms(KoszulChain& out, const Monomial& u, const WedgeIndex& sigma, Keep keep)
{
    const std::vector<int> js = successors(u, sigma);
    const Monomial uprime = u.without_max();
    const int top = u.max_index();
    const std::size_t s = sigma.size();
    for (unsigned mask = 0; mask < (1u << s); ++mask) {
        std::vector<bool> in_f(s);
        for (std::size_t r = 0; r < s; ++r)
            in_f[r] = (mask >> r) & 1u;
        if (!keep(in_f))
            continue;
        std::vector<int> wedge_written;
        std::vector<int> image;
        bool vanishes = false;
        for (std::size_t r = 0; r < s; ++r) {
            if (in_f[r]) {
                if (js[r] == top || (!image.empty() && image.back() == js[r]))
                    vanishes = true;
                image.push_back(js[r]);
            } else {
                wedge_written.push_back(sigma[r]);
            }
        }
        if (vanishes)
            continue;
        Monomial residue = uprime;
        for (std::size_t r = 0; r < s; ++r) {
            if (in_f[r])
                residue = residue.without(js[r]).times(sigma[r]);
        }
        wedge_written.insert(wedge_written.end(), image.begin(), image.end());
        wedge_written.push_back(top);
        out.add_term(residue, wedge_written, parity_of(js, in_f) ? Rational(-1) : Rational(1));
    }
}

using Memo = std::map<std::pair<Monomial, WedgeIndex>, KoszulChain>;

KoszulChain recursive_cycle(const MonomialIdeal& I, const Monomial& u, const WedgeIndex& sigma, Memo& memo)
{
    auto key = std::make_pair(u, sigma);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;

    KoszulChain out(I, static_cast<int>(sigma.size()) + 1);
    if (sigma.empty()) {
        out.add_term(u.without_max(), {u.max_index()});
    } else {
        const std::size_t i1 = sigma.size(); // i - 1
        const std::vector<int> js = successors(u, sigma);
        const int k_last = sigma.back();
        const int j_last = js.back();
        const WedgeIndex tau(sigma.begin(), sigma.end() - 1);
        out -= wedge(recursive_cycle(I, u, tau, memo), std::vector<int>{k_last});
        if (j_last != u.max_index()) {
            std::size_t l = i1; // 1-based position of the first k with successor j_last
            while (l > 1 && js[l - 2] == j_last)
                --l;
            const Monomial v = u.without(j_last).times(k_last);
            const WedgeIndex rho(sigma.begin(), sigma.begin() + static_cast<std::ptrdiff_t>(l - 1));
            std::vector<int> tail(sigma.begin() + static_cast<std::ptrdiff_t>(l - 1), sigma.end() - 1);
            tail.push_back(j_last);
            KoszulChain second = wedge(recursive_cycle(I, v, rho, memo), tail);
            if ((i1 - l) % 2)
                second *= Rational(-1);
            out += second;
        }
    }
    memo.emplace(std::move(key), out);
    return out;
}

} // namespace

int sign_coefficient(const Monomial& u, const WedgeIndex& sigma, const WedgeIndex& F)
{
    require_strictly_increasing(sigma, "sigma");
    require_strictly_increasing(F, "F");
    std::vector<bool> in_f(sigma.size(), false);
    for (int k : F) {
        auto it = std::lower_bound(sigma.begin(), sigma.end(), k);
        if (it == sigma.end() || *it != k)
            throw PreconditionError("F is not a subset of sigma");
        in_f[static_cast<std::size_t>(it - sigma.begin())] = true;
    }
    if (!sigma.empty() && (sigma.front() < 1 || sigma.back() >= u.max_index() || u.is_one()))
        throw PreconditionError("sigma must lie in [max(u)-1]");
    return parity_of(successors(u, sigma), std::move(in_f));
}

KoszulChain build_cycle_e(const MonomialIdeal& I, const SpreadVector& t, const Monomial& u, const WedgeIndex& sigma)
{
    require_label(I, t, u, sigma);
    KoszulChain out(I, static_cast<int>(sigma.size()) + 1);
    add_cycle_terms(out, u, sigma, [](const std::vector<bool>&) { return true; });
    return out;
}

KoszulChain build_cycle_recursive(const MonomialIdeal& I, const SpreadVector& t, const Monomial& u,
                                  const WedgeIndex& sigma)
{
    require_label(I, t, u, sigma);
    Memo memo;
    return recursive_cycle(I, u, sigma, memo);
}

KoszulChain build_cycle_z(const MonomialIdeal& I, const SpreadVector& t, const Monomial& u, const WedgeIndex& sigma)
{
    if (!t.is_admissible_shape())
        throw PreconditionError("z(u;sigma) needs t of shape (1,...,1,0,...,0)");
    require_label(I, t, u, sigma);
    KoszulChain out(I, static_cast<int>(sigma.size()) + 1);
    std::vector<int> w = sigma;
    w.push_back(u.max_index());
    out.add_term(u.without_max(), w);
    return out;
}

RemainderSplit remainder_decomposition(const MonomialIdeal& I, const SpreadVector& t, const Monomial& u,
                                       const WedgeIndex& sigma)
{
    if (sigma.empty())
        throw PreconditionError("remainder decomposition needs a non-empty sigma");
    require_label(I, t, u, sigma);
    const WedgeIndex shorter(sigma.begin() + 1, sigma.end());
    KoszulChain head = wedge(std::vector<int>{sigma.front()}, build_cycle_e(I, t, u, shorter));
    KoszulChain rest(I, static_cast<int>(sigma.size()) + 1);
    add_cycle_terms(rest, u, sigma, [](const std::vector<bool>& in_f) { return bool(in_f.front()); });
    return {std::move(head), std::move(rest)};
}

std::vector<CycleLabel> homology_basis_labels(const MonomialIdeal& I, const SpreadVector& t, int i)
{
    if (i < 1)
        throw PreconditionError("homological degree must be at least 1");
    if (auto w = find_class_violation(I, t, IdealClass::strongly_stable))
        throw PreconditionError("ideal is not t-spread strongly stable: " + w->describe());
    std::vector<CycleLabel> out;
    if (I.is_unit())
        return out;
    const std::size_t size = static_cast<std::size_t>(i - 1);
    for (const auto& u : I.generators()) {
        const auto allowed = free_indices(u, t);
        if (allowed.size() < size)
            continue;
        // subsets in lexicographic order of index vectors, i.e. wedge order
        std::vector<std::size_t> pick(size);
        for (std::size_t a = 0; a < size; ++a)
            pick[a] = a;
        while (true) {
            WedgeIndex sigma;
            sigma.reserve(size);
            for (auto p : pick)
                sigma.push_back(allowed[p]);
            out.push_back({u, std::move(sigma)});
            std::size_t a = size;
            while (a > 0 && pick[a - 1] == allowed.size() - size + a - 1)
                --a;
            if (a == 0)
                break;
            ++pick[a - 1];
            for (std::size_t b = a; b < size; ++b)
                pick[b] = pick[b - 1] + 1;
        }
    }
    return out;
}

std::string to_display_string(const KoszulChain& a)
{
    if (a.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [tau, residues] : a.terms()) {
        for (const auto& [m, c] : residues) {
            const bool negative = c < 0;
            const Rational mag = abs(c);
            if (first)
                os << (negative ? "−" : "");
            else
                os << (negative ? " − " : " + ");
            first = false;
            if (mag != 1)
                os << mag.get_str() << " ";
            os << "ε(" << to_display_string(m) << ")";
            if (!tau.empty()) {
                os << " ";
                for (std::size_t k = 0; k < tau.size(); ++k)
                    os << (k ? "∧" : "") << "e_" << tau[k];
            }
        }
    }
    return os.str();
}

std::string to_display_string(const CycleLabel& label)
{
    std::ostringstream os;
    os << "(" << to_display_string(label.u) << ", {";
    for (std::size_t k = 0; k < label.sigma.size(); ++k)
        os << (k ? "," : "") << label.sigma[k];
    os << "})";
    return os.str();
}

} // namespace vspread
