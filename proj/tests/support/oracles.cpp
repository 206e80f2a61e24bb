#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

std::vector<Exp> all_monomials(int n, int deg)
{
    std::vector<Exp> out;
    Exp e(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int k, int left) -> void {
        if (k == n - 1) {
            e[static_cast<std::size_t>(k)] = left;
            out.push_back(e);
            return;
        }
        for (int v = left; v >= 0; --v) {
            e[static_cast<std::size_t>(k)] = v;
            self(self, k + 1, left - v);
        }
    };
    if (n > 0)
        rec(rec, 0, deg);
    return out;
}

std::vector<int> index_sequence(const Exp& e)
{
    std::vector<int> idx;
    for (std::size_t k = 0; k < e.size(); ++k)
        for (int r = 0; r < e[k]; ++r)
            idx.push_back(static_cast<int>(k) + 1);
    return idx;
}

int degree(const Exp& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

bool is_spread(const Exp& e, const std::vector<int>& t)
{
    const auto idx = index_sequence(e);
    if (idx.size() > t.size() + 1)
        return false;
    for (std::size_t k = 0; k + 1 < idx.size(); ++k)
        if (idx[k + 1] - idx[k] < t[k])
            return false;
    return true;
}

std::vector<Exp> spread_monomials(int n, int deg, const std::vector<int>& t)
{
    std::vector<Exp> out;
    for (auto& e : all_monomials(n, deg))
        if (is_spread(e, t))
            out.push_back(std::move(e));
    return out;
}

bool divides(const Exp& a, const Exp& b)
{
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k])
            return false;
    return true;
}

bool in_ideal(const std::vector<Exp>& gens, const Exp& e)
{
    return std::any_of(gens.begin(), gens.end(), [&](const Exp& g) { return divides(g, e); });
}

std::vector<Exp> minimal(std::vector<Exp> gens)
{
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exp> out;
    for (std::size_t a = 0; a < gens.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < gens.size() && !redundant; ++b)
            redundant = a != b && divides(gens[b], gens[a]);
        if (!redundant)
            out.push_back(gens[a]);
    }
    return out;
}

std::uint64_t binomial(long long a, long long b)
{
    if (b < 0 || a < b)
        return 0;
    std::uint64_t r = 1;
    for (long long k = 1; k <= b; ++k)
        r = r * static_cast<std::uint64_t>(a - b + k) / static_cast<std::uint64_t>(k);
    return r;
}

bool strongly_stable_by_definition(const std::vector<Exp>& gens, int n, const std::vector<int>& t)
{
    const int d = static_cast<int>(t.size()) + 1;
    for (int l = 1; l <= d; ++l) {
        for (const auto& u : spread_monomials(n, l, t)) {
            if (!in_ideal(gens, u))
                continue;
            for (int i = 1; i <= n; ++i) {
                if (u[static_cast<std::size_t>(i - 1)] == 0)
                    continue;
                for (int j = 1; j < i; ++j) {
                    Exp w = u;
                    --w[static_cast<std::size_t>(i - 1)];
                    ++w[static_cast<std::size_t>(j - 1)];
                    if (is_spread(w, t) && !in_ideal(gens, w))
                        return false;
                }
            }
        }
    }
    return true;
}

std::vector<Exp> exchange_closure(const std::vector<Exp>& seeds, int n, const std::vector<int>& t)
{
    std::set<Exp> seen(seeds.begin(), seeds.end());
    std::vector<Exp> work(seeds.begin(), seeds.end());
    while (!work.empty()) {
        const Exp u = work.back();
        work.pop_back();
        for (int i = 1; i <= n; ++i) {
            if (u[static_cast<std::size_t>(i - 1)] == 0)
                continue;
            for (int j = 1; j < i; ++j) {
                Exp w = u;
                --w[static_cast<std::size_t>(i - 1)];
                ++w[static_cast<std::size_t>(j - 1)];
                if (is_spread(w, t) && seen.insert(w).second)
                    work.push_back(w);
            }
        }
    }
    return minimal(std::vector<Exp>(seen.begin(), seen.end()));
}

RandomIdeal random_strongly_stable(std::mt19937_64& rng, const RandomIdealShape& shape)
{
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int attempt = 0; attempt < 1000; ++attempt) {
        RandomIdeal r;
        r.n = pick(shape.min_n, shape.max_n);
        const int d = pick(shape.min_d, shape.max_d);
        for (int k = 0; k + 1 < d; ++k)
            r.t.push_back(pick(0, shape.max_t_entry));
        std::vector<Exp> seeds;
        const int count = pick(1, shape.max_seeds);
        for (int s = 0; s < count; ++s) {
            // degree-1 seeds swallow most of the ring, so keep them rare
            const int l = pick(1, 10) == 1 ? 1 : pick(2, d);
            const auto pool = spread_monomials(r.n, l, r.t);
            if (pool.empty())
                continue;
            seeds.push_back(pool[static_cast<std::size_t>(pick(0, static_cast<int>(pool.size()) - 1))]);
        }
        if (seeds.empty())
            continue;
        r.generators = exchange_closure(seeds, r.n, r.t);
        const bool all_linear = std::all_of(r.generators.begin(), r.generators.end(),
                                            [](const Exp& g) { return degree(g) <= 1; });
        if (!all_linear && static_cast<int>(r.generators.size()) <= shape.max_generators)
            return r;
    }
    throw std::runtime_error("could not draw a random ideal of the requested shape");
}

std::vector<std::uint64_t> hilbert_by_listing(const std::vector<Exp>& gens, int n, int max_degree)
{
    std::vector<std::uint64_t> hf;
    for (int q = 0; q <= max_degree; ++q) {
        std::uint64_t c = 0;
        for (const auto& e : all_monomials(n, q))
            c += in_ideal(gens, e) ? 0 : 1;
        hf.push_back(c);
    }
    return hf;
}

std::size_t gaussian_rank(std::vector<std::vector<mpq_class>> m)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0)
                continue;
            const mpq_class f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

namespace {

std::vector<std::vector<int>> subsets(int n, int size)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (int k = start; k <= n; ++k) {
            cur.push_back(k);
            self(self, k + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

} // namespace

std::map<std::pair<int, int>, std::uint64_t> koszul_homology(const std::vector<Exp>& gens, int n, int q_max)
{
    std::map<std::pair<int, int>, std::uint64_t> out;
    for (int q = 0; q <= q_max; ++q) {
        // basis[i]: pairs (tau, m) with |tau| = i, deg m = q - i, m not in I
        std::vector<std::vector<std::pair<std::vector<int>, Exp>>> basis(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= std::min(n, q); ++i)
            for (const auto& tau : subsets(n, i))
                for (const auto& m : all_monomials(n, q - i))
                    if (!in_ideal(gens, m))
                        basis[static_cast<std::size_t>(i)].push_back({tau, m});
        std::vector<std::size_t> rank(static_cast<std::size_t>(n) + 2, 0);
        for (int i = 1; i <= n; ++i) {
            const auto& src = basis[static_cast<std::size_t>(i)];
            const auto& dst = basis[static_cast<std::size_t>(i - 1)];
            if (src.empty() || dst.empty())
                continue;
            std::map<std::pair<std::vector<int>, Exp>, std::size_t> row;
            for (std::size_t r = 0; r < dst.size(); ++r)
                row[dst[r]] = r;
            std::vector<std::vector<mpq_class>> mat(dst.size(), std::vector<mpq_class>(src.size(), 0));
            for (std::size_t c = 0; c < src.size(); ++c) {
                Chain one;
                one[src[c]] = 1;
                for (const auto& [key, v] : boundary(one, gens))
                    mat[row.at(key)][c] += v;
            }
            rank[static_cast<std::size_t>(i)] = gaussian_rank(std::move(mat));
        }
        for (int i = 0; i <= n; ++i) {
            const std::size_t dim = basis[static_cast<std::size_t>(i)].size();
            const std::size_t h = dim - rank[static_cast<std::size_t>(i)] - rank[static_cast<std::size_t>(i) + 1];
            if (h)
                out[{i, q}] = h;
        }
    }
    return out;
}

Exp shift_indices(const Exp& e, const std::vector<int>& source, const std::vector<int>& target, int out_n)
{
    const auto idx = index_sequence(e);
    Exp out(static_cast<std::size_t>(out_n), 0);
    int shift = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k > 0)
            shift += target[k - 1] - source[k - 1];
        const int j = idx[k] + shift;
        if (j < 1 || j > out_n)
            throw std::out_of_range("shifted index outside the ambient");
        ++out[static_cast<std::size_t>(j - 1)];
    }
    return out;
}

Chain boundary(const Chain& c, const std::vector<Exp>& gens)
{
    Chain out;
    for (const auto& [key, v] : c) {
        const auto& [tau, m] = key;
        for (std::size_t l = 0; l < tau.size(); ++l) {
            Exp mm = m;
            ++mm[static_cast<std::size_t>(tau[l] - 1)];
            if (in_ideal(gens, mm))
                continue;
            std::vector<int> rest = tau;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(l));
            mpq_class& slot = out[{rest, mm}];
            slot += (l % 2 == 0 ? v : mpq_class(-v));
            if (slot == 0)
                out.erase({rest, mm});
        }
    }
    return out;
}

Exp to_exp(const vspread::Monomial& u)
{
    return u.exponents();
}

vspread::Monomial from_exp(const Exp& e)
{
    return vspread::Monomial::from_exponents(e);
}

std::vector<vspread::Monomial> from_exps(const std::vector<Exp>& es)
{
    std::vector<vspread::Monomial> out;
    for (const auto& e : es)
        out.push_back(from_exp(e));
    return out;
}

vspread::MonomialIdeal to_ideal(const RandomIdeal& r)
{
    return vspread::MonomialIdeal(r.n, from_exps(r.generators), vspread::SpreadVector(r.t));
}

Chain to_chain(const vspread::KoszulChain& c)
{
    Chain out;
    for (const auto& [tau, coeffs] : c.terms())
        for (const auto& [m, q] : coeffs)
            out[{tau, m.exponents()}] = q;
    return out;
}

} // namespace oracle
