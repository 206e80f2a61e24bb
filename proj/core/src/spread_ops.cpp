#include "vspread/spread_ops.hpp"

#include "vspread/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace vspread {

SpreadMap::SpreadMap(SpreadVector source_, SpreadVector target_)
    : source(std::move(source_)), target(std::move(target_))
{
    if (source.d() != target.d())
        throw PreconditionError("spread map needs source and target of equal length");
}

int SpreadMap::default_ambient(int n) const
{
    return n - source.prefix_sum(source.d() - 1) + target.prefix_sum(target.d() - 1);
}

namespace {

std::vector<int> image_indices(const SpreadMap& m, const Monomial& u)
{
    if (!is_t_spread(u, m.source))
        throw PreconditionError(to_string(u) + " is not spread for the map's source vector");
    std::vector<int> out = u.indices();
    for (std::size_t k = 0; k < out.size(); ++k) {
        const int shift = m.target.prefix_sum(static_cast<int>(k)) - m.source.prefix_sum(static_cast<int>(k));
        out[k] += shift;
    }
    return out;
}

} // namespace

Monomial apply_spread_map(const SpreadMap& m, const Monomial& u, std::optional<int> ambient)
{
    auto idx = image_indices(m, u);
    const int top = idx.empty() ? 1 : idx.back();
    int n = ambient.value_or(std::max({m.default_ambient(u.ambient()), top, 1}));
    if (!idx.empty() && top > n)
        throw PreconditionError("image of " + to_string(u) + " needs x" + std::to_string(top) +
                                " but the ambient has " + std::to_string(n) + " variables");
    return Monomial(n, std::move(idx));
}

MonomialIdeal apply_spread_map_ideal(const SpreadMap& m, const MonomialIdeal& I, std::optional<int> ambient)
{
    std::vector<std::vector<int>> images;
    int top = 1;
    for (const auto& u : I.generators()) {
        images.push_back(image_indices(m, u));
        if (!images.back().empty())
            top = std::max(top, images.back().back());
    }
    const int n = ambient.value_or(std::max({m.default_ambient(I.ambient()), top, 1}));
    if (top > n)
        throw PreconditionError("image needs x" + std::to_string(top) + " but the ambient has " +
                                std::to_string(n) + " variables");
    std::vector<Monomial> gens;
    gens.reserve(images.size());
    for (auto& idx : images)
        gens.emplace_back(n, std::move(idx));
    const std::size_t count = gens.size();
    MonomialIdeal out(n, std::move(gens), m.target);
    if (out.generators().size() != count)
        throw PreconditionError("images of the generators are not minimal");
    return out;
}

std::vector<Monomial> enumerate_spread_monomials(int n, int degree, const SpreadVector& t)
{
    if (degree < 0 || degree > t.d())
        throw PreconditionError("degree must lie in [0, d]");
    if (n < 1)
        throw PreconditionError("ambient size must be positive");
    std::vector<Monomial> out;
    std::vector<int> idx;
    idx.reserve(static_cast<std::size_t>(degree));
    // tail[k]: room the gaps after position k still need
    std::vector<int> tail(static_cast<std::size_t>(degree) + 1, 0);
    for (int k = degree - 2; k >= 0; --k)
        tail[static_cast<std::size_t>(k)] = tail[static_cast<std::size_t>(k) + 1] + t.entries()[static_cast<std::size_t>(k)];

    std::function<void(int)> rec = [&](int lo) {
        const int pos = static_cast<int>(idx.size());
        if (pos == degree) {
            out.emplace_back(n, idx);
            return;
        }
        for (int j = lo; j + tail[static_cast<std::size_t>(pos)] <= n; ++j) {
            idx.push_back(j);
            const int next = pos + 1 < degree ? j + t.entries()[static_cast<std::size_t>(pos)] : j;
            rec(next);
            idx.pop_back();
        }
    };
    rec(1);
    return out;
}

std::uint64_t count_spread_monomials(int n, int degree, const SpreadVector& t)
{
    if (degree < 0 || degree > t.d())
        throw PreconditionError("degree must lie in [0, d]");
    const long long top = static_cast<long long>(n) + degree - 1 - (degree >= 1 ? t.prefix_sum(degree - 1) : 0);
    if (degree == 0)
        return 1;
    if (top < degree)
        return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= degree; ++i) {
        // r = binom(top - degree + i, i), exact at every step
        r = r * static_cast<std::uint64_t>(top - degree + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

} // namespace vspread
