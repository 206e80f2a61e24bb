#ifndef VSPREAD_BENCH_IDEALS_HPP
#define VSPREAD_BENCH_IDEALS_HPP

#include "vspread/ideal.hpp"

#include <vector>

namespace bench {

/// Strongly stable closure of the single t-spread monomial with the largest
/// possible indices in degree d = t.d(): a "principal Borel" ideal, whose
/// generator count grows quickly with n.
inline vspread::MonomialIdeal principal_ideal(int n, const vspread::SpreadVector& t)
{
    const int d = t.d();
    std::vector<int> idx(static_cast<std::size_t>(d));
    idx.back() = n;
    for (int k = d - 2; k >= 0; --k)
        idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k) + 1] - t.entries()[static_cast<std::size_t>(k)];
    return vspread::strongly_stable_closure(n, {vspread::Monomial(n, idx)}, t);
}

} // namespace bench

#endif
