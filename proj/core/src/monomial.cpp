#include "vspread/monomial.hpp"

#include "vspread/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace vspread {

namespace {

void require_same_ambient(const Monomial& a, const Monomial& b)
{
    if (a.ambient() != b.ambient())
        throw PreconditionError("monomials live in different rings: n=" + std::to_string(a.ambient()) +
                                " vs n=" + std::to_string(b.ambient()));
}

void require_ambient(int n)
{
    if (n < 1)
        throw PreconditionError("ambient size must be positive, got " + std::to_string(n));
}

} // namespace

Monomial::Monomial(int n) : n_(n)
{
    require_ambient(n);
}

Monomial::Monomial(int n, std::vector<int> indices) : n_(n), indices_(std::move(indices))
{
    require_ambient(n);
    std::sort(indices_.begin(), indices_.end());
    if (!indices_.empty() && (indices_.front() < 1 || indices_.back() > n))
        throw PreconditionError("variable index out of range [1, " + std::to_string(n) + "]");
}

Monomial Monomial::from_exponents(std::span<const int> exponents)
{
    const int n = static_cast<int>(exponents.size());
    require_ambient(n);
    std::vector<int> idx;
    for (int k = 1; k <= n; ++k) {
        const int e = exponents[static_cast<std::size_t>(k - 1)];
        if (e < 0)
            throw PreconditionError("negative exponent");
        idx.insert(idx.end(), static_cast<std::size_t>(e), k);
    }
    return Monomial(n, std::move(idx), true);
}

std::vector<int> Monomial::exponents() const
{
    std::vector<int> e(static_cast<std::size_t>(n_), 0);
    for (int j : indices_)
        ++e[static_cast<std::size_t>(j - 1)];
    return e;
}

int Monomial::exponent(int k) const
{
    auto [lo, hi] = std::equal_range(indices_.begin(), indices_.end(), k);
    return static_cast<int>(hi - lo);
}

std::vector<int> Monomial::support() const
{
    std::vector<int> s = indices_;
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

Monomial Monomial::times(int k) const
{
    if (k < 1 || k > n_)
        throw PreconditionError("variable index out of range");
    std::vector<int> idx = indices_;
    idx.insert(std::upper_bound(idx.begin(), idx.end(), k), k);
    return Monomial(n_, std::move(idx), true);
}

Monomial Monomial::without(int k) const
{
    auto it = std::lower_bound(indices_.begin(), indices_.end(), k);
    if (it == indices_.end() || *it != k)
        throw PreconditionError("x" + std::to_string(k) + " does not divide " + to_string(*this));
    std::vector<int> idx = indices_;
    idx.erase(idx.begin() + (it - indices_.begin()));
    return Monomial(n_, std::move(idx), true);
}

Monomial Monomial::without_max() const
{
    if (indices_.empty())
        throw PreconditionError("the monomial 1 has no largest variable");
    std::vector<int> idx(indices_.begin(), indices_.end() - 1);
    return Monomial(n_, std::move(idx), true);
}

Monomial Monomial::with_ambient(int m) const
{
    require_ambient(m);
    if (!indices_.empty() && indices_.back() > m)
        throw PreconditionError(to_string(*this) + " does not fit in " + std::to_string(m) + " variables");
    return Monomial(m, indices_, true);
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    require_same_ambient(a, b);
    std::vector<int> idx;
    idx.reserve(a.indices_.size() + b.indices_.size());
    std::merge(a.indices_.begin(), a.indices_.end(), b.indices_.begin(), b.indices_.end(),
               std::back_inserter(idx));
    return Monomial(a.n_, std::move(idx), true);
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
    require_same_ambient(a, b);
    if (!std::includes(a.indices_.begin(), a.indices_.end(), b.indices_.begin(), b.indices_.end()))
        throw PreconditionError(to_string(b) + " does not divide " + to_string(a));
    std::vector<int> idx;
    std::set_difference(a.indices_.begin(), a.indices_.end(), b.indices_.begin(), b.indices_.end(),
                        std::back_inserter(idx));
    return Monomial(a.n_, std::move(idx), true);
}

bool divides(const Monomial& u, const Monomial& v)
{
    require_same_ambient(u, v);
    return std::includes(v.indices().begin(), v.indices().end(), u.indices().begin(), u.indices().end());
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    require_same_ambient(a, b);
    std::vector<int> idx;
    std::set_union(a.indices().begin(), a.indices().end(), b.indices().begin(), b.indices().end(),
                   std::back_inserter(idx));
    return Monomial(a.ambient(), std::move(idx));
}

SpreadVector::SpreadVector(std::vector<int> entries) : entries_(std::move(entries))
{
    if (entries_.empty())
        throw PreconditionError("spread vector needs at least one entry (d >= 2)");
    for (int e : entries_)
        if (e < 0)
            throw PreconditionError("spread vector entries must be non-negative");
}

SpreadVector SpreadVector::zero(int d)
{
    if (d < 2)
        throw PreconditionError("d must be at least 2");
    return SpreadVector(std::vector<int>(static_cast<std::size_t>(d - 1), 0));
}

SpreadVector SpreadVector::parse(std::string_view text)
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view piece = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!piece.empty() && piece.front() == ' ')
            piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ')
            piece.remove_suffix(1);
        int value = 0;
        auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc{} || end != piece.data() + piece.size() || value < 0)
            throw ParseError("invalid spread vector entry '" + std::string(piece) + "'", pos, std::string(piece));
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return SpreadVector(std::move(out));
}

int SpreadVector::prefix_sum(int k) const
{
    if (k < 0 || k > static_cast<int>(entries_.size()))
        throw PreconditionError("prefix length out of range");
    int s = 0;
    for (int i = 0; i < k; ++i)
        s += entries_[static_cast<std::size_t>(i)];
    return s;
}

bool SpreadVector::is_admissible_shape() const
{
    std::size_t i = 0;
    while (i < entries_.size() && entries_[i] == 1)
        ++i;
    while (i < entries_.size() && entries_[i] == 0)
        ++i;
    return i == entries_.size();
}

std::strong_ordering compare(const Monomial& u, const Monomial& v, MonomialOrder order)
{
    if (u.ambient() != v.ambient())
        throw PreconditionError("cannot compare monomials of different rings");
    if (order != MonomialOrder::plex) {
        if (auto c = u.degree() <=> v.degree(); c != 0)
            return c;
    }
    const auto eu = u.exponents();
    const auto ev = v.exponents();
    if (order == MonomialOrder::degrevlex) {
        for (std::size_t k = eu.size(); k-- > 0;) {
            if (eu[k] != ev[k])
                return ev[k] <=> eu[k];
        }
        return std::strong_ordering::equal;
    }
    for (std::size_t k = 0; k < eu.size(); ++k) {
        if (eu[k] != ev[k])
            return eu[k] <=> ev[k];
    }
    return std::strong_ordering::equal;
}

bool is_t_spread(const Monomial& u, const SpreadVector& t)
{
    const auto& j = u.indices();
    if (u.degree() > t.d())
        return false;
    for (std::size_t i = 0; i + 1 < j.size(); ++i)
        if (j[i + 1] - j[i] < t.entries()[i])
            return false;
    return true;
}

std::vector<int> spread_support(const Monomial& u, const SpreadVector& t)
{
    if (!is_t_spread(u, t))
        throw PreconditionError(to_string(u) + " is not t-spread");
    const auto& j = u.indices();
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < j.size(); ++i)
        for (int s = 0; s < t.entries()[i]; ++s)
            out.push_back(j[i] + s);
    // intervals are disjoint and increasing since j_{i+1} >= j_i + t_i
    return out;
}

std::vector<int> free_indices(const Monomial& u, const SpreadVector& t)
{
    const auto blocked = spread_support(u, t);
    std::vector<int> out;
    for (int k = 1; k < u.max_index(); ++k)
        if (!std::binary_search(blocked.begin(), blocked.end(), k))
            out.push_back(k);
    return out;
}

int successor_index(const Monomial& u, int k)
{
    if (k < 1 || k >= u.max_index() || u.is_one())
        throw PreconditionError("successor index needs 1 <= k < max(u)");
    return *std::upper_bound(u.indices().begin(), u.indices().end(), k);
}

Monomial parse_monomial(std::string_view text, int n)
{
    require_ambient(n);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    };
    auto read_int = [&](int& value) {
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9')
            ++pos;
        if (pos == start)
            return false;
        auto [end, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
        return ec == std::errc{} && end == text.data() + pos;
    };
    auto token_at = [&](std::size_t start) {
        std::size_t end = text.find('*', start);
        return std::string(text.substr(start, end == text.npos ? text.npos : end - start));
    };

    while (!text.empty() && (text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);
    skip_ws();
    if (text.substr(pos) == "1")
        return Monomial(n);

    std::vector<int> idx;
    if (pos == text.size())
        throw ParseError("empty monomial", pos, "");
    while (true) {
        skip_ws();
        const std::size_t start = pos;
        if (pos >= text.size() || text[pos] != 'x')
            throw ParseError("expected factor x<k> at '" + token_at(start) + "'", start, token_at(start));
        ++pos;
        int k = 0;
        if (!read_int(k) || k < 1)
            throw ParseError("invalid variable in factor '" + token_at(start) + "'", start, token_at(start));
        if (k > n)
            throw ParseError("variable index " + std::to_string(k) + " exceeds n=" + std::to_string(n) +
                                 " in factor '" + token_at(start) + "'",
                             start, token_at(start));
        int e = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            if (!read_int(e) || e < 1)
                throw ParseError("invalid exponent in factor '" + token_at(start) + "'", start, token_at(start));
        }
        skip_ws();
        idx.insert(idx.end(), static_cast<std::size_t>(e), k);
        if (pos == text.size())
            break;
        if (text[pos] != '*')
            throw ParseError("unexpected character in factor '" + token_at(start) + "'", pos, token_at(start));
        ++pos;
    }
    return Monomial(n, std::move(idx));
}

namespace {

std::string format_with(const Monomial& u, const char* var_prefix, const char* separator)
{
    if (u.is_one())
        return "1";
    std::string out;
    const auto s = u.support();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0)
            out += separator;
        out += var_prefix;
        out += std::to_string(s[i]);
        const int e = u.exponent(s[i]);
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

} // namespace

std::string to_string(const Monomial& u)
{
    return format_with(u, "x", "*");
}

std::string to_display_string(const Monomial& u)
{
    return format_with(u, "x_", "");
}

std::ostream& operator<<(std::ostream& os, const Monomial& u)
{
    return os << to_string(u);
}

std::ostream& operator<<(std::ostream& os, const SpreadVector& t)
{
    for (std::size_t i = 0; i < t.entries().size(); ++i)
        os << (i ? "," : "") << t.entries()[i];
    return os;
}

std::size_t MonomialHash::operator()(const Monomial& u) const noexcept
{
    std::size_t h = static_cast<std::size_t>(u.ambient()) * 0x9e3779b97f4a7c15ULL;
    for (int j : u.indices())
        h ^= static_cast<std::size_t>(j) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

} // namespace vspread
