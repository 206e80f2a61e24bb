#include "vspread/linalg.hpp"

#include "vspread/errors.hpp"

#include <utility>

namespace vspread {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

Rational RationalMatrix::get(std::size_t r, std::size_t c) const
{
    const auto& col = columns_.at(c);
    auto it = col.find(r);
    return it == col.end() ? Rational(0) : it->second;
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& value)
{
    if (r >= rows_)
        throw PreconditionError("row index out of range");
    auto& col = columns_.at(c);
    Rational v = value;
    v.canonicalize();
    if (v == 0)
        col.erase(r);
    else
        col[r] = std::move(v);
}

void RationalMatrix::add(std::size_t r, std::size_t c, const Rational& value)
{
    set(r, c, get(r, c) + value);
}

void RationalMatrix::append_column(std::map<std::size_t, Rational> entries)
{
    for (auto it = entries.begin(); it != entries.end();) {
        if (it->first >= rows_)
            throw PreconditionError("row index out of range");
        it->second.canonicalize();
        it = it->second == 0 ? entries.erase(it) : std::next(it);
    }
    columns_.push_back(std::move(entries));
}

bool RationalMatrix::is_zero() const noexcept
{
    for (const auto& col : columns_)
        if (!col.empty())
            return false;
    return true;
}

std::size_t bareiss_rank(std::vector<std::vector<Integer>>& m)
{
    const std::size_t rows = m.size();
    if (rows == 0)
        return 0;
    const std::size_t cols = m.front().size();
    std::size_t k = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols && k < rows; ++c) {
        std::size_t p = k;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[k]);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer v = m[k][c] * m[i][j] - m[i][c] * m[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
            m[i][c] = 0;
        }
        prev = m[k][c];
        ++k;
    }
    return k;
}

std::size_t RationalMatrix::rank() const
{
    if (rows_ == 0 || columns_.empty())
        return 0;
    // row-major copy with each row scaled by the lcm of its denominators
    std::vector<std::vector<Rational>> dense(rows_, std::vector<Rational>(columns_.size()));
    std::vector<Integer> scale(rows_, 1);
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        for (const auto& [r, v] : columns_[c]) {
            dense[r][c] = v;
            mpz_lcm(scale[r].get_mpz_t(), scale[r].get_mpz_t(), v.get_den_mpz_t());
        }
    }
    std::vector<std::vector<Integer>> m;
    m.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        bool empty = true;
        std::vector<Integer> row(columns_.size());
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            if (dense[r][c] != 0) {
                Rational scaled = dense[r][c] * Rational(scale[r]);
                row[c] = scaled.get_num();
                empty = false;
            }
        }
        if (!empty)
            m.push_back(std::move(row));
    }
    return bareiss_rank(m);
}

RationalMatrix RationalMatrix::hconcat(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.rows_ != b.rows_)
        throw PreconditionError("hconcat needs equal row counts");
    RationalMatrix out = a;
    for (const auto& col : b.columns_)
        out.columns_.push_back(col);
    return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols() != b.rows_)
        throw PreconditionError("matrix product with mismatched shapes");
    RationalMatrix out(a.rows_, b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        std::map<std::size_t, Rational> acc;
        for (const auto& [k, v] : b.columns_[c])
            for (const auto& [r, w] : a.columns_[k])
                acc[r] += w * v;
        out.columns_[c].clear();
        for (auto& [r, v] : acc)
            if (v != 0)
                out.columns_[c].emplace(r, std::move(v));
    }
    return out;
}

} // namespace vspread
