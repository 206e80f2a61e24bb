#ifndef VSPREAD_LINALG_HPP
#define VSPREAD_LINALG_HPP

#include "vspread/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace vspread {

/// Sparse matrix over Q, stored by columns.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }

    Rational get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Rational& value);
    void add(std::size_t r, std::size_t c, const Rational& value);

    const std::map<std::size_t, Rational>& column(std::size_t c) const { return columns_.at(c); }
    /// Appends a column given as row -> value.
    void append_column(std::map<std::size_t, Rational> entries);

    bool is_zero() const noexcept;

    /// Exact rank: rows are scaled to integers, then fraction-free
    /// (Bareiss) elimination over Z.
    std::size_t rank() const;

    /// [a | b]; the row counts must agree.
    static RationalMatrix hconcat(const RationalMatrix& a, const RationalMatrix& b);

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_;
    std::vector<std::map<std::size_t, Rational>> columns_;
};

/// Rank of a dense integer matrix by fraction-free elimination; `m` is
/// consumed as scratch space.
std::size_t bareiss_rank(std::vector<std::vector<Integer>>& m);

} // namespace vspread

#endif
