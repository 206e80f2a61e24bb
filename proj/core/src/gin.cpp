#include "vspread/gin.hpp"

#include "vspread/errors.hpp"
#include "vspread/groebner.hpp"
#include "vspread/spread_ops.hpp"

#include <algorithm>
#include <sstream>

namespace vspread {

namespace {

// fraction-free elimination with row swaps
Integer integer_determinant(const std::vector<std::vector<long>>& matrix)
{
    const std::size_t n = matrix.size();
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a[r][c] = matrix[r][c];
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

} // namespace

CoordinateChange::CoordinateChange(std::vector<std::vector<long>> matrix, int bound)
    : matrix_(std::move(matrix)), bound_(bound)
{
    const std::size_t n = matrix_.size();
    if (n == 0)
        throw PreconditionError("coordinate change needs at least one variable");
    for (const auto& row : matrix_)
        if (row.size() != n)
            throw PreconditionError("coordinate change matrix must be square");
    if (determinant() == 0)
        throw PreconditionError("coordinate change matrix is singular");
}

CoordinateChange CoordinateChange::random(int n, int bound, std::mt19937_64& rng)
{
    if (n < 1 || bound < 1)
        throw PreconditionError("coordinate change needs n >= 1 and bound >= 1");
    std::uniform_int_distribution<long> entry(-bound, bound);
    while (true) {
        std::vector<std::vector<long>> m(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n)));
        for (auto& row : m)
            for (auto& v : row)
                v = entry(rng);
        if (integer_determinant(m) != 0)
            return CoordinateChange(std::move(m), bound);
    }
}

Integer CoordinateChange::determinant() const
{
    return integer_determinant(matrix_);
}

Polynomial CoordinateChange::apply(const Monomial& m) const
{
    const int n = ambient();
    if (m.ambient() != n)
        throw PreconditionError("monomial and coordinate change live in different rings");
    Polynomial out = Polynomial::from_monomial(Monomial(n));
    for (int j : m.indices()) {
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(n));
        for (long v : matrix_[static_cast<std::size_t>(j - 1)])
            row.emplace_back(v);
        out = out * Polynomial::linear_form(row);
    }
    return out;
}

MonomialIdeal initial_ideal_after(const MonomialIdeal& I, const CoordinateChange& g)
{
    if (I.is_zero() || I.is_unit())
        return I.with_spread_type(std::nullopt);
    std::vector<Polynomial> images;
    images.reserve(I.generators().size());
    for (const auto& u : I.generators())
        images.push_back(g.apply(u));
    return initial_ideal(buchberger(std::move(images)), I.ambient());
}

namespace {

bool zero_spread_strongly_stable(const MonomialIdeal& J)
{
    const int d = std::max(2, J.max_generator_degree());
    return is_t_strongly_stable(J, SpreadVector::zero(d));
}

} // namespace

GinResult gin(const MonomialIdeal& I, const GinOptions& options)
{
    if (options.bound < 1)
        throw PreconditionError("coefficient bound must be positive");
    if (I.is_zero() || I.is_unit())
        return {I.with_spread_type(std::nullopt), options.seed, options.bound, 1};
    std::mt19937_64 rng(options.seed);
    long bound = options.bound;
    for (int attempt = 1; attempt <= 1 + std::max(0, options.retries); ++attempt) {
        const int b = static_cast<int>(std::min<long>(bound, 1L << 30));
        const CoordinateChange g1 = CoordinateChange::random(I.ambient(), b, rng);
        const CoordinateChange g2 = CoordinateChange::random(I.ambient(), b, rng);
        MonomialIdeal first = initial_ideal_after(I, g1);
        const MonomialIdeal second = initial_ideal_after(I, g2);
        if (first == second && zero_spread_strongly_stable(first))
            return {std::move(first), options.seed, b, attempt};
        bound *= 10;
    }
    throw GenericityError("genericity not certified: independent coordinate changes disagree on the initial ideal "
                          "after " + std::to_string(1 + std::max(0, options.retries)) + " attempts");
}

MonomialIdeal shift(const MonomialIdeal& I, const SpreadVector& t, const GinOptions& options)
{
    const MonomialIdeal g = gin(I, options).ideal;
    for (const auto& u : g.generators())
        if (u.degree() > t.d())
            throw PreconditionError("Gin(I) has the generator " + to_string(u) + " of degree " +
                                    std::to_string(u.degree()) + " > d = " + std::to_string(t.d()));
    const MonomialIdeal image = apply_spread_map_ideal(SpreadMap::spread(t), g);
    int top = I.ambient();
    for (const auto& u : image.generators())
        if (!u.is_one())
            top = std::max(top, u.max_index());
    return image.with_ambient(top);
}

std::string to_string(PropertyStatus s)
{
    switch (s) {
    case PropertyStatus::holds:
        return "holds";
    case PropertyStatus::violated:
        return "violated";
    case PropertyStatus::not_applicable:
        return "n/a";
    }
    return "";
}

bool ShiftReport::ok() const
{
    return std::none_of(status.begin(), status.end(), [](PropertyStatus s) { return s == PropertyStatus::violated; });
}

ShiftReport verify_shift_properties(const MonomialIdeal& I, const std::optional<MonomialIdeal>& J,
                                    const SpreadVector& t, std::optional<int> hilbert_bound,
                                    const GinOptions& options)
{
    if (J && J->ambient() != I.ambient())
        throw PreconditionError("I and J live in different rings");
    if (J && !is_contained(I, *J))
        throw PreconditionError("Shift_4 needs I contained in J");

    ShiftReport rep{shift(I, t, options), std::nullopt, {}, {}, 0};
    rep.status.fill(PropertyStatus::not_applicable);

    if (auto w = find_class_violation(rep.shifted, t, IdealClass::strongly_stable)) {
        rep.status[0] = PropertyStatus::violated;
        rep.notes.push_back("Shift_1: " + w->describe());
    } else {
        rep.status[0] = PropertyStatus::holds;
    }

    const bool spread_input = std::all_of(I.generators().begin(), I.generators().end(),
                                          [&](const Monomial& u) { return is_t_spread(u, t); });
    if (spread_input && is_t_strongly_stable(I, t)) {
        if (rep.shifted == I) {
            rep.status[1] = PropertyStatus::holds;
        } else {
            rep.status[1] = PropertyStatus::violated;
            rep.notes.push_back("Shift_2: got " + to_string(rep.shifted) + ", expected " + to_string(I));
        }
    }

    const int m = std::max(I.ambient(), rep.shifted.ambient());
    rep.hilbert_bound = hilbert_bound.value_or(rep.shifted.max_generator_degree() + 3);
    const auto hf_in = hilbert_function(I.with_ambient(m), rep.hilbert_bound);
    const auto hf_out = hilbert_function(rep.shifted.with_ambient(m), rep.hilbert_bound);
    if (hf_in == hf_out) {
        rep.status[2] = PropertyStatus::holds;
    } else {
        rep.status[2] = PropertyStatus::violated;
        for (std::size_t q = 0; q < hf_in.size(); ++q) {
            if (hf_in[q] != hf_out[q]) {
                std::ostringstream os;
                os << "Shift_3: HF differs in degree " << q << ": " << hf_in[q] << " vs " << hf_out[q];
                rep.notes.push_back(os.str());
                break;
            }
        }
    }

    if (J) {
        rep.shifted_other = shift(*J, t, options);
        const int mj = std::max(rep.shifted.ambient(), rep.shifted_other->ambient());
        if (is_contained(rep.shifted.with_ambient(mj), rep.shifted_other->with_ambient(mj))) {
            rep.status[3] = PropertyStatus::holds;
        } else {
            rep.status[3] = PropertyStatus::violated;
            rep.notes.push_back("Shift_4: " + to_string(rep.shifted) + " is not contained in " +
                                to_string(*rep.shifted_other));
        }
    }
    return rep;
}

} // namespace vspread
