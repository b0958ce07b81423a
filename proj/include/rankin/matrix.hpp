#ifndef RANKIN_MATRIX_HPP_
#define RANKIN_MATRIX_HPP_

#include "rankin/exact.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rankin {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;
using BigVector = std::vector<BigInt>;
using BigMatrix = std::vector<BigVector>;

BigMatrix to_big(IntMatrix const& m);
/* Throws Overflow when an entry does not fit in 64 bits. */
IntMatrix to_int(BigMatrix const& m);
std::int64_t to_int64(BigInt const& v);

std::int64_t dot(std::span<std::int64_t const> a, std::span<std::int64_t const> b);
IntMatrix gram_matrix(IntMatrix const& rows);

/* Fraction-free Gaussian elimination (Bareiss). */
BigInt determinant(BigMatrix m);
BigInt determinant(IntMatrix const& m);

/* Rank over the rationals. */
std::size_t rank(IntMatrix const& rows);

/* Row-style Hermite normal form of the integer row span.
 *
 * `rows` holds the nonzero echelon rows: each row's leading entry (pivot) is
 * positive, lies strictly right of the previous row's pivot, and every entry
 * above a pivot is reduced into [0, pivot). The form is unique for a given
 * row span, so two spans are equal iff their HNFs are equal.
 */
struct HermiteForm {
    BigMatrix rows;
    std::vector<std::size_t> pivots;
    std::size_t columns = 0;

    std::size_t rank() const { return rows.size(); }
    bool full_rank() const { return rows.size() == columns; }
};

HermiteForm hermite_normal_form(BigMatrix rows, std::size_t columns);
HermiteForm hermite_normal_form(IntMatrix const& rows, std::size_t columns);

/* Coordinates c with c * basis = v, for a square upper-triangular basis;
 * nullopt when v is not in the integer span. */
std::optional<BigVector> solve_upper_triangular(BigMatrix const& basis, BigVector const& v);

/* Exact inverse of a nonsingular square matrix. */
std::vector<std::vector<BigRational>> inverse(BigMatrix const& m);

std::string format_matrix(IntMatrix const& m);

}  // namespace rankin

#endif  /* RANKIN_MATRIX_HPP_ */
