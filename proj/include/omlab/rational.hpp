#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace omlab {

/// Arbitrary-precision rational, always kept in reduced form with a positive
/// denominator.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Accepts `n` or `p/q` with optional leading sign; throws InvalidArgument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

/// Matrix stored as its columns, all of equal length.
using ColumnMatrix = std::vector<Vector>;

std::size_t matrix_rank(const ColumnMatrix& columns);

/// Basis of {a : sum_j a_j * columns[j] = 0}, one vector per free column.
std::vector<Vector> null_space(const ColumnMatrix& columns);

/// The solution of columns * a = rhs when it exists and is unique.
std::optional<Vector> solve_unique(const ColumnMatrix& columns, const Vector& rhs);

}  // namespace omlab
