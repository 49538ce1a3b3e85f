#include "omlab/rational.hpp"

#include <cctype>

#include "omlab/errors.hpp"

namespace omlab {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

struct Reduced {
  std::vector<Vector> rows;  // row-major, reduced row echelon form
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination of the matrix whose columns are given.
Reduced reduce(const ColumnMatrix& columns, std::size_t height) {
  const std::size_t width = columns.size();
  Reduced out;
  out.rows.assign(height, Vector(width));
  for (std::size_t j = 0; j < width; ++j) {
    for (std::size_t i = 0; i < height; ++i) out.rows[i][j] = columns[j][i];
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < width && row < height; ++col) {
    std::size_t pivot = row;
    while (pivot < height && sgn(out.rows[pivot][col]) == 0) ++pivot;
    if (pivot == height) continue;
    std::swap(out.rows[pivot], out.rows[row]);
    const Rational lead = out.rows[row][col];
    for (auto& v : out.rows[row]) v /= lead;
    for (std::size_t i = 0; i < height; ++i) {
      if (i == row || sgn(out.rows[i][col]) == 0) continue;
      const Rational factor = out.rows[i][col];
      for (std::size_t k = col; k < width; ++k) out.rows[i][k] -= factor * out.rows[row][k];
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t height_of(const ColumnMatrix& columns) { return columns.empty() ? 0 : columns.front().size(); }

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  }
  const mpz_class d = parse_integer(den);
  if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::size_t matrix_rank(const ColumnMatrix& columns) {
  return reduce(columns, height_of(columns)).pivots.size();
}

std::vector<Vector> null_space(const ColumnMatrix& columns) {
  const std::size_t width = columns.size();
  const Reduced r = reduce(columns, height_of(columns));
  std::vector<bool> is_pivot(width, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < width; ++free) {
    if (is_pivot[free]) continue;
    Vector v(width, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve_unique(const ColumnMatrix& columns, const Vector& rhs) {
  ColumnMatrix augmented = columns;
  augmented.push_back(rhs);
  const std::size_t width = columns.size();
  const Reduced r = reduce(augmented, rhs.size());
  if (!r.pivots.empty() && r.pivots.back() == width) return std::nullopt;  // inconsistent
  if (r.pivots.size() != width) return std::nullopt;                      // not unique
  Vector solution(width);
  for (std::size_t i = 0; i < width; ++i) solution[r.pivots[i]] = r.rows[i][width];
  return solution;
}

}  // namespace omlab
