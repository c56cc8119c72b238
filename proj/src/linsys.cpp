#include "semibrick/linsys.hpp"

#include <cmath>
#include <random>

#include "semibrick/errors.hpp"

namespace semibrick {

std::size_t LinearSystem::add_unknown(std::size_t rows, std::size_t cols) {
  offset_.push_back(variable_count());
  rows_.push_back(rows);
  cols_.push_back(cols);
  size_.push_back(rows * cols);
  return rows_.size() - 1;
}

void LinearSystem::add_equation(const std::vector<Term>& terms, const Matrix& rhs) {
  const std::size_t base = rhs_.size();
  const std::size_t out_rows = rhs.rows(), out_cols = rhs.cols();
  for (std::size_t i = 0; i < out_rows; ++i)
    for (std::size_t k = 0; k < out_cols; ++k) rhs_.push_back(rhs(i, k));

  for (const auto& term : terms) {
    const std::size_t u = term.unknown;
    if (u >= rows_.size()) throw UsageError("linear system: unknown index out of range");
    const std::size_t p_dim = rows_[u], q_dim = cols_[u];
    const std::size_t l_rows = term.left ? term.left->rows() : p_dim;
    const std::size_t r_cols = term.right ? term.right->cols() : q_dim;
    if ((term.left && term.left->cols() != p_dim) || (term.right && term.right->rows() != q_dim) ||
        l_rows != out_rows || r_cols != out_cols)
      throw ShapeError("linear system: term shape mismatch");

    // Nonzeros of L (as (i, p)) and R (as (q, k)).
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> lnz, rnz;
    if (term.left) {
      for (std::size_t i = 0; i < l_rows; ++i)
        for (std::size_t p = 0; p < p_dim; ++p)
          if ((*term.left)(i, p) != 0) lnz.emplace_back(i, p, (*term.left)(i, p));
    } else {
      for (std::size_t p = 0; p < p_dim; ++p) lnz.emplace_back(p, p, Scalar(1));
    }
    if (term.right) {
      for (std::size_t q = 0; q < q_dim; ++q)
        for (std::size_t k = 0; k < r_cols; ++k)
          if ((*term.right)(q, k) != 0) rnz.emplace_back(q, k, (*term.right)(q, k));
    } else {
      for (std::size_t q = 0; q < q_dim; ++q) rnz.emplace_back(q, q, Scalar(1));
    }
    const Scalar c = field_.normalize(term.coefficient);
    for (const auto& [i, p, lv] : lnz)
      for (const auto& [q, k, rv] : rnz)
        entries_.push_back({base + i * out_cols + k, offset_[u] + p * q_dim + q,
                            field_.mul(c, field_.mul(lv, rv))});
  }
}

void LinearSystem::add_homogeneous(const std::vector<Term>& terms, std::size_t rows, std::size_t cols) {
  add_equation(terms, Matrix(field_, rows, cols));
}

std::vector<Matrix> LinearSystem::unpack(const Vector& flat) const {
  if (flat.size() != variable_count()) throw ShapeError("linear system: solution length mismatch");
  std::vector<Matrix> out;
  for (std::size_t u = 0; u < rows_.size(); ++u) {
    Matrix m(field_, rows_[u], cols_[u]);
    for (std::size_t i = 0; i < rows_[u]; ++i)
      for (std::size_t j = 0; j < cols_[u]; ++j) m.at(i, j) = flat[offset_[u] + i * cols_[u] + j];
    out.push_back(std::move(m));
  }
  return out;
}

Matrix LinearSystem::coefficients() const {
  Matrix a(field_, rhs_.size(), variable_count());
  for (const auto& e : entries_) a.at(e.row, e.col) = field_.add(a(e.row, e.col), e.value);
  return a;
}

std::optional<LinearSystem::Solution> LinearSystem::solve() const {
  const std::size_t n = variable_count();
  Matrix aug(field_, rhs_.size(), n + 1);
  for (const auto& e : entries_) aug.at(e.row, e.col) = field_.add(aug(e.row, e.col), e.value);
  for (std::size_t i = 0; i < rhs_.size(); ++i) aug.at(i, n) = rhs_[i];
  auto [r, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;

  Solution sol;
  sol.particular_flat.assign(n, Scalar(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular_flat[pivots[i]] = r(i, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, Scalar(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field_.neg(r(i, free));
    sol.homogeneous_flat.push_back(std::move(v));
  }
  sol.particular = unpack(sol.particular_flat);
  for (const auto& v : sol.homogeneous_flat) sol.homogeneous.push_back(unpack(v));
  return sol;
}

// ---------------------------------------------------------------------------

namespace {

Vector combine(const Field& f, const Vector& p, const std::vector<Vector>& dirs,
               const std::vector<Scalar>& coeffs) {
  Vector out = p;
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    if (coeffs[d] == 0) continue;
    for (std::size_t i = 0; i < out.size(); ++i)
      if (dirs[d][i] != 0) out[i] = f.add(out[i], f.mul(coeffs[d], dirs[d][i]));
  }
  return out;
}

constexpr std::size_t kRandomTrials = 96;
constexpr double kGridCap = 2.0e5;

}  // namespace

AffineSearch search_affine(const Field& field, const Vector& particular, const std::vector<Vector>& dirs,
                           const std::function<bool(const Vector&)>& accept, std::size_t degree_bound) {
  const std::size_t n = dirs.size();
  std::vector<Scalar> coeffs(n, Scalar(0));
  if (accept(particular)) return {particular, false};
  for (std::size_t d = 0; d < n; ++d) {
    coeffs.assign(n, Scalar(0));
    coeffs[d] = 1;
    auto v = combine(field, particular, dirs, coeffs);
    if (accept(v)) return {v, false};
  }
  if (n == 0) return {std::nullopt, true};

  // Over Q the grid {0..D}^n cannot lie in the zero set of a nonzero
  // polynomial of degree D; over F_p the whole space is the grid.
  const long grid = field.is_rationals() ? static_cast<long>(degree_bound) + 1
                                         : static_cast<long>(field.characteristic());
  std::mt19937_64 rng(0x5eedb41c);
  std::uniform_int_distribution<long> dist(field.is_rationals() ? -static_cast<long>(degree_bound) - 2 : 0,
                                           field.is_rationals() ? static_cast<long>(degree_bound) + 2
                                                                : grid - 1);
  for (std::size_t t = 0; t < kRandomTrials; ++t) {
    for (auto& c : coeffs) c = field.from_int(dist(rng));
    auto v = combine(field, particular, dirs, coeffs);
    if (accept(v)) return {v, false};
  }

  if (std::pow(static_cast<double>(grid), static_cast<double>(n)) > kGridCap) return {std::nullopt, false};
  std::vector<long> digits(n, 0);
  while (true) {
    for (std::size_t d = 0; d < n; ++d) coeffs[d] = field.from_int(digits[d]);
    auto v = combine(field, particular, dirs, coeffs);
    if (accept(v)) return {v, false};
    std::size_t d = 0;
    while (d < n && ++digits[d] == grid) digits[d++] = 0;
    if (d == n) break;
  }
  return {std::nullopt, true};
}

}  // namespace semibrick
