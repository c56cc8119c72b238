#include "semibrick/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "semibrick/errors.hpp"

namespace semibrick {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

mpz_class mod(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw UsageError("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  std::string s(spec);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "q" || s == "qq" || s == "rationals" || s == "0") return rationals();
  std::string digits = s;
  if (!digits.empty() && digits[0] == 'f') digits.erase(0, 1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 10)
    throw UsageError("unrecognised field '" + std::string(spec) + "' (expected Q or a prime)");
  unsigned long long p = std::stoull(digits);
  if (p > std::numeric_limits<std::int32_t>::max()) throw UsageError("field characteristic too large");
  return prime(static_cast<std::uint32_t>(p));
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Scalar Field::from_int(long v) const { return normalize(Scalar(v)); }

Scalar Field::normalize(const Scalar& v) const {
  if (p_ == 0) {
    Scalar c = v;
    c.canonicalize();
    return c;
  }
  mpz_class num = mod(v.get_num(), p_);
  mpz_class den = mod(v.get_den(), p_);
  if (den == 0) throw InvalidInput("denominator not invertible in " + name());
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p_).get_mpz_t());
    num = mod(num * inv, p_);
  }
  return Scalar(num);
}

bool Field::contains(const Scalar& v) const {
  if (p_ == 0) return true;
  return v.get_den() == 1 && v >= 0 && v < p_;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  mpz_class r = a.get_num() + b.get_num();
  if (r >= p_) r -= p_;
  return Scalar(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  mpz_class r = a.get_num() - b.get_num();
  if (r < 0) r += p_;
  return Scalar(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  return Scalar(mod(a.get_num() * b.get_num(), p_));
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  if (a == 0) return a;
  return Scalar(mpz_class(p_) - a.get_num());
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw Error("division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), mpz_class(p_).get_mpz_t());
  return Scalar(r);
}

std::string Field::format(const Scalar& v) const { return v.get_str(); }

Scalar Field::parse_element(std::string_view text) const {
  std::string s(text);
  auto bad = [&] { return ParseError("malformed field element '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto integral = [](const std::string& t, bool allow_sign) {
    std::size_t i = (allow_sign && !t.empty() && t[0] == '-') ? 1 : 0;
    return i < t.size() && std::all_of(t.begin() + static_cast<long>(i), t.end(), ::isdigit);
  };
  if (p_ != 0) {
    if (!integral(s, false)) throw bad();
    Scalar v{mpz_class(s)};
    if (!contains(v)) throw InvalidInput("element " + s + " not in [0, " + std::to_string(p_) + ")");
    return v;
  }
  if (slash == std::string::npos) {
    if (!integral(s, true)) throw bad();
    return Scalar(mpz_class(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!integral(num, true) || !integral(den, false)) throw bad();
  mpz_class d(den);
  if (d == 0) throw bad();
  Scalar v(mpz_class(num), d);
  v.canonicalize();
  return v;
}

// ---------------------------------------------------------------------------

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_ints(Field field, std::size_t rows, std::size_t cols,
                         const std::vector<long>& row_major) {
  if (row_major.size() != rows * cols) throw ShapeError("from_ints: entry count mismatch");
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < row_major.size(); ++i) m.data_[i] = field.from_int(row_major[i]);
  return m;
}

Matrix Matrix::column(Field field, const Vector& v) {
  Matrix m(field, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.data_[i] = v[i];
  return m;
}

void Matrix::require_same_field(const Matrix& rhs, const char* op) const {
  if (!(field_ == rhs.field_)) throw UsageError(std::string(op) + ": matrices over different fields");
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_field(rhs, "multiply");
  if (cols_ != rhs.rows_) throw ShapeError("multiply: inner dimensions differ");
  Matrix out(field_, rows_, rhs.cols_);
  if (field_.is_rationals()) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j)
          if (rhs(k, j) != 0) out.at(i, j) += a * rhs(k, j);
      }
    return out;
  }
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        if (rhs(k, j) != 0) out.at(i, j) = field_.add(out(i, j), field_.mul(a, rhs(k, j)));
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_field(rhs, "add");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("add: shapes differ");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require_same_field(rhs, "subtract");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("subtract: shapes differ");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.neg(data_[i]);
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.mul(data_[i], s);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
  Matrix out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out.at(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require_same_field(b, "set_block");
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeError("set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  a.require_same_field(b, "hstack");
  if (a.rows_ != b.rows_) throw ShapeError("hstack: row counts differ");
  Matrix out(a.field_, a.rows_, a.cols_ + b.cols_);
  out.set_block(0, 0, a);
  out.set_block(0, a.cols_, b);
  return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  a.require_same_field(b, "vstack");
  if (a.cols_ != b.cols_) throw ShapeError("vstack: column counts differ");
  Matrix out(a.field_, a.rows_ + b.rows_, a.cols_);
  out.set_block(0, 0, a);
  out.set_block(a.rows_, 0, b);
  return out;
}

Matrix Matrix::block_diagonal(Field field, const std::vector<Matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) r += b.rows_, c += b.cols_;
  Matrix out(field, r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows_;
    c += b.cols_;
  }
  return out;
}

Vector Matrix::column_vector(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw ShapeError("apply: vector length mismatch");
  Vector out(rows_, Scalar(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) out[i] = field_.add(out[i], field_.mul((*this)(i, j), v[j]));
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s == 0; });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------------------

RrefResult rref(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(row, j));
    Scalar inv = f.inv(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j)
      if (a(row, j) != 0) a.at(row, j) = f.mul(a(row, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Scalar factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (a(row, j) != 0) a.at(i, j) = f.sub(a(i, j), f.mul(factor, a(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_columns.size(); }

std::vector<Vector> nullspace_basis(const Matrix& m) {
  const Field& f = m.field();
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Scalar(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix nullspace_matrix(const Matrix& m) {
  auto basis = nullspace_basis(m);
  Matrix out(m.field(), m.cols(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) out.at(i, j) = basis[j][i];
  return out;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve: row counts differ");
  auto [r, pivots] = rref(Matrix::hstack(a, b));
  for (auto p : pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.at(pivots[i], j) = r(i, a.cols() + j);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve(m, Matrix::identity(m.field(), m.rows()));
  if (!x || rank(m) != m.rows()) return std::nullopt;
  return x;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

// ---------------------------------------------------------------------------

Subspace::Subspace(Field field, std::size_t ambient)
    : field_(field), ambient_(ambient), rows_(field, 0, ambient) {
  for (std::size_t i = 0; i < ambient; ++i) free_.push_back(i);
}

Subspace Subspace::column_span(const Matrix& generators) {
  Subspace s(generators.field(), generators.rows());
  auto [r, pivots] = rref(generators.transpose());
  s.finish(r, pivots);
  return s;
}

Subspace Subspace::from_vectors(Field field, std::size_t ambient, const std::vector<Vector>& vs) {
  Matrix g(field, ambient, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (vs[j].size() != ambient) throw ShapeError("subspace generator length mismatch");
    for (std::size_t i = 0; i < ambient; ++i) g.at(i, j) = vs[j][i];
  }
  return column_span(g);
}

void Subspace::finish(const Matrix& reduced, const std::vector<std::size_t>& pivots) {
  pivots_ = pivots;
  rows_ = reduced.block(0, 0, pivots.size(), ambient_);
  free_.clear();
  std::size_t k = 0;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (k < pivots_.size() && pivots_[k] == i) {
      ++k;
      continue;
    }
    free_.push_back(i);
  }
}

Matrix Subspace::basis_columns() const { return rows_.transpose(); }

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw ShapeError("subspace: vector length mismatch");
  Vector out = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = out[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (rows_(i, j) != 0) out[j] = field_.sub(out[j], field_.mul(c, rows_(i, j)));
  }
  return out;
}

bool Subspace::contains(const Vector& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s == 0; });
}

bool Subspace::contains_columns(const Matrix& m) const {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!contains(m.column_vector(j))) return false;
  return true;
}

Vector Subspace::quotient_coordinates(const Vector& v) const {
  auto r = reduce(v);
  Vector out;
  out.reserve(free_.size());
  for (auto i : free_) out.push_back(r[i]);
  return out;
}

Matrix Subspace::quotient_projection() const {
  Matrix p(field_, free_.size(), ambient_);
  for (std::size_t k = 0; k < ambient_; ++k) {
    Vector e(ambient_, Scalar(0));
    e[k] = 1;
    auto q = quotient_coordinates(e);
    for (std::size_t i = 0; i < q.size(); ++i) p.at(i, k) = q[i];
  }
  return p;
}

Matrix Subspace::complement_inclusion() const {
  Matrix c(field_, ambient_, free_.size());
  for (std::size_t j = 0; j < free_.size(); ++j) c.at(free_[j], j) = 1;
  return c;
}

bool Subspace::operator==(const Subspace& other) const {
  return field_ == other.field_ && ambient_ == other.ambient_ && pivots_ == other.pivots_ &&
         rows_ == other.rows_;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  return other.contains_columns(basis_columns());
}

}  // namespace semibrick
