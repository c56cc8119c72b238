#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace semibrick {

// Elements of either field are stored as GMP rationals. Over F_p the value is
// always an integer in [0, p).
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);
  // Accepts "Q", "QQ", "rationals", "0", a prime "p" or "Fp".
  static Field parse(std::string_view spec);

  bool is_rationals() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const;
  // Maps an arbitrary rational into the field; over F_p the denominator must
  // be invertible.
  Scalar normalize(const Scalar& v) const;
  bool contains(const Scalar& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  // "p/q" or "n" over Q; decimal in [0, p) over F_p.
  std::string format(const Scalar& v) const;
  Scalar parse_element(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_ints(Field field, std::size_t rows, std::size_t cols,
                          const std::vector<long>& row_major);
  static Matrix column(Field field, const Vector& v);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  // Raw access; values written here must already be field elements.
  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const Scalar& v) { at(r, c) = field_.normalize(v); }
  const std::vector<Scalar>& entries() const { return data_; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix block_diagonal(Field field, const std::vector<Matrix>& blocks);

  Vector column_vector(std::size_t c) const;
  Vector apply(const Vector& v) const;

  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  void require_same_field(const Matrix& rhs, const char* op) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0}; one vector per free column, with that entry set to 1.
std::vector<Vector> nullspace_basis(const Matrix& m);
// Same basis packed as the columns of a cols x nullity matrix.
Matrix nullspace_matrix(const Matrix& m);
// Particular solution X of a X = b (free variables zero), if consistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

// A linear subspace of F^n kept as the nonzero rows of a reduced row-echelon
// basis. The non-pivot coordinates give canonical complement/quotient bases.
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient);
  // Span of the columns of `generators` (ambient = generators.rows()).
  static Subspace column_span(const Matrix& generators);
  static Subspace from_vectors(Field field, std::size_t ambient, const std::vector<Vector>& vs);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  std::size_t codim() const { return ambient_ - pivots_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<std::size_t>& free_coordinates() const { return free_; }

  // ambient x dim matrix whose columns are the canonical basis.
  Matrix basis_columns() const;
  // Remove the pivot components; the result lies in the span of the free
  // coordinate vectors and is zero iff v is in the subspace.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains_columns(const Matrix& m) const;
  // Coordinates of the class of v in ambient / subspace w.r.t. free coordinates.
  Vector quotient_coordinates(const Vector& v) const;
  // codim x ambient matrix of v -> quotient_coordinates(v).
  Matrix quotient_projection() const;
  // ambient x codim matrix of the standard vectors at free coordinates.
  Matrix complement_inclusion() const;

  bool operator==(const Subspace& other) const;
  bool is_subspace_of(const Subspace& other) const;

 private:
  void finish(const Matrix& reduced, const std::vector<std::size_t>& pivots);

  Field field_;
  std::size_t ambient_ = 0;
  Matrix rows_;  // dim x ambient
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_;
};

}  // namespace semibrick
