#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "semibrick/scalar.hpp"

namespace semibrick {

// Linear equations in matrix unknowns. Each equation is
//   sum_i left_i * X_{unknown_i} * right_i = rhs
// where an absent left/right factor means the identity.
class LinearSystem {
 public:
  struct Term {
    std::optional<Matrix> left;
    std::size_t unknown;
    std::optional<Matrix> right;
    Scalar coefficient = 1;
  };

  struct Solution {
    std::vector<Matrix> particular;
    std::vector<std::vector<Matrix>> homogeneous;  // basis of the solution space of the homogeneous system
    Vector particular_flat;
    std::vector<Vector> homogeneous_flat;
  };

  explicit LinearSystem(Field field) : field_(field) {}

  std::size_t add_unknown(std::size_t rows, std::size_t cols);
  void add_equation(const std::vector<Term>& terms, const Matrix& rhs);
  void add_homogeneous(const std::vector<Term>& terms, std::size_t rows, std::size_t cols);

  std::size_t variable_count() const { return offset_.empty() ? 0 : offset_.back() + size_.back(); }
  std::vector<Matrix> unpack(const Vector& flat) const;
  // Coefficient matrix and right-hand side assembled so far.
  Matrix coefficients() const;
  Vector rhs() const { return rhs_; }

  std::optional<Solution> solve() const;

 private:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Scalar value;
  };

  Field field_;
  std::vector<std::size_t> rows_, cols_, offset_, size_;
  std::vector<Entry> entries_;
  Vector rhs_;
};

// Outcome of searching an affine space p + span(dirs) for a point satisfying
// a predicate whose failure set is cut out by a polynomial of degree at most
// `degree_bound`.
struct AffineSearch {
  std::optional<Vector> point;
  // True when absence of a point is proven (exhaustive grid or empty space).
  bool certified = false;
};

AffineSearch search_affine(const Field& field, const Vector& particular, const std::vector<Vector>& dirs,
                           const std::function<bool(const Vector&)>& accept, std::size_t degree_bound);

}  // namespace semibrick
