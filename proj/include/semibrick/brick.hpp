#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semibrick/homext.hpp"

namespace semibrick {

// A finite-dimensional algebra given by a basis of morphisms and structure
// constants. The product x * y is the composite "apply y, then x" (matrix
// order); table[i][j] holds the coordinates of basis[i] * basis[j].
class AlgebraPresentation {
 public:
  explicit AlgebraPresentation(std::vector<Morphism> basis);

  std::size_t dimension() const { return basis_.size(); }
  const Field& field() const { return field_; }
  const std::vector<Morphism>& basis() const { return basis_; }
  const std::vector<std::vector<Vector>>& table() const { return table_; }
  const Vector& unit() const { return unit_; }

  // Coordinates of an element of the span of the basis (InvalidInput otherwise).
  Vector coordinates(const Morphism& m) const;
  Morphism element(const Vector& coords) const;
  Vector multiply(const Vector& x, const Vector& y) const;
  // Left multiplication by x as a dimension x dimension matrix.
  Matrix left_multiplication(const Vector& x) const;

  bool is_associative() const;
  bool is_unital() const;

  // Radical via the trace form tr(L_{xy}); valid in characteristic 0 only.
  std::optional<Subspace> trace_radical() const;

 private:
  Field field_;
  std::vector<Morphism> basis_;
  std::vector<std::size_t> pick_;  // coordinates where the flattened basis is invertible
  Matrix pick_inverse_;
  std::vector<std::vector<Vector>> table_;
  Vector unit_;
};

AlgebraPresentation end_algebra(const Rep& m);

enum class BrickStatus { certified_brick, local_not_certified, not_brick };
const char* to_string(BrickStatus s);

struct BrickReport {
  BrickStatus status = BrickStatus::not_brick;
  std::size_t end_dim = 0;
  std::optional<std::size_t> radical_dim;
  std::optional<std::size_t> residue_dim;
  std::optional<Morphism> idempotent;  // nontrivial idempotent when not a brick
  std::string evidence;
};

BrickReport is_brick(const Rep& m);

struct SemiBrickCert {
  std::vector<Rep> members;
  std::vector<std::vector<std::size_t>> hom_table;  // hom_table[i][j] = dim Hom(members[i], members[j])
  std::vector<std::vector<std::size_t>> ext_table;
  std::vector<BrickStatus> brick_flags;
  bool assumed = false;  // accepted in assume-brick mode

  std::size_t size() const { return members.size(); }
  const Field& field() const { return members.front().field(); }
  std::shared_ptr<const Quiver> quiver_ptr() const { return members.front().quiver_ptr(); }
  std::optional<std::size_t> index_of(const Rep& r) const;
};

struct SemiBrickCheck {
  std::optional<SemiBrickCert> certificate;
  std::string refusal;
  std::optional<std::pair<std::size_t, std::size_t>> violating_pair;
  // Tables are filled whenever they could be computed, even on refusal.
  std::vector<std::vector<std::size_t>> hom_table;
  std::vector<std::vector<std::size_t>> ext_table;
  std::vector<BrickReport> bricks;
};

// With assume_brick, members that are not certified (but not refuted either)
// are accepted and the certificate is marked.
SemiBrickCheck check_semibrick(const std::vector<Rep>& members, bool assume_brick = false);

// Throws InvalidInput carrying the refusal message.
SemiBrickCert require_semibrick(const std::vector<Rep>& members, bool assume_brick = false);

}  // namespace semibrick
