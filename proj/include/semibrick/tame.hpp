#pragma once

#include <optional>
#include <vector>

#include "semibrick/universal.hpp"

namespace semibrick {

// Kronecker quiver K_r: vertices "1", "2" and r arrows 2 -> 1 named a, b, ...
// (a1 .. ar beyond 26). UsageError for r = 0.
Quiver kronecker(std::size_t r);

// A point of the projective line: a field element or infinity.
struct PointOnLine {
  std::optional<Scalar> value;  // empty means infinity
  static PointOnLine at(const Scalar& v) { return PointOnLine{v}; }
  static PointOnLine infinity() { return PointOnLine{std::nullopt}; }
  bool is_infinity() const { return !value; }
};

// The (1,1) representation of K_r with arrow scalars (1, l, l^2, ...), or
// (0, ..., 0, 1) at infinity.
Rep kronecker_point(std::shared_ptr<const Quiver> kr, const Field& field, const PointOnLine& p);

// Quasi-simple regular K_2 module R_l: arrow maps (1, l), or (0, 1) at infinity.
Rep quasi_simple(const Field& field, const PointOnLine& p);

struct PreprojectiveLevel {
  DimVector dims;
  long defect = 0;
  BrickStatus brick = BrickStatus::not_brick;
  std::size_t end_dim = 0;
  bool socle_zero = false;
};

struct PreprojectiveReport {
  Tower tower;
  std::vector<PreprojectiveLevel> levels;
  bool all_hold = false;  // defect -1, certified brick and zero socle at every level
  FiltrationResult quotient_membership;  // P_X(r) / P in Filt(sb)
};

// InapplicableError unless the quiver is tame, defect(P) = -1 and every member
// looks quasi-simple (defect 0, certified brick, dim Ext(X, X) = 1).
PreprojectiveReport preprojective_tower_report(const Rep& p, const SemiBrickCert& sb, std::size_t levels,
                                               const TowerOptions& opts = {});

}  // namespace semibrick
