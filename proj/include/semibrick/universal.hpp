#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "semibrick/filtration.hpp"

namespace semibrick {

constexpr std::size_t kDefaultDimensionBudget = 512;

// Classes of Ext(x, y) that are independent over End(x): a class is kept only
// if it is outside the End(x)-span of those already kept. With End(x) = k this
// is a k-basis. Throws InapplicableError unless x is a certified brick or
// assume_brick is set.
std::vector<ExtCocycle> end_basis_of_ext(const Rep& x, const Rep& y, bool assume_brick = false);

struct UniversalOptions {
  // When set, every member's basis is replaced by a random invertible
  // recombination plus random coboundaries (deterministic per seed).
  std::optional<std::uint64_t> basis_seed;
};

struct UniversalSequence {
  ShortExactSequence ses;                 // 0 -> Y -> M -> (+)_X X^{m_X} -> 0
  std::vector<std::size_t> multiplicities;  // per member, in member order
};

UniversalSequence universal_sequence(const Rep& y, const SemiBrickCert& sb, const UniversalOptions& opts = {});

struct UniversalityReport {
  struct Member {
    std::size_t hom_dim = 0;  // dim Hom(X, quot)
    std::size_t ext_dim = 0;  // dim Ext(X, sub)
    std::size_t rank = 0;     // rank of the connecting map
    bool invertible = false;
  };
  bool universal = false;
  std::vector<Member> members;
};

// InapplicableError when the quotient term is not a direct sum of members.
UniversalityReport is_universal(const ShortExactSequence& ses, const SemiBrickCert& sb);

struct TowerOptions {
  std::size_t budget = kDefaultDimensionBudget;
  std::optional<std::uint64_t> basis_seed;
};

// Y(1) = base, Y(i+1) the middle of the universal sequence starting at Y(i).
// Every middle is in block form, so Y(i) is spanned by the leading
// coordinates of Y(j) for i <= j.
struct Tower {
  Rep base;
  SemiBrickCert semibrick;
  std::vector<Rep> modules;                 // Y(1), ..., Y(r)
  std::vector<UniversalSequence> levels;    // levels[i]: 0 -> Y(i+1) -> Y(i+2) -> ...  (0-based i)

  std::size_t size() const { return modules.size(); }
  // Inclusion modules[i] -> modules[j] for i <= j (0-based).
  Morphism inclusion(std::size_t i, std::size_t j) const;
};

// BudgetExceeded when a level's total dimension would exceed opts.budget.
Tower tower(const Rep& y, const SemiBrickCert& sb, std::size_t levels, const TowerOptions& opts = {});

struct PsiMap {
  Matrix matrix;  // End(Y(i+1)) coordinates -> End(Y(i)) coordinates
  bool preserves_sub = false;
  bool surjective = false;
  bool unital = false;
  bool multiplicative = false;
};

struct EndTowerLevel {
  AlgebraPresentation algebra;
  Subspace ideal;  // {f : f restricted to Y(1) is zero}, in algebra coordinates
  bool ideal_two_sided = false;
  std::size_t nilpotency_index = 0;  // least k with I^k = 0, 0 if none
  std::size_t residue_dim = 0;
  bool kernel_matches_ideal = false;  // kernel of the composite restriction to End(Y(1)) equals the ideal
  std::optional<std::size_t> trace_radical_dim;
  bool local = false;
};

struct EndTower {
  std::vector<EndTowerLevel> levels;
  std::vector<PsiMap> psi;  // psi[i]: End(modules[i+1]) -> End(modules[i])
};

// InapplicableError unless the base is a member of the semi-brick.
EndTower end_ring_tower(const Tower& t);

struct UniserialReport {
  bool uniserial = true;
  struct Pair {
    std::size_t j, i;  // quotient Y(i) / Y(j), with Y(0) = 0
    std::size_t hom_dim = 0;  // summed over members
    bool images_match = true;  // every basis homomorphism has image Y(j+1) / Y(j)
  };
  std::vector<Pair> pairs;
};

// InapplicableError unless dim Ext(Y, Y) = 1 and Ext(X, Y) = 0 for the other
// members, Y the base.
UniserialReport uniserial_check(const Tower& t);

// Every homomorphism from a member into the top of the tower lands in Y(1).
bool hom_property_holds(const Tower& t);

struct EnvelopeReport {
  bool all_die = true;
  // per level, per member: number of Ext classes checked, number split after pushout
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> counts;
};

// For every level i < r and member X, each basis class of Ext(X, Y(i)) pushed
// out along Y(i) -> Y(i+1) splits.
EnvelopeReport envelope_check(const Tower& t);

}  // namespace semibrick
