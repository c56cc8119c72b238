#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semibrick/brick.hpp"

namespace semibrick {

SubrepInclusion x_socle(const Rep& m, const SemiBrickCert& sb);

struct SemisimpleDecomposition {
  bool ok = false;
  std::vector<std::size_t> multiplicities;  // per member
  // On success: (+)_i members[i]^{m_i} -> L, an isomorphism.
  std::optional<Morphism> witness;
  std::string diagnostic;
};

SemisimpleDecomposition decompose_semisimple(const Rep& l, const SemiBrickCert& sb);

struct FiltrationLayer {
  Rep subquotient;  // chain[i+1] / chain[i]
  std::vector<std::size_t> multiplicities;
  Morphism witness;  // (+) members^{mult} -> subquotient, invertible
};

struct Filtration {
  Rep ambient;
  // chain[0] = 0 ... chain.back() = ambient, each included into ambient.
  std::vector<SubrepInclusion> chain;
  std::vector<FiltrationLayer> layers;
  std::vector<DimVector> chain_dims() const;
};

struct FiltrationResult {
  bool complete = false;
  Filtration filtration;  // partial chain on refusal
  std::string refusal;
  // On a stall: the offending quotient's dims and dim Hom(X_i, quotient).
  std::optional<DimVector> stalled_quotient_dims;
  std::vector<std::size_t> stalled_hom_dims;
};

// V_0 = 0, V_{i+1} / V_i = x_socle(M / V_i). Stops on reaching M or when a
// quotient has zero socle or a layer fails to decompose.
FiltrationResult x_socle_filtration(const Rep& m, const SemiBrickCert& sb);

// Accepts exactly when x_socle_filtration completes and the witness
// re-verifies.
FiltrationResult filt_membership(const Rep& m, const SemiBrickCert& sb);

// Independent re-check: strict chain of inclusions from 0 to the ambient,
// every layer witness an isomorphism from the stated direct sum onto the
// recomputed subquotient.
bool verify_filtration(const Filtration& f, const SemiBrickCert& sb);

// Whether f maps chain step i of the source filtration into chain step i of
// the target filtration for every i (steps beyond the end count as the whole
// module).
bool maps_filtration_into(const Morphism& f, const Filtration& source, const Filtration& target);

// Exchange summand k of `sum` for a subrepresentation: the assembled map
// (+)_{i != k} parts_i (+) Y -> sum, from the remaining injections and the
// inclusion of Y. An isomorphism when Y is isomorphic to a member and its
// projection onto summand k is nonzero.
Morphism steinitz_exchange(const DirectSum& sum, const Morphism& y_inclusion, std::size_t k);

}  // namespace semibrick
