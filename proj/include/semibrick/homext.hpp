#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semibrick/rep.hpp"

namespace semibrick {

// Conventions used throughout:
//   * A morphism f: M -> N intertwines when f_t * M_a == N_a * f_s for a: s -> t.
//   * The coboundary map Phi: (+)_v Hom(M_v, N_v) -> (+)_a Hom(M_s, N_t) is
//     Phi(h)_a = h_t * M_a - N_a * h_s; Hom(M, N) = ker Phi, Ext(M, N) = coker Phi.
//   * A cocycle e in Ext(Q, S) is realised by the middle term with spaces
//     S_v (+) Q_v and arrow matrices [[S_a, e_a], [0, Q_a]].
//   * Pulling back along f: X -> Q gives the cocycle e_a * f_s; pushing out
//     along g: S -> T gives g_t * e_a.

std::vector<Morphism> hom_basis(const Rep& m, const Rep& n);
std::size_t hom_dim(const Rep& m, const Rep& n);
Matrix coboundary_matrix(const Rep& m, const Rep& n);

// An arrow-indexed family e_a: from_{s(a)} -> to_{t(a)} representing a class
// in Ext(from, to). Any family is a cocycle since path algebras are hereditary.
class ExtCocycle {
 public:
  ExtCocycle(Rep from, Rep to, std::vector<Matrix> components);
  static ExtCocycle zero(const Rep& from, const Rep& to);
  static ExtCocycle from_flat(const Rep& from, const Rep& to, const Vector& flat);

  const Rep& from() const { return from_; }
  const Rep& to() const { return to_; }
  const Matrix& component(std::size_t arrow) const { return components_[arrow]; }
  const std::vector<Matrix>& components() const { return components_; }
  Vector flatten() const;

  // Class of the pullback along f: X -> from.
  ExtCocycle pulled_back(const Morphism& f) const;
  // Class of the pushout along g: to -> T.
  ExtCocycle pushed_out(const Morphism& g) const;
  ExtCocycle operator+(const ExtCocycle& other) const;
  ExtCocycle scaled(const Scalar& s) const;

 private:
  Rep from_;
  Rep to_;
  std::vector<Matrix> components_;
};

// Ext(from, to) as the quotient of the cocycle space by the coboundaries,
// with the canonical complement of standard cocycles at the non-pivot
// coordinates of the coboundary space.
class ExtSpace {
 public:
  ExtSpace(const Rep& from, const Rep& to);

  std::size_t dim() const { return boundaries_.codim(); }
  std::size_t coboundary_rank() const { return boundaries_.dim(); }
  const std::vector<ExtCocycle>& basis() const { return basis_; }
  Vector coordinates(const ExtCocycle& e) const;
  bool is_coboundary(const ExtCocycle& e) const;
  ExtCocycle from_coordinates(const Vector& c) const;
  const Rep& from() const { return from_; }
  const Rep& to() const { return to_; }

 private:
  Rep from_;
  Rep to_;
  Subspace boundaries_;
  std::vector<ExtCocycle> basis_;
};

struct ExtBasis {
  std::vector<ExtCocycle> cocycles;
  std::size_t coboundary_rank = 0;
};

ExtBasis ext_basis(const Rep& m, const Rep& n);
std::size_t ext_dim(const Rep& m, const Rep& n);

// 0 -> sub --incl--> middle --proj--> quot -> 0
class ShortExactSequence {
 public:
  // Validates composability, incl.then(proj) == 0, injectivity, surjectivity
  // and vertexwise exactness.
  ShortExactSequence(Morphism incl, Morphism proj);

  const Rep& sub() const { return incl_.source(); }
  const Rep& middle() const { return incl_.target(); }
  const Rep& quot() const { return proj_.target(); }
  const Morphism& incl() const { return incl_; }
  const Morphism& proj() const { return proj_; }

 private:
  Morphism incl_;
  Morphism proj_;
};

ShortExactSequence extension_middle(const Rep& quot, const Rep& sub, const ExtCocycle& e);
ExtCocycle cocycle_of(const ShortExactSequence& ses);

struct InducedSequence {
  ShortExactSequence ses;
  Morphism comparison;  // pullback: new middle -> old middle; pushout: old middle -> new middle
};

InducedSequence pullback(const ShortExactSequence& ses, const Morphism& f);
InducedSequence pushout(const ShortExactSequence& ses, const Morphism& g);

// Matrix of delta: Hom(X, quot) -> Ext(X, sub) in the bases of hom_basis and
// ExtSpace(X, sub).
Matrix connecting_map(const ShortExactSequence& ses, const Rep& x);

// Decided by solving for a retraction of incl.
bool is_split(const ShortExactSequence& ses);
std::optional<Morphism> retraction(const ShortExactSequence& ses);

struct EquivalenceResult {
  Verdict verdict = Verdict::inconclusive;
  std::optional<Morphism> middle_iso;  // e2.middle -> e.middle
  std::optional<Morphism> quot_iso;    // e2.quot -> e.quot
  std::string diagnostic;
  bool equivalent() const { return verdict == Verdict::yes; }
};

// Isomorphisms F: e2.middle -> e.middle and g: e2.quot -> e.quot with
// F o incl2 = incl o sub_map and proj o F = g o proj2, where sub_map is the
// identity (subs must be equal) unless given.
EquivalenceResult ses_equivalent(const ShortExactSequence& e, const ShortExactSequence& e2,
                                 const std::optional<Morphism>& sub_map = std::nullopt);

}  // namespace semibrick
