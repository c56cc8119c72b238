#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semibrick/quiver.hpp"
#include "semibrick/scalar.hpp"

namespace semibrick {

// A finite-dimensional representation. Arrow a: s -> t carries a matrix of
// shape dims[t] x dims[s] acting on column vectors.
class Rep {
 public:
  Rep(std::shared_ptr<const Quiver> quiver, Field field, DimVector dims, std::vector<Matrix> arrow_maps);

  static Rep zero(std::shared_ptr<const Quiver> quiver, Field field);

  const Quiver& quiver() const { return *quiver_; }
  const std::shared_ptr<const Quiver>& quiver_ptr() const { return quiver_; }
  const Field& field() const { return field_; }
  const DimVector& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return static_cast<std::size_t>(dims_[v]); }
  std::size_t total_dim() const;
  const Matrix& map(std::size_t arrow) const { return maps_[arrow]; }
  const std::vector<Matrix>& maps() const { return maps_; }
  bool is_zero() const { return total_dim() == 0; }

  // Same quiver (by value) and field.
  bool compatible_with(const Rep& other) const;
  friend bool operator==(const Rep& a, const Rep& b);

 private:
  std::shared_ptr<const Quiver> quiver_;
  Field field_;
  DimVector dims_;
  std::vector<Matrix> maps_;
};

// f: source -> target, one block per vertex of shape target.dim(v) x source.dim(v).
class Morphism {
 public:
  // Validates shapes and the intertwining relation; IntertwiningError names
  // the first failing arrow.
  Morphism(Rep source, Rep target, std::vector<Matrix> blocks);

  static Morphism identity(const Rep& m);
  static Morphism zero(const Rep& source, const Rep& target);

  const Rep& source() const { return source_; }
  const Rep& target() const { return target_; }
  const Matrix& block(std::size_t v) const { return blocks_[v]; }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  // Left-to-right composition: this first, then `next` (blocks next_v * this_v).
  Morphism then(const Morphism& next) const;
  Morphism operator+(const Morphism& other) const;
  Morphism scaled(const Scalar& s) const;

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;
  std::optional<Morphism> inverse() const;

  // Blocks flattened vertex by vertex, row-major.
  Vector flatten() const;

  friend bool operator==(const Morphism& a, const Morphism& b);

 private:
  struct Unchecked {};
  Morphism(Unchecked, Rep source, Rep target, std::vector<Matrix> blocks);
  friend Morphism make_morphism_unchecked(Rep, Rep, std::vector<Matrix>);

  Rep source_;
  Rep target_;
  std::vector<Matrix> blocks_;
};

// Internal fast path for morphisms that hold by construction.
Morphism make_morphism_unchecked(Rep source, Rep target, std::vector<Matrix> blocks);

// First failing arrow of the intertwining relation, if any.
std::optional<std::size_t> intertwining_failure(const Rep& source, const Rep& target,
                                                const std::vector<Matrix>& blocks);

struct SubrepInclusion {
  Rep sub;
  Morphism inclusion;  // full column rank at every vertex
  const Rep& ambient() const { return inclusion.target(); }
  std::vector<Subspace> spaces() const;
};

struct Quotient {
  Rep rep;
  Morphism projection;  // full row rank at every vertex
  // Canonical lift: standard basis vectors at the free coordinates.
  std::vector<Matrix> sections;
};

struct DirectSum {
  Rep sum;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};

DirectSum direct_sum(const std::vector<Rep>& parts);
// Requires a nonempty list or explicit quiver/field; zero parts give the zero rep.
DirectSum direct_sum(const std::vector<Rep>& parts, std::shared_ptr<const Quiver> quiver, Field field);

// Subrepresentation spanned by vertexwise subspaces, which must be
// arrow-invariant (InvalidInput otherwise).
SubrepInclusion subrep(const Rep& m, const std::vector<Subspace>& spaces);
Quotient quotient(const Rep& m, const std::vector<Subspace>& spaces);

SubrepInclusion kernel(const Morphism& f);
struct ImageFactorization {
  SubrepInclusion image;
  Morphism corestriction;  // source -> image.sub, with corestriction.then(inclusion) == f
};
ImageFactorization image(const Morphism& f);
Quotient cokernel(const Morphism& f);

enum class StandardKind { simple, projective, injective };
Rep standard_module(std::shared_ptr<const Quiver> quiver, Field field, StandardKind kind, std::size_t v);

// Whether `sub` (as columns in `inclusion`) lies inside the other inclusion,
// vertexwise.
bool factors_through(const Morphism& inclusion, const Morphism& other_inclusion);

enum class Verdict { yes, no, inconclusive };
const char* to_string(Verdict v);

struct IsoResult {
  Verdict verdict = Verdict::inconclusive;
  std::optional<Morphism> witness;
  std::string diagnostic;
  bool isomorphic() const { return verdict == Verdict::yes; }
};

IsoResult is_isomorphic(const Rep& m, const Rep& n);

}  // namespace semibrick
