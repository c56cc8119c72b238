#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace semibrick {

struct Arrow {
  std::string id;
  std::size_t source;  // vertex index
  std::size_t target;  // vertex index
};

struct ArrowSpec {
  std::string id;
  std::string source;
  std::string target;
};

// Dimension vectors are indexed like Quiver::vertices().
using DimVector = std::vector<long>;

// A finite acyclic quiver. Construction rejects oriented cycles, unknown
// endpoints and duplicate ids.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows,
         std::string name = {});

  // Linear A_n with arrows i+1 -> i, vertices "1".."n".
  static Quiver linear(std::size_t n);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  std::size_t vertex_index(const std::string& id) const;
  std::optional<std::size_t> find_vertex(const std::string& id) const;
  std::size_t arrow_index(const std::string& id) const;

  // Vertices ordered so every arrow goes from an earlier to a later vertex.
  const std::vector<std::size_t>& topological_order() const { return topo_; }
  // paths[v][w] = number of paths from v to w (including the trivial path).
  std::vector<std::vector<long>> path_counts() const;
  bool is_connected() const;

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  std::string name_;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> topo_;
};

enum class RepresentationType { finite, tame, wild };
const char* to_string(RepresentationType t);

// <x, y> = sum_v x_v y_v - sum_a x_{s(a)} y_{t(a)}.
long euler_form(const Quiver& q, const DimVector& x, const DimVector& y);

// Matrix of (x, y) = <x, y> + <y, x>.
std::vector<std::vector<long>> symmetrized_euler_matrix(const Quiver& q);

// Primitive positive generator of the radical of the symmetrized form when
// that form is positive semidefinite with a one-dimensional radical.
std::optional<DimVector> radical_vector(const Quiver& q);

// Throws InapplicableError for disconnected quivers.
RepresentationType representation_type(const Quiver& q);

DimVector projective_dims(const Quiver& q, std::size_t v);
DimVector injective_dims(const Quiver& q, std::size_t v);

// <h, x> divided by the gcd of its values on the indecomposable projectives and
// sign-fixed so projectives are nonpositive. Throws InapplicableError off the tame
// case.
long defect(const Quiver& q, const DimVector& x);

}  // namespace semibrick
