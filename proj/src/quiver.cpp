#include "semibrick/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "semibrick/errors.hpp"
#include "semibrick/scalar.hpp"

namespace semibrick {

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows,
               std::string name)
    : name_(std::move(name)), vertices_(std::move(vertices)) {
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (v.empty()) throw InvalidInput("empty vertex id", "vertices");
    if (!seen.insert(v).second) throw InvalidInput("duplicate vertex id '" + v + "'", "vertices");
  }
  std::set<std::string> arrow_ids;
  for (const auto& a : arrows) {
    if (a.id.empty()) throw InvalidInput("empty arrow id", "arrows");
    if (!arrow_ids.insert(a.id).second) throw InvalidInput("duplicate arrow id '" + a.id + "'", "arrows");
    auto s = find_vertex(a.source);
    auto t = find_vertex(a.target);
    if (!s || !t) throw InvalidInput("arrow '" + a.id + "' has an undeclared endpoint", "arrows/" + a.id);
    if (*s == *t) throw InvalidInput("arrow '" + a.id + "' is a loop", "arrows/" + a.id);
    arrows_.push_back({a.id, *s, *t});
  }

  // Kahn's algorithm; ties broken by vertex order for determinism.
  std::vector<std::size_t> indeg(vertices_.size(), 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<bool> done(vertices_.size(), false);
  while (topo_.size() < vertices_.size()) {
    std::size_t pick = vertices_.size();
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (!done[v] && indeg[v] == 0) {
        pick = v;
        break;
      }
    if (pick == vertices_.size()) throw InvalidInput("quiver has an oriented cycle", "arrows");
    done[pick] = true;
    topo_.push_back(pick);
    for (const auto& a : arrows_)
      if (a.source == pick) --indeg[a.target];
  }
}

Quiver Quiver::linear(std::size_t n) {
  if (n == 0) throw UsageError("linear quiver needs at least one vertex");
  std::vector<std::string> vs;
  std::vector<ArrowSpec> as;
  for (std::size_t i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
  for (std::size_t i = 1; i < n; ++i)
    as.push_back({"a" + std::to_string(i), std::to_string(i + 1), std::to_string(i)});
  return Quiver(vs, as, "A" + std::to_string(n));
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::vertex_index(const std::string& id) const {
  auto v = find_vertex(id);
  if (!v) throw UsageError("unknown vertex '" + id + "'");
  return *v;
}

std::size_t Quiver::arrow_index(const std::string& id) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].id == id) return i;
  throw UsageError("unknown arrow '" + id + "'");
}

std::vector<std::vector<long>> Quiver::path_counts() const {
  const std::size_t n = vertices_.size();
  std::vector<std::vector<long>> paths(n, std::vector<long>(n, 0));
  for (std::size_t v = 0; v < n; ++v) {
    paths[v][v] = 1;
    for (auto w : topo_)
      for (const auto& a : arrows_)
        if (a.source == w) paths[v][a.target] += paths[v][w];
  }
  return paths;
}

bool Quiver::is_connected() const {
  if (vertices_.empty()) return false;
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : arrows_) parent[find(a.source)] = find(a.target);
  for (std::size_t v = 1; v < vertices_.size(); ++v)
    if (find(v) != find(0)) return false;
  return true;
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const auto &x = a.arrows_[i], &y = b.arrows_[i];
    if (x.id != y.id || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

const char* to_string(RepresentationType t) {
  switch (t) {
    case RepresentationType::finite: return "finite";
    case RepresentationType::tame: return "tame";
    case RepresentationType::wild: return "wild";
  }
  return "?";
}

namespace {

void check_length(const Quiver& q, const DimVector& x) {
  if (x.size() != q.vertex_count())
    throw UsageError("dimension vector has " + std::to_string(x.size()) + " entries, quiver has " +
                     std::to_string(q.vertex_count()) + " vertices");
}

enum class Definiteness { positive_definite, positive_semidefinite, indefinite };

// Symmetric elimination over Q. A zero pivot forces a zero row for
// semidefiniteness.
Definiteness classify(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  bool degenerate = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] < 0) return Definiteness::indefinite;
    if (a[k][k] == 0) {
      for (std::size_t j = k + 1; j < n; ++j)
        if (a[k][j] != 0) return Definiteness::indefinite;
      degenerate = true;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      Scalar f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return degenerate ? Definiteness::positive_semidefinite : Definiteness::positive_definite;
}

}  // namespace

long euler_form(const Quiver& q, const DimVector& x, const DimVector& y) {
  check_length(q, x);
  check_length(q, y);
  long s = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) s += x[v] * y[v];
  for (const auto& a : q.arrows()) s -= x[a.source] * y[a.target];
  return s;
}

std::vector<std::vector<long>> symmetrized_euler_matrix(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (std::size_t v = 0; v < n; ++v) m[v][v] = 2;
  for (const auto& a : q.arrows()) {
    m[a.source][a.target] -= 1;
    m[a.target][a.source] -= 1;
  }
  return m;
}

std::optional<DimVector> radical_vector(const Quiver& q) {
  auto sym = symmetrized_euler_matrix(q);
  if (classify(sym) != Definiteness::positive_semidefinite) return std::nullopt;
  const std::size_t n = q.vertex_count();
  std::vector<long> flat;
  for (const auto& row : sym) flat.insert(flat.end(), row.begin(), row.end());
  auto kernel = nullspace_basis(Matrix::from_ints(Field::rationals(), n, n, flat));
  if (kernel.size() != 1) return std::nullopt;
  mpz_class lcm = 1;
  for (const auto& c : kernel[0]) lcm = lcm * c.get_den() / gcd(lcm, c.get_den());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& c : kernel[0]) {
    mpz_class v = c.get_num() * (lcm / c.get_den());
    ints.push_back(v);
    g = gcd(g, v);
  }
  DimVector h;
  bool negative = ints.front() < 0 || (ints.front() == 0 && std::any_of(ints.begin(), ints.end(), [](auto& v) { return v < 0; }));
  for (auto& v : ints) {
    mpz_class w = v / g;
    if (negative) w = -w;
    if (w <= 0) return std::nullopt;
    h.push_back(w.get_si());
  }
  return h;
}

RepresentationType representation_type(const Quiver& q) {
  if (!q.is_connected()) throw InapplicableError("representation type requires a connected quiver");
  auto sym = symmetrized_euler_matrix(q);
  switch (classify(sym)) {
    case Definiteness::positive_definite: return RepresentationType::finite;
    case Definiteness::positive_semidefinite: return RepresentationType::tame;
    case Definiteness::indefinite: return RepresentationType::wild;
  }
  return RepresentationType::wild;
}

DimVector projective_dims(const Quiver& q, std::size_t v) {
  auto paths = q.path_counts();
  return DimVector(paths[v].begin(), paths[v].end());
}

DimVector injective_dims(const Quiver& q, std::size_t v) {
  auto paths = q.path_counts();
  DimVector d(q.vertex_count());
  for (std::size_t w = 0; w < q.vertex_count(); ++w) d[w] = paths[w][v];
  return d;
}

long defect(const Quiver& q, const DimVector& x) {
  check_length(q, x);
  auto h = radical_vector(q);
  if (!h) throw InapplicableError("defect is only defined for tame quivers");
  long g = 0;
  std::vector<long> on_projectives;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    long value = euler_form(q, *h, projective_dims(q, v));
    on_projectives.push_back(value);
    g = std::gcd(g, value);
  }
  if (g == 0) throw UsageError("radical vector pairs trivially with every projective");
  long sign = std::any_of(on_projectives.begin(), on_projectives.end(), [](long v) { return v > 0; }) ? -1 : 1;
  return sign * euler_form(q, *h, x) / g;
}

}  // namespace semibrick
