#include "semibrick/brick.hpp"

#include <algorithm>
#include <random>

#include "semibrick/errors.hpp"

namespace semibrick {

AlgebraPresentation::AlgebraPresentation(std::vector<Morphism> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) return;
  field_ = basis_.front().source().field();
  const std::size_t n = basis_.size();
  const std::size_t flat = basis_.front().flatten().size();
  Matrix b(field_, flat, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto v = basis_[j].flatten();
    for (std::size_t i = 0; i < flat; ++i) b.at(i, j) = v[i];
  }
  pick_ = rref(b.transpose()).pivot_columns;
  if (pick_.size() != n) throw InvalidInput("algebra basis is linearly dependent");
  Matrix square(field_, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) square.at(r, j) = b(pick_[r], j);
  pick_inverse_ = *semibrick::inverse(square);

  table_.assign(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table_[i][j] = coordinates(basis_[j].then(basis_[i]));
  unit_ = coordinates(Morphism::identity(basis_.front().source()));
}

Vector AlgebraPresentation::coordinates(const Morphism& m) const {
  const std::size_t n = basis_.size();
  if (n == 0) {
    if (!m.is_zero()) throw InvalidInput("element not in the zero algebra");
    return {};
  }
  auto flat = m.flatten();
  Vector picked(n);
  for (std::size_t r = 0; r < n; ++r) picked[r] = flat[pick_[r]];
  Vector c = pick_inverse_.apply(picked);
  if (!(element(c).flatten() == flat)) throw InvalidInput("morphism is not in the span of the algebra basis");
  return c;
}

Morphism AlgebraPresentation::element(const Vector& coords) const {
  if (coords.size() != basis_.size() || basis_.empty()) throw ShapeError("algebra coordinate vector has the wrong length");
  Morphism out = basis_.front().scaled(coords[0]);
  for (std::size_t k = 1; k < basis_.size(); ++k)
    if (coords[k] != 0) out = out + basis_[k].scaled(coords[k]);
  return out;
}

Vector AlgebraPresentation::multiply(const Vector& x, const Vector& y) const {
  const std::size_t n = basis_.size();
  Vector out(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      Scalar c = field_.mul(x[i], y[j]);
      for (std::size_t k = 0; k < n; ++k)
        if (table_[i][j][k] != 0) out[k] = field_.add(out[k], field_.mul(c, table_[i][j][k]));
    }
  }
  return out;
}

Matrix AlgebraPresentation::left_multiplication(const Vector& x) const {
  const std::size_t n = basis_.size();
  Matrix l(field_, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n, Scalar(0));
    e[j] = 1;
    auto col = multiply(x, e);
    for (std::size_t k = 0; k < n; ++k) l.at(k, j) = col[k];
  }
  return l;
}

bool AlgebraPresentation::is_associative() const {
  const std::size_t n = basis_.size();
  auto unit_vec = [&](std::size_t i) {
    Vector e(n, Scalar(0));
    e[i] = 1;
    return e;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (multiply(multiply(unit_vec(i), unit_vec(j)), unit_vec(k)) !=
            multiply(unit_vec(i), multiply(unit_vec(j), unit_vec(k))))
          return false;
  return true;
}

bool AlgebraPresentation::is_unital() const {
  const std::size_t n = basis_.size();
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n, Scalar(0));
    e[i] = 1;
    if (multiply(unit_, e) != e || multiply(e, unit_) != e) return false;
  }
  return true;
}

std::optional<Subspace> AlgebraPresentation::trace_radical() const {
  if (!field_.is_rationals()) return std::nullopt;
  const std::size_t n = basis_.size();
  // tr(L_{b_k}) = sum_j table[k][j][j]
  Vector trace(n, Scalar(0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) trace[k] += table_[k][j][j];
  Matrix form(field_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar s = 0;
      for (std::size_t k = 0; k < n; ++k) s += table_[i][j][k] * trace[k];
      form.at(i, j) = s;
    }
  return Subspace::from_vectors(field_, n, nullspace_basis(form));
}

AlgebraPresentation end_algebra(const Rep& m) { return AlgebraPresentation(hom_basis(m, m)); }

const char* to_string(BrickStatus s) {
  switch (s) {
    case BrickStatus::certified_brick: return "certified_brick";
    case BrickStatus::local_not_certified: return "local_not_certified";
    case BrickStatus::not_brick: return "not_brick";
  }
  return "?";
}

namespace {

Matrix power(const Matrix& m, std::size_t k) {
  Matrix out = Matrix::identity(m.field(), m.rows());
  for (std::size_t i = 0; i < k; ++i) out = out * m;
  return out;
}

bool is_nilpotent(const Morphism& f) {
  for (const auto& b : f.blocks())
    if (!power(b, b.rows()).is_zero()) return false;
  return true;
}

bool is_unit(const Morphism& f) {
  return std::all_of(f.blocks().begin(), f.blocks().end(), [](const Matrix& b) { return is_invertible(b); });
}

// Fitting decomposition: for g = f^N the image and kernel of g are
// complementary subrepresentations; the projection onto the image along the
// kernel is an idempotent endomorphism.
Morphism fitting_idempotent(const Morphism& f) {
  const Rep& m = f.source();
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < f.blocks().size(); ++v) {
    Matrix g = power(f.block(v), m.dim(v));
    Matrix im = Subspace::column_span(g).basis_columns();
    Matrix ker = nullspace_matrix(g);
    Matrix change = Matrix::hstack(im, ker);
    Matrix diag(m.field(), m.dim(v), m.dim(v));
    for (std::size_t i = 0; i < im.cols(); ++i) diag.at(i, i) = 1;
    blocks.push_back(change * diag * *semibrick::inverse(change));
  }
  return Morphism(m, m, std::move(blocks));
}

}  // namespace

BrickReport is_brick(const Rep& m) {
  BrickReport r;
  if (m.is_zero()) {
    r.evidence = "zero representation";
    return r;
  }
  auto algebra = end_algebra(m);
  r.end_dim = algebra.dimension();
  if (r.end_dim == 1) {
    r.status = BrickStatus::certified_brick;
    r.evidence = "End is one-dimensional (scalars)";
    return r;
  }

  // A local finite-dimensional algebra has only units and nilpotents.
  std::vector<Morphism> candidates = algebra.basis();
  const auto& basis = algebra.basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) candidates.push_back(basis[i] + basis[j]);
  std::mt19937_64 rng(0xb41c);
  std::uniform_int_distribution<long> dist(-3, 3);
  for (int t = 0; t < 16; ++t) {
    Vector c(basis.size());
    for (auto& x : c) x = m.field().from_int(dist(rng));
    if (std::any_of(c.begin(), c.end(), [](const Scalar& s) { return s != 0; })) candidates.push_back(algebra.element(c));
  }
  for (const auto& f : candidates) {
    if (is_unit(f) || is_nilpotent(f)) continue;
    r.status = BrickStatus::not_brick;
    r.idempotent = fitting_idempotent(f);
    r.evidence = "nontrivial idempotent exhibited (End is not local)";
    return r;
  }

  r.status = BrickStatus::local_not_certified;
  if (auto rad = algebra.trace_radical()) {
    r.radical_dim = rad->dim();
    r.residue_dim = r.end_dim - rad->dim();
    r.evidence = "no nontrivial idempotent found; trace-form radical has dimension " + std::to_string(*r.radical_dim) +
                 ", residue dimension " + std::to_string(*r.residue_dim);
  } else {
    r.evidence = "no nontrivial idempotent found; radical not computed in positive characteristic";
  }
  return r;
}

std::optional<std::size_t> SemiBrickCert::index_of(const Rep& r) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == r) return i;
  return std::nullopt;
}

SemiBrickCheck check_semibrick(const std::vector<Rep>& members, bool assume_brick) {
  SemiBrickCheck out;
  if (members.empty()) {
    out.refusal = "empty member list";
    return out;
  }
  for (const auto& m : members)
    if (!m.compatible_with(members.front())) throw UsageError("semi-brick members over different quivers or fields");

  const std::size_t n = members.size();
  for (const auto& m : members) out.bricks.push_back(is_brick(m));
  out.hom_table.assign(n, std::vector<std::size_t>(n, 0));
  out.ext_table.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.hom_table[i][j] = hom_dim(members[i], members[j]);
      out.ext_table[i][j] = ext_dim(members[i], members[j]);
    }

  for (std::size_t i = 0; i < n; ++i) {
    const auto status = out.bricks[i].status;
    if (status == BrickStatus::not_brick) {
      out.refusal = "member " + std::to_string(i) + " is not a brick (" + out.bricks[i].evidence + ")";
      out.violating_pair = std::make_pair(i, i);
      return out;
    }
    if (status == BrickStatus::local_not_certified && !assume_brick) {
      out.refusal = "member " + std::to_string(i) + " is not a certified brick (dim End = " +
                    std::to_string(out.bricks[i].end_dim) + "); rerun in assume-brick mode to proceed";
      out.violating_pair = std::make_pair(i, i);
      return out;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (out.hom_table[i][j] == 0 && out.hom_table[j][i] == 0) continue;
      out.violating_pair = std::make_pair(i, j);
      if (is_isomorphic(members[i], members[j]).isomorphic())
        out.refusal = "members " + std::to_string(i) + " and " + std::to_string(j) + " are isomorphic";
      else
        out.refusal = "members " + std::to_string(i) + " and " + std::to_string(j) + " are not Hom-orthogonal";
      return out;
    }

  SemiBrickCert cert;
  cert.members = members;
  cert.hom_table = out.hom_table;
  cert.ext_table = out.ext_table;
  for (const auto& b : out.bricks) cert.brick_flags.push_back(b.status);
  cert.assumed = std::any_of(cert.brick_flags.begin(), cert.brick_flags.end(),
                             [](BrickStatus s) { return s != BrickStatus::certified_brick; });
  out.certificate = std::move(cert);
  return out;
}

SemiBrickCert require_semibrick(const std::vector<Rep>& members, bool assume_brick) {
  auto check = check_semibrick(members, assume_brick);
  if (!check.certificate) throw InvalidInput("not a semi-brick: " + check.refusal);
  return std::move(*check.certificate);
}

}  // namespace semibrick
