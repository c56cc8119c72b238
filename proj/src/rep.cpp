#include "semibrick/rep.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "semibrick/errors.hpp"
#include "semibrick/homext.hpp"
#include "semibrick/linsys.hpp"

namespace semibrick {

Rep::Rep(std::shared_ptr<const Quiver> quiver, Field field, DimVector dims, std::vector<Matrix> arrow_maps)
    : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)), maps_(std::move(arrow_maps)) {
  if (!quiver_) throw UsageError("representation without a quiver");
  if (dims_.size() != quiver_->vertex_count())
    throw ShapeError("dimension vector length does not match the vertex count", "dims");
  for (std::size_t v = 0; v < dims_.size(); ++v)
    if (dims_[v] < 0) throw ShapeError("negative dimension", "dims/" + quiver_->vertices()[v]);
  if (maps_.size() != quiver_->arrow_count()) throw ShapeError("one matrix per arrow required", "maps");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const auto& arrow = quiver_->arrows()[a];
    const auto& m = maps_[a];
    if (m.rows() != dim(arrow.target) || m.cols() != dim(arrow.source))
      throw ShapeError("matrix for arrow '" + arrow.id + "' has shape " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + ", expected " + std::to_string(dim(arrow.target)) + "x" +
                           std::to_string(dim(arrow.source)),
                       "maps/" + arrow.id);
    if (!(m.field() == field_)) throw InvalidInput("matrix over the wrong field", "maps/" + arrow.id);
  }
}

Rep Rep::zero(std::shared_ptr<const Quiver> quiver, Field field) {
  DimVector dims(quiver->vertex_count(), 0);
  std::vector<Matrix> maps(quiver->arrow_count(), Matrix(field, 0, 0));
  return Rep(std::move(quiver), field, std::move(dims), std::move(maps));
}

std::size_t Rep::total_dim() const {
  return static_cast<std::size_t>(std::accumulate(dims_.begin(), dims_.end(), 0L));
}

bool Rep::compatible_with(const Rep& other) const {
  return field_ == other.field_ && (quiver_ == other.quiver_ || *quiver_ == *other.quiver_);
}

bool operator==(const Rep& a, const Rep& b) {
  return a.compatible_with(b) && a.dims_ == b.dims_ && a.maps_ == b.maps_;
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> intertwining_failure(const Rep& source, const Rep& target,
                                                const std::vector<Matrix>& blocks) {
  const auto& q = source.quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    if (!(blocks[arrow.target] * source.map(a) == target.map(a) * blocks[arrow.source])) return a;
  }
  return std::nullopt;
}

Morphism::Morphism(Unchecked, Rep source, Rep target, std::vector<Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {}

Morphism make_morphism_unchecked(Rep source, Rep target, std::vector<Matrix> blocks) {
  return Morphism(Morphism::Unchecked{}, std::move(source), std::move(target), std::move(blocks));
}

Morphism::Morphism(Rep source, Rep target, std::vector<Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  if (!source_.compatible_with(target_)) throw UsageError("morphism between representations of different quivers or fields");
  const auto& q = source_.quiver();
  if (blocks_.size() != q.vertex_count()) throw ShapeError("one block per vertex required", "blocks");
  for (std::size_t v = 0; v < blocks_.size(); ++v) {
    if (blocks_[v].rows() != target_.dim(v) || blocks_[v].cols() != source_.dim(v))
      throw ShapeError("block has the wrong shape", "blocks/" + q.vertices()[v]);
    if (!(blocks_[v].field() == source_.field()))
      throw InvalidInput("block over the wrong field", "blocks/" + q.vertices()[v]);
  }
  if (auto a = intertwining_failure(source_, target_, blocks_))
    throw IntertwiningError("blocks do not intertwine along arrow '" + q.arrows()[*a].id + "'",
                            "arrows/" + q.arrows()[*a].id);
}

Morphism Morphism::identity(const Rep& m) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v) blocks.push_back(Matrix::identity(m.field(), m.dim(v)));
  return make_morphism_unchecked(m, m, std::move(blocks));
}

Morphism Morphism::zero(const Rep& source, const Rep& target) {
  if (!source.compatible_with(target)) throw UsageError("zero morphism between incompatible representations");
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < source.quiver().vertex_count(); ++v)
    blocks.emplace_back(source.field(), target.dim(v), source.dim(v));
  return make_morphism_unchecked(source, target, std::move(blocks));
}

Morphism Morphism::then(const Morphism& next) const {
  if (!(target_.dims() == next.source_.dims()) || !target_.compatible_with(next.source_))
    throw UsageError("composition: target and source differ");
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < blocks_.size(); ++v) blocks.push_back(next.blocks_[v] * blocks_[v]);
  return make_morphism_unchecked(source_, next.target_, std::move(blocks));
}

Morphism Morphism::operator+(const Morphism& other) const {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < blocks_.size(); ++v) blocks.push_back(blocks_[v] + other.blocks_[v]);
  return make_morphism_unchecked(source_, target_, std::move(blocks));
}

Morphism Morphism::scaled(const Scalar& s) const {
  std::vector<Matrix> blocks;
  for (const auto& b : blocks_) blocks.push_back(b.scaled(source_.field().normalize(s)));
  return make_morphism_unchecked(source_, target_, std::move(blocks));
}

bool Morphism::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Matrix& b) { return b.is_zero(); });
}

bool Morphism::is_injective() const {
  for (std::size_t v = 0; v < blocks_.size(); ++v)
    if (rank(blocks_[v]) != source_.dim(v)) return false;
  return true;
}

bool Morphism::is_surjective() const {
  for (std::size_t v = 0; v < blocks_.size(); ++v)
    if (rank(blocks_[v]) != target_.dim(v)) return false;
  return true;
}

bool Morphism::is_isomorphism() const { return source_.dims() == target_.dims() && is_injective(); }

std::optional<Morphism> Morphism::inverse() const {
  std::vector<Matrix> inv;
  for (const auto& b : blocks_) {
    auto i = semibrick::inverse(b);
    if (!i) return std::nullopt;
    inv.push_back(std::move(*i));
  }
  return make_morphism_unchecked(target_, source_, std::move(inv));
}

Vector Morphism::flatten() const {
  Vector out;
  for (const auto& b : blocks_) out.insert(out.end(), b.entries().begin(), b.entries().end());
  return out;
}

bool operator==(const Morphism& a, const Morphism& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.blocks_ == b.blocks_;
}

std::vector<Subspace> SubrepInclusion::spaces() const {
  std::vector<Subspace> out;
  for (const auto& b : inclusion.blocks()) out.push_back(Subspace::column_span(b));
  return out;
}

// ---------------------------------------------------------------------------

DirectSum direct_sum(const std::vector<Rep>& parts, std::shared_ptr<const Quiver> quiver, Field field) {
  for (const auto& p : parts)
    if (!(p.field() == field) || !(p.quiver() == *quiver))
      throw UsageError("direct sum of representations over different quivers or fields");
  const std::size_t nv = quiver->vertex_count();
  DimVector dims(nv, 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < nv; ++v) dims[v] += p.dims()[v];
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < quiver->arrow_count(); ++a) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.map(a));
    maps.push_back(Matrix::block_diagonal(field, blocks));
  }
  Rep sum(quiver, field, dims, std::move(maps));

  DirectSum out{sum, {}, {}};
  DimVector offset(nv, 0);
  for (const auto& p : parts) {
    std::vector<Matrix> inj, proj;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix i(field, sum.dim(v), p.dim(v));
      i.set_block(static_cast<std::size_t>(offset[v]), 0, Matrix::identity(field, p.dim(v)));
      proj.push_back(i.transpose());
      inj.push_back(std::move(i));
      offset[v] += p.dims()[v];
    }
    out.injections.push_back(make_morphism_unchecked(p, sum, std::move(inj)));
    out.projections.push_back(make_morphism_unchecked(sum, p, std::move(proj)));
  }
  return out;
}

DirectSum direct_sum(const std::vector<Rep>& parts) {
  if (parts.empty()) throw UsageError("direct sum of an empty list needs an explicit quiver and field");
  return direct_sum(parts, parts.front().quiver_ptr(), parts.front().field());
}

SubrepInclusion subrep(const Rep& m, const std::vector<Subspace>& spaces) {
  const auto& q = m.quiver();
  if (spaces.size() != q.vertex_count()) throw ShapeError("one subspace per vertex required");
  std::vector<Matrix> bases;
  DimVector dims;
  for (std::size_t v = 0; v < spaces.size(); ++v) {
    if (spaces[v].ambient() != m.dim(v)) throw ShapeError("subspace ambient dimension mismatch");
    bases.push_back(spaces[v].basis_columns());
    dims.push_back(static_cast<long>(spaces[v].dim()));
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    auto induced = solve(bases[arrow.target], m.map(a) * bases[arrow.source]);
    if (!induced) throw InvalidInput("subspaces are not invariant under arrow '" + arrow.id + "'");
    maps.push_back(std::move(*induced));
  }
  Rep sub(m.quiver_ptr(), m.field(), dims, std::move(maps));
  return {sub, make_morphism_unchecked(sub, m, std::move(bases))};
}

Quotient quotient(const Rep& m, const std::vector<Subspace>& spaces) {
  const auto& q = m.quiver();
  if (spaces.size() != q.vertex_count()) throw ShapeError("one subspace per vertex required");
  std::vector<Matrix> proj, sect;
  DimVector dims;
  for (std::size_t v = 0; v < spaces.size(); ++v) {
    proj.push_back(spaces[v].quotient_projection());
    sect.push_back(spaces[v].complement_inclusion());
    dims.push_back(static_cast<long>(spaces[v].codim()));
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    maps.push_back(proj[arrow.target] * m.map(a) * sect[arrow.source]);
  }
  Rep quot(m.quiver_ptr(), m.field(), dims, std::move(maps));
  // Validated: a non-invariant family is rejected here.
  Morphism projection(m, quot, std::move(proj));
  return {quot, std::move(projection), std::move(sect)};
}

SubrepInclusion kernel(const Morphism& f) {
  std::vector<Subspace> spaces;
  for (std::size_t v = 0; v < f.blocks().size(); ++v)
    spaces.push_back(Subspace::from_vectors(f.source().field(), f.source().dim(v), nullspace_basis(f.block(v))));
  return subrep(f.source(), spaces);
}

ImageFactorization image(const Morphism& f) {
  std::vector<Subspace> spaces;
  for (const auto& b : f.blocks()) spaces.push_back(Subspace::column_span(b));
  auto inc = subrep(f.target(), spaces);
  std::vector<Matrix> co;
  for (std::size_t v = 0; v < f.blocks().size(); ++v) {
    auto c = solve(inc.inclusion.block(v), f.block(v));
    if (!c) throw Error("image: corestriction failed");
    co.push_back(std::move(*c));
  }
  Morphism corestriction = make_morphism_unchecked(f.source(), inc.sub, std::move(co));
  return {std::move(inc), std::move(corestriction)};
}

Quotient cokernel(const Morphism& f) {
  std::vector<Subspace> spaces;
  for (const auto& b : f.blocks()) spaces.push_back(Subspace::column_span(b));
  return quotient(f.target(), spaces);
}

bool factors_through(const Morphism& inclusion, const Morphism& other_inclusion) {
  for (std::size_t v = 0; v < inclusion.blocks().size(); ++v)
    if (!Subspace::column_span(other_inclusion.block(v)).contains_columns(inclusion.block(v))) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

using Path = std::vector<std::size_t>;  // arrow indices in order of traversal

std::vector<std::vector<Path>> paths_from(const Quiver& q, std::size_t v) {
  std::vector<std::vector<Path>> by_end(q.vertex_count());
  std::vector<std::pair<std::size_t, Path>> stack{{v, {}}};
  while (!stack.empty()) {
    auto [w, p] = stack.back();
    stack.pop_back();
    by_end[w].push_back(p);
    for (std::size_t a = q.arrow_count(); a-- > 0;)
      if (q.arrows()[a].source == w) {
        Path next = p;
        next.push_back(a);
        stack.emplace_back(q.arrows()[a].target, std::move(next));
      }
  }
  for (auto& ps : by_end) std::sort(ps.begin(), ps.end());
  return by_end;
}

std::size_t index_of(const std::vector<Path>& ps, const Path& p) {
  return static_cast<std::size_t>(std::lower_bound(ps.begin(), ps.end(), p) - ps.begin());
}

}  // namespace

Rep standard_module(std::shared_ptr<const Quiver> quiver, Field field, StandardKind kind, std::size_t v) {
  const auto& q = *quiver;
  if (v >= q.vertex_count()) throw UsageError("unknown vertex index " + std::to_string(v));
  const std::size_t nv = q.vertex_count();
  DimVector dims(nv, 0);
  std::vector<Matrix> maps;

  if (kind == StandardKind::simple) {
    dims[v] = 1;
    for (const auto& a : q.arrows()) maps.emplace_back(field, dims[a.target], dims[a.source]);
    return Rep(quiver, field, dims, std::move(maps));
  }

  if (kind == StandardKind::projective) {
    // P(v)_w has the paths v -> w as basis; arrow a appends itself.
    auto by_end = paths_from(q, v);
    for (std::size_t w = 0; w < nv; ++w) dims[w] = static_cast<long>(by_end[w].size());
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const auto& arrow = q.arrows()[a];
      Matrix m(field, by_end[arrow.target].size(), by_end[arrow.source].size());
      for (std::size_t j = 0; j < by_end[arrow.source].size(); ++j) {
        Path ext = by_end[arrow.source][j];
        ext.push_back(a);
        m.at(index_of(by_end[arrow.target], ext), j) = 1;
      }
      maps.push_back(std::move(m));
    }
    return Rep(quiver, field, dims, std::move(maps));
  }

  // I(v)_w has the paths w -> v as basis; arrow a strips a leading a.
  std::vector<std::vector<Path>> to_v(nv);
  for (std::size_t w = 0; w < nv; ++w) {
    auto from_w = paths_from(q, w);
    to_v[w] = from_w[v];
    dims[w] = static_cast<long>(to_v[w].size());
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    Matrix m(field, to_v[arrow.target].size(), to_v[arrow.source].size());
    for (std::size_t j = 0; j < to_v[arrow.source].size(); ++j) {
      const Path& p = to_v[arrow.source][j];
      if (p.empty() || p.front() != a) continue;
      Path rest(p.begin() + 1, p.end());
      m.at(index_of(to_v[arrow.target], rest), j) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Rep(quiver, field, dims, std::move(maps));
}

// ---------------------------------------------------------------------------

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

IsoResult is_isomorphic(const Rep& m, const Rep& n) {
  if (!m.compatible_with(n)) throw UsageError("isomorphism test between incompatible representations");
  IsoResult out;
  if (m.dims() != n.dims()) {
    out.verdict = Verdict::no;
    out.diagnostic = "dimension vectors differ";
    return out;
  }
  if (m.is_zero()) {
    out.verdict = Verdict::yes;
    out.witness = make_morphism_unchecked(m, n, Morphism::zero(m, n).blocks());
    return out;
  }
  auto basis = hom_basis(m, n);
  if (basis.empty()) {
    out.verdict = Verdict::no;
    out.diagnostic = "Hom(M, N) = 0";
    return out;
  }
  // Hom(M, -) and Hom(-, N) dimensions are isomorphism invariants.
  const std::size_t hmm = hom_dim(m, m), hnn = hom_dim(n, n), hnm = hom_dim(n, m);
  if (basis.size() != hmm || hnm != hnn || hmm != hnn) {
    out.verdict = Verdict::no;
    out.diagnostic = "Hom dimension invariants differ";
    return out;
  }

  std::vector<Vector> dirs;
  for (const auto& b : basis) dirs.push_back(b.flatten());
  Vector origin(dirs.front().size(), Scalar(0));
  auto as_blocks = [&](const Vector& flat) {
    std::vector<Matrix> blocks;
    std::size_t pos = 0;
    for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v) {
      Matrix b(m.field(), n.dim(v), m.dim(v));
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) b.at(i, j) = flat[pos++];
      blocks.push_back(std::move(b));
    }
    return blocks;
  };
  auto accept = [&](const Vector& flat) {
    auto blocks = as_blocks(flat);
    return std::all_of(blocks.begin(), blocks.end(), [](const Matrix& b) { return is_invertible(b); });
  };
  auto found = search_affine(m.field(), origin, dirs, accept, m.total_dim());
  if (found.point) {
    out.verdict = Verdict::yes;
    out.witness = make_morphism_unchecked(m, n, as_blocks(*found.point));
  } else if (found.certified) {
    out.verdict = Verdict::no;
    out.diagnostic = "exhaustive search over a certifying grid found no invertible homomorphism";
  } else {
    out.verdict = Verdict::inconclusive;
    out.diagnostic = "no invertible homomorphism found among " + std::to_string(basis.size()) +
                     "-parameter combinations tried";
  }
  return out;
}

}  // namespace semibrick
