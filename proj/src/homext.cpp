#include "semibrick/homext.hpp"

#include <algorithm>

#include "semibrick/errors.hpp"
#include "semibrick/linsys.hpp"

namespace semibrick {

namespace {

void require_compatible(const Rep& m, const Rep& n, const char* what) {
  if (!m.compatible_with(n)) throw UsageError(std::string(what) + ": representations over different quivers or fields");
}

// Intertwining system for Hom(m, n); unknown v is the block at vertex v.
LinearSystem hom_system(const Rep& m, const Rep& n) {
  const auto& q = m.quiver();
  LinearSystem sys(m.field());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) sys.add_unknown(n.dim(v), m.dim(v));
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    sys.add_homogeneous({{std::nullopt, arrow.target, m.map(a), 1}, {n.map(a), arrow.source, std::nullopt, -1}},
                        n.dim(arrow.target), m.dim(arrow.source));
  }
  return sys;
}

struct Splitting {
  std::vector<Matrix> section;     // quot_v -> middle_v, proj * section = 1
  std::vector<Matrix> retraction;  // middle_v -> sub_v, retraction * incl = 1, retraction * section = 0
};

Splitting vertex_splitting(const ShortExactSequence& ses) {
  Splitting s;
  const Field& f = ses.middle().field();
  for (std::size_t v = 0; v < ses.middle().quiver().vertex_count(); ++v) {
    auto sec = solve(ses.proj().block(v), Matrix::identity(f, ses.quot().dim(v)));
    if (!sec) throw Error("projection is not surjective");
    auto inv = inverse(Matrix::hstack(ses.incl().block(v), *sec));
    if (!inv) throw Error("sequence is not exact");
    s.retraction.push_back(inv->block(0, 0, ses.sub().dim(v), ses.middle().dim(v)));
    s.section.push_back(std::move(*sec));
  }
  return s;
}

}  // namespace

std::vector<Morphism> hom_basis(const Rep& m, const Rep& n) {
  require_compatible(m, n, "hom_basis");
  auto sol = hom_system(m, n).solve();
  std::vector<Morphism> out;
  for (auto& blocks : sol->homogeneous) out.push_back(make_morphism_unchecked(m, n, std::move(blocks)));
  return out;
}

std::size_t hom_dim(const Rep& m, const Rep& n) {
  require_compatible(m, n, "hom_dim");
  auto sys = hom_system(m, n);
  return sys.variable_count() - rank(sys.coefficients());
}

Matrix coboundary_matrix(const Rep& m, const Rep& n) {
  require_compatible(m, n, "coboundary_matrix");
  return hom_system(m, n).coefficients();
}

// ---------------------------------------------------------------------------

ExtCocycle::ExtCocycle(Rep from, Rep to, std::vector<Matrix> components)
    : from_(std::move(from)), to_(std::move(to)), components_(std::move(components)) {
  require_compatible(from_, to_, "cocycle");
  const auto& q = from_.quiver();
  if (components_.size() != q.arrow_count()) throw ShapeError("one cocycle component per arrow required");
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    if (components_[a].rows() != to_.dim(arrow.target) || components_[a].cols() != from_.dim(arrow.source))
      throw ShapeError("cocycle component has the wrong shape", "cocycle/" + arrow.id);
  }
}

ExtCocycle ExtCocycle::zero(const Rep& from, const Rep& to) {
  std::vector<Matrix> comps;
  for (const auto& arrow : from.quiver().arrows())
    comps.emplace_back(from.field(), to.dim(arrow.target), from.dim(arrow.source));
  return ExtCocycle(from, to, std::move(comps));
}

ExtCocycle ExtCocycle::from_flat(const Rep& from, const Rep& to, const Vector& flat) {
  std::vector<Matrix> comps;
  std::size_t pos = 0;
  for (const auto& arrow : from.quiver().arrows()) {
    Matrix c(from.field(), to.dim(arrow.target), from.dim(arrow.source));
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) {
        if (pos >= flat.size()) throw ShapeError("cocycle vector too short");
        c.at(i, j) = flat[pos++];
      }
    comps.push_back(std::move(c));
  }
  if (pos != flat.size()) throw ShapeError("cocycle vector too long");
  return ExtCocycle(from, to, std::move(comps));
}

Vector ExtCocycle::flatten() const {
  Vector out;
  for (const auto& c : components_) out.insert(out.end(), c.entries().begin(), c.entries().end());
  return out;
}

ExtCocycle ExtCocycle::pulled_back(const Morphism& f) const {
  if (!(f.target() == from_)) throw UsageError("pullback: morphism does not end at the cocycle's quotient term");
  std::vector<Matrix> comps;
  for (std::size_t a = 0; a < components_.size(); ++a)
    comps.push_back(components_[a] * f.block(from_.quiver().arrows()[a].source));
  return ExtCocycle(f.source(), to_, std::move(comps));
}

ExtCocycle ExtCocycle::pushed_out(const Morphism& g) const {
  if (!(g.source() == to_)) throw UsageError("pushout: morphism does not start at the cocycle's sub term");
  std::vector<Matrix> comps;
  for (std::size_t a = 0; a < components_.size(); ++a)
    comps.push_back(g.block(from_.quiver().arrows()[a].target) * components_[a]);
  return ExtCocycle(from_, g.target(), std::move(comps));
}

ExtCocycle ExtCocycle::operator+(const ExtCocycle& other) const {
  std::vector<Matrix> comps;
  for (std::size_t a = 0; a < components_.size(); ++a) comps.push_back(components_[a] + other.components_[a]);
  return ExtCocycle(from_, to_, std::move(comps));
}

ExtCocycle ExtCocycle::scaled(const Scalar& s) const {
  std::vector<Matrix> comps;
  for (const auto& c : components_) comps.push_back(c.scaled(from_.field().normalize(s)));
  return ExtCocycle(from_, to_, std::move(comps));
}

ExtSpace::ExtSpace(const Rep& from, const Rep& to)
    : from_(from), to_(to), boundaries_(Subspace::column_span(coboundary_matrix(from, to))) {
  const std::size_t n = boundaries_.ambient();
  for (auto j : boundaries_.free_coordinates()) {
    Vector e(n, Scalar(0));
    e[j] = 1;
    basis_.push_back(ExtCocycle::from_flat(from_, to_, e));
  }
}

Vector ExtSpace::coordinates(const ExtCocycle& e) const {
  if (!(e.from() == from_) || !(e.to() == to_)) throw UsageError("cocycle does not belong to this Ext space");
  return boundaries_.quotient_coordinates(e.flatten());
}

bool ExtSpace::is_coboundary(const ExtCocycle& e) const {
  auto c = coordinates(e);
  return std::all_of(c.begin(), c.end(), [](const Scalar& s) { return s == 0; });
}

ExtCocycle ExtSpace::from_coordinates(const Vector& c) const {
  if (c.size() != dim()) throw ShapeError("Ext coordinate vector has the wrong length");
  Vector flat(boundaries_.ambient(), Scalar(0));
  for (std::size_t i = 0; i < c.size(); ++i) flat[boundaries_.free_coordinates()[i]] = c[i];
  return ExtCocycle::from_flat(from_, to_, flat);
}

ExtBasis ext_basis(const Rep& m, const Rep& n) {
  require_compatible(m, n, "ext_basis");
  ExtSpace space(m, n);
  return {space.basis(), space.coboundary_rank()};
}

std::size_t ext_dim(const Rep& m, const Rep& n) {
  require_compatible(m, n, "ext_dim");
  std::size_t cochains = 0;
  for (const auto& arrow : m.quiver().arrows()) cochains += n.dim(arrow.target) * m.dim(arrow.source);
  return cochains - rank(coboundary_matrix(m, n));
}

// ---------------------------------------------------------------------------

ShortExactSequence::ShortExactSequence(Morphism incl, Morphism proj) : incl_(std::move(incl)), proj_(std::move(proj)) {
  if (!(incl_.target() == proj_.source())) throw InvalidInput("sequence: inclusion target differs from projection source");
  if (!incl_.then(proj_).is_zero()) throw InvalidInput("sequence: composite is not zero");
  if (!incl_.is_injective()) throw InvalidInput("sequence: first map is not injective");
  if (!proj_.is_surjective()) throw InvalidInput("sequence: second map is not surjective");
  for (std::size_t v = 0; v < sub().dims().size(); ++v)
    if (middle().dims()[v] != sub().dims()[v] + quot().dims()[v]) throw InvalidInput("sequence: not exact in the middle");
}

ShortExactSequence extension_middle(const Rep& quot, const Rep& sub, const ExtCocycle& e) {
  if (!(e.from() == quot) || !(e.to() == sub)) throw ShapeError("extension: cocycle endpoints do not match");
  const auto& q = quot.quiver();
  const Field& f = quot.field();
  DimVector dims;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims.push_back(sub.dims()[v] + quot.dims()[v]);
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    Matrix m(f, static_cast<std::size_t>(dims[arrow.target]), static_cast<std::size_t>(dims[arrow.source]));
    m.set_block(0, 0, sub.map(a));
    m.set_block(0, sub.dim(arrow.source), e.component(a));
    m.set_block(sub.dim(arrow.target), sub.dim(arrow.source), quot.map(a));
    maps.push_back(std::move(m));
  }
  Rep middle(quot.quiver_ptr(), f, dims, std::move(maps));
  std::vector<Matrix> inc, pro;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Matrix i(f, middle.dim(v), sub.dim(v));
    i.set_block(0, 0, Matrix::identity(f, sub.dim(v)));
    Matrix p(f, quot.dim(v), middle.dim(v));
    p.set_block(0, sub.dim(v), Matrix::identity(f, quot.dim(v)));
    inc.push_back(std::move(i));
    pro.push_back(std::move(p));
  }
  return ShortExactSequence(make_morphism_unchecked(sub, middle, std::move(inc)),
                            make_morphism_unchecked(middle, quot, std::move(pro)));
}

ExtCocycle cocycle_of(const ShortExactSequence& ses) {
  auto split = vertex_splitting(ses);
  const auto& q = ses.middle().quiver();
  std::vector<Matrix> comps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    comps.push_back(split.retraction[arrow.target] * ses.middle().map(a) * split.section[arrow.source]);
  }
  return ExtCocycle(ses.quot(), ses.sub(), std::move(comps));
}

InducedSequence pullback(const ShortExactSequence& ses, const Morphism& f) {
  if (!(f.target() == ses.quot())) throw UsageError("pullback: morphism target is not the quotient term");
  auto split = vertex_splitting(ses);
  auto c = cocycle_of(ses).pulled_back(f);
  auto induced = extension_middle(f.source(), ses.sub(), c);
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < f.blocks().size(); ++v)
    blocks.push_back(Matrix::hstack(ses.incl().block(v), split.section[v] * f.block(v)));
  Morphism comparison(induced.middle(), ses.middle(), std::move(blocks));
  return {std::move(induced), std::move(comparison)};
}

InducedSequence pushout(const ShortExactSequence& ses, const Morphism& g) {
  if (!(g.source() == ses.sub())) throw UsageError("pushout: morphism source is not the sub term");
  auto split = vertex_splitting(ses);
  auto c = cocycle_of(ses).pushed_out(g);
  auto induced = extension_middle(ses.quot(), g.target(), c);
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < g.blocks().size(); ++v)
    blocks.push_back(Matrix::vstack(g.block(v) * split.retraction[v], ses.proj().block(v)));
  Morphism comparison(ses.middle(), induced.middle(), std::move(blocks));
  return {std::move(induced), std::move(comparison)};
}

Matrix connecting_map(const ShortExactSequence& ses, const Rep& x) {
  require_compatible(x, ses.quot(), "connecting_map");
  auto c = cocycle_of(ses);
  auto homs = hom_basis(x, ses.quot());
  ExtSpace ext(x, ses.sub());
  Matrix delta(x.field(), ext.dim(), homs.size());
  for (std::size_t j = 0; j < homs.size(); ++j) {
    auto coords = ext.coordinates(c.pulled_back(homs[j]));
    for (std::size_t i = 0; i < coords.size(); ++i) delta.at(i, j) = coords[i];
  }
  return delta;
}

std::optional<Morphism> retraction(const ShortExactSequence& ses) {
  const Rep& s = ses.sub();
  const Rep& e = ses.middle();
  const auto& q = s.quiver();
  LinearSystem sys(s.field());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) sys.add_unknown(s.dim(v), e.dim(v));
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    sys.add_homogeneous({{std::nullopt, arrow.target, e.map(a), 1}, {s.map(a), arrow.source, std::nullopt, -1}},
                        s.dim(arrow.target), e.dim(arrow.source));
  }
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    sys.add_equation({{std::nullopt, v, ses.incl().block(v), 1}}, Matrix::identity(s.field(), s.dim(v)));
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return make_morphism_unchecked(e, s, std::move(sol->particular));
}

bool is_split(const ShortExactSequence& ses) { return retraction(ses).has_value(); }

namespace {

// Unknowns: F_v (0..n-1) middle2 -> middle, g_v (n..2n-1) quot2 -> quot.
LinearSystem ladder_system(const ShortExactSequence& e, const ShortExactSequence& e2, const Morphism& sub_map) {
  const auto& q = e.middle().quiver();
  const std::size_t n = q.vertex_count();
  LinearSystem sys(e.middle().field());
  for (std::size_t v = 0; v < n; ++v) sys.add_unknown(e.middle().dim(v), e2.middle().dim(v));
  for (std::size_t v = 0; v < n; ++v) sys.add_unknown(e.quot().dim(v), e2.quot().dim(v));
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    sys.add_homogeneous({{std::nullopt, arrow.target, e2.middle().map(a), 1},
                         {e.middle().map(a), arrow.source, std::nullopt, -1}},
                        e.middle().dim(arrow.target), e2.middle().dim(arrow.source));
    sys.add_homogeneous({{std::nullopt, n + arrow.target, e2.quot().map(a), 1},
                         {e.quot().map(a), n + arrow.source, std::nullopt, -1}},
                        e.quot().dim(arrow.target), e2.quot().dim(arrow.source));
  }
  for (std::size_t v = 0; v < n; ++v) {
    sys.add_equation({{std::nullopt, v, e2.incl().block(v), 1}}, e.incl().block(v) * sub_map.block(v));
    sys.add_homogeneous({{e.proj().block(v), v, std::nullopt, 1}, {std::nullopt, n + v, e2.proj().block(v), -1}},
                        e.quot().dim(v), e2.middle().dim(v));
  }
  return sys;
}

}  // namespace

EquivalenceResult ses_equivalent(const ShortExactSequence& e, const ShortExactSequence& e2,
                                 const std::optional<Morphism>& sub_map) {
  EquivalenceResult out;
  if (!e.middle().compatible_with(e2.middle())) throw UsageError("ses_equivalent: sequences over different quivers or fields");
  if (e.middle().dims() != e2.middle().dims() || e.quot().dims() != e2.quot().dims() ||
      e.sub().dims() != e2.sub().dims()) {
    out.verdict = Verdict::no;
    out.diagnostic = "dimension vectors differ";
    return out;
  }
  Morphism h = sub_map ? *sub_map : Morphism::identity(e.sub());
  if (!sub_map && !(e.sub() == e2.sub()))
    throw UsageError("ses_equivalent: sub terms differ; supply an identification of the sub terms");
  if (!(h.source() == e2.sub()) || !(h.target() == e.sub()))
    throw UsageError("ses_equivalent: sub map must go from the second sub term to the first");

  const std::size_t n = e.middle().quiver().vertex_count();
  auto forward = ladder_system(e, e2, h).solve();
  if (!forward) {
    out.verdict = Verdict::no;
    out.diagnostic = "no morphism of sequences exists (second class is not a pullback of the first)";
    return out;
  }

  // Reverse direction: an equivalence has an inverse, so an empty reverse
  // system also refutes.
  if (auto h_inv = h.inverse()) {
    if (!ladder_system(e2, e, *h_inv).solve()) {
      out.verdict = Verdict::no;
      out.diagnostic = "no morphism of sequences exists in the reverse direction";
      return out;
    }
  } else {
    out.verdict = Verdict::no;
    out.diagnostic = "sub map is not invertible";
    return out;
  }

  LinearSystem shape = ladder_system(e, e2, h);
  auto accept = [&](const Vector& flat) {
    auto blocks = shape.unpack(flat);
    for (std::size_t v = 0; v < n; ++v)
      if (!is_invertible(blocks[v])) return false;
    return true;
  };
  auto found = search_affine(e.middle().field(), forward->particular_flat, forward->homogeneous_flat, accept,
                             e.middle().total_dim());
  if (found.point) {
    auto blocks = shape.unpack(*found.point);
    std::vector<Matrix> fb(blocks.begin(), blocks.begin() + static_cast<long>(n));
    std::vector<Matrix> gb(blocks.begin() + static_cast<long>(n), blocks.end());
    out.verdict = Verdict::yes;
    out.middle_iso = make_morphism_unchecked(e2.middle(), e.middle(), std::move(fb));
    out.quot_iso = make_morphism_unchecked(e2.quot(), e.quot(), std::move(gb));
  } else if (found.certified) {
    out.verdict = Verdict::no;
    out.diagnostic = "morphisms of sequences exist but none is invertible (certified grid search)";
  } else {
    out.verdict = Verdict::inconclusive;
    out.diagnostic = "no invertible morphism of sequences found";
  }
  return out;
}

}  // namespace semibrick
