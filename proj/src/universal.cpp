#include "semibrick/universal.hpp"

#include <random>

#include "semibrick/errors.hpp"

namespace semibrick {

std::vector<ExtCocycle> end_basis_of_ext(const Rep& x, const Rep& y, bool assume_brick) {
  auto brick = is_brick(x);
  if (brick.status == BrickStatus::not_brick)
    throw InapplicableError("first argument is not a brick (" + brick.evidence + ")");
  if (brick.status != BrickStatus::certified_brick && !assume_brick)
    throw InapplicableError("first argument is not a certified brick; rerun in assume-brick mode");

  ExtSpace ext(x, y);
  auto ends = hom_basis(x, x);
  Subspace spanned(x.field(), ext.dim());
  std::vector<Vector> generators;
  std::vector<ExtCocycle> chosen;
  for (const auto& xi : ext.basis()) {
    if (spanned.contains(ext.coordinates(xi))) continue;
    chosen.push_back(xi);
    for (const auto& phi : ends) generators.push_back(ext.coordinates(xi.pulled_back(phi)));
    spanned = Subspace::from_vectors(x.field(), ext.dim(), generators);
    if (spanned.dim() == ext.dim()) break;
  }
  return chosen;
}

namespace {

Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-2, 2);
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = field.from_int(dist(rng));
  return m;
}

// Random invertible recombination of the classes plus a random coboundary
// added to each.
std::vector<ExtCocycle> scramble(const std::vector<ExtCocycle>& classes, const Rep& x, const Rep& y,
                                 std::mt19937_64& rng) {
  const std::size_t n = classes.size();
  if (n == 0) return {};
  const Field& field = x.field();
  Matrix t;
  do {
    t = random_matrix(field, n, n, rng);
  } while (!is_invertible(t));
  const auto& q = x.quiver();
  std::vector<ExtCocycle> out;
  for (std::size_t j = 0; j < n; ++j) {
    ExtCocycle e = ExtCocycle::zero(x, y);
    for (std::size_t k = 0; k < n; ++k)
      if (t(j, k) != 0) e = e + classes[k].scaled(t(j, k));
    std::vector<Matrix> h;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) h.push_back(random_matrix(field, y.dim(v), x.dim(v), rng));
    std::vector<Matrix> comps;
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const auto& arrow = q.arrows()[a];
      comps.push_back(e.component(a) + h[arrow.target] * x.map(a) - y.map(a) * h[arrow.source]);
    }
    out.emplace_back(x, y, std::move(comps));
  }
  return out;
}

void require_compatible(const Rep& y, const SemiBrickCert& sb) {
  if (sb.members.empty()) throw UsageError("empty semi-brick");
  if (!y.compatible_with(sb.members.front()))
    throw UsageError("module and semi-brick live over different quivers or fields");
}

}  // namespace

UniversalSequence universal_sequence(const Rep& y, const SemiBrickCert& sb, const UniversalOptions& opts) {
  require_compatible(y, sb);
  std::optional<std::mt19937_64> rng;
  if (opts.basis_seed) rng.emplace(*opts.basis_seed);

  std::vector<Rep> parts;
  std::vector<ExtCocycle> classes;
  std::vector<std::size_t> mult;
  for (const auto& x : sb.members) {
    auto basis = end_basis_of_ext(x, y, true);
    if (rng) basis = scramble(basis, x, y, *rng);
    mult.push_back(basis.size());
    for (auto& b : basis) {
      parts.push_back(x);
      classes.push_back(std::move(b));
    }
  }
  auto sum = direct_sum(parts, y.quiver_ptr(), y.field());
  const auto& q = y.quiver();
  std::vector<Matrix> comps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrows()[a];
    Matrix c(y.field(), y.dim(arrow.target), 0);
    for (const auto& e : classes) c = Matrix::hstack(c, e.component(a));
    comps.push_back(std::move(c));
  }
  ExtCocycle e(sum.sum, y, std::move(comps));
  return UniversalSequence{extension_middle(sum.sum, y, e), std::move(mult)};
}

UniversalityReport is_universal(const ShortExactSequence& ses, const SemiBrickCert& sb) {
  require_compatible(ses.sub(), sb);
  auto dec = decompose_semisimple(ses.quot(), sb);
  if (!dec.ok) throw InapplicableError("quotient term is not a direct sum of members: " + dec.diagnostic);
  UniversalityReport out;
  out.universal = true;
  for (const auto& x : sb.members) {
    UniversalityReport::Member m;
    Matrix delta = connecting_map(ses, x);
    m.hom_dim = delta.cols();
    m.ext_dim = delta.rows();
    m.rank = rank(delta);
    m.invertible = m.hom_dim == m.ext_dim && m.rank == m.hom_dim;
    out.universal = out.universal && m.invertible;
    out.members.push_back(m);
  }
  return out;
}

Morphism Tower::inclusion(std::size_t i, std::size_t j) const {
  if (i > j || j >= modules.size()) throw UsageError("tower inclusion indices out of range");
  const Rep& small = modules[i];
  const Rep& big = modules[j];
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < small.quiver().vertex_count(); ++v) {
    Matrix b(small.field(), big.dim(v), small.dim(v));
    for (std::size_t k = 0; k < small.dim(v); ++k) b.at(k, k) = 1;
    blocks.push_back(std::move(b));
  }
  return Morphism(small, big, std::move(blocks));
}

Tower tower(const Rep& y, const SemiBrickCert& sb, std::size_t levels, const TowerOptions& opts) {
  require_compatible(y, sb);
  if (levels == 0) throw UsageError("a tower needs at least one level");
  if (y.total_dim() > opts.budget)
    throw BudgetExceeded("base has total dimension " + std::to_string(y.total_dim()) + ", budget is " +
                         std::to_string(opts.budget));
  Tower t{y, sb, {y}, {}};
  for (std::size_t i = 1; i < levels; ++i) {
    const Rep& cur = t.modules.back();
    std::size_t total = cur.total_dim();
    for (const auto& x : sb.members) total += ext_dim(x, cur) * x.total_dim();
    if (total > opts.budget)
      throw BudgetExceeded("level " + std::to_string(i + 1) + " would have total dimension " + std::to_string(total) +
                           ", budget is " + std::to_string(opts.budget));
    UniversalOptions uo;
    if (opts.basis_seed) uo.basis_seed = *opts.basis_seed + i;
    auto u = universal_sequence(cur, sb, uo);
    t.modules.push_back(u.ses.middle());
    t.levels.push_back(std::move(u));
  }
  return t;
}

namespace {

Vector column_of(const Matrix& m, std::size_t c) { return m.column_vector(c); }

std::vector<Vector> subspace_vectors(const Subspace& s) {
  Matrix b = s.basis_columns();
  std::vector<Vector> out;
  for (std::size_t c = 0; c < b.cols(); ++c) out.push_back(column_of(b, c));
  return out;
}

// Least k with I^k = 0, or 0 when the powers stabilise at a nonzero ideal.
std::size_t nilpotency_index(const AlgebraPresentation& alg, const Subspace& ideal) {
  auto base = subspace_vectors(ideal);
  Subspace power = ideal;
  for (std::size_t k = 1; k <= alg.dimension() + 1; ++k) {
    if (power.dim() == 0) return k;
    std::vector<Vector> next;
    for (const auto& x : subspace_vectors(power))
      for (const auto& y : base) next.push_back(alg.multiply(x, y));
    Subspace np = Subspace::from_vectors(alg.field(), alg.dimension(), next);
    if (np.dim() == power.dim()) return 0;
    power = std::move(np);
  }
  return 0;
}

}  // namespace

EndTower end_ring_tower(const Tower& t) {
  if (!t.semibrick.index_of(t.base))
    throw InapplicableError("the base of the tower is not a member of the semi-brick");
  const Rep& y1 = t.base;
  const std::size_t nv = y1.quiver().vertex_count();
  const Field& field = y1.field();
  EndTower out;
  std::vector<AlgebraPresentation> algebras;
  for (const auto& m : t.modules) algebras.push_back(end_algebra(m));
  const std::size_t base_end = algebras.front().dimension();

  for (std::size_t i = 0; i + 1 < t.modules.size(); ++i) {
    const auto& big = algebras[i + 1];
    const auto& small = algebras[i];
    const Rep& sub = t.modules[i];
    PsiMap psi;
    psi.preserves_sub = true;
    std::vector<Vector> cols;
    for (const auto& f : big.basis()) {
      std::vector<Matrix> blocks;
      for (std::size_t v = 0; v < nv; ++v) {
        const Matrix& b = f.block(v);
        if (!b.block(sub.dim(v), 0, b.rows() - sub.dim(v), sub.dim(v)).is_zero()) psi.preserves_sub = false;
        blocks.push_back(b.block(0, 0, sub.dim(v), sub.dim(v)));
      }
      if (!psi.preserves_sub) break;
      cols.push_back(small.coordinates(Morphism(sub, sub, std::move(blocks))));
    }
    if (psi.preserves_sub) {
      psi.matrix = Matrix(field, small.dimension(), big.dimension());
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < small.dimension(); ++r) psi.matrix.at(r, c) = cols[c][r];
      psi.surjective = rank(psi.matrix) == small.dimension();
      psi.unital = psi.matrix.apply(big.unit()) == small.unit();
      psi.multiplicative = true;
      const std::size_t n = big.dimension();
      for (std::size_t a = 0; a < n && psi.multiplicative; ++a)
        for (std::size_t b = 0; b < n && psi.multiplicative; ++b) {
          auto lhs = psi.matrix.apply(big.table()[a][b]);
          auto rhs = small.multiply(psi.matrix.column_vector(a), psi.matrix.column_vector(b));
          psi.multiplicative = lhs == rhs;
        }
    }
    out.psi.push_back(std::move(psi));
  }

  Matrix composite;
  bool composite_valid = true;
  for (std::size_t i = 0; i < t.modules.size(); ++i) {
    const auto& alg = algebras[i];
    const Rep& m = t.modules[i];
    const std::size_t n = alg.dimension();

    // f restricted to Y(1): the leading columns of every block.
    std::size_t rows = 0;
    for (std::size_t v = 0; v < nv; ++v) rows += m.dim(v) * y1.dim(v);
    Matrix restrict(field, rows, n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t r = 0;
      for (std::size_t v = 0; v < nv; ++v) {
        const Matrix& b = alg.basis()[c].block(v);
        for (std::size_t p = 0; p < m.dim(v); ++p)
          for (std::size_t q = 0; q < y1.dim(v); ++q) restrict.at(r++, c) = b(p, q);
      }
    }
    Subspace ideal = Subspace::from_vectors(field, n, nullspace_basis(restrict));

    EndTowerLevel level{alg, ideal, false, 0, 0, false, std::nullopt, false};
    level.ideal_two_sided = true;
    for (const auto& x : subspace_vectors(ideal)) {
      for (std::size_t k = 0; k < n && level.ideal_two_sided; ++k) {
        Vector e(n, Scalar(0));
        e[k] = 1;
        if (!ideal.contains(alg.multiply(e, x)) || !ideal.contains(alg.multiply(x, e))) level.ideal_two_sided = false;
      }
    }
    level.nilpotency_index = nilpotency_index(alg, ideal);
    level.residue_dim = n - ideal.dim();

    if (i == 0)
      composite = Matrix::identity(field, n);
    else if (composite_valid && out.psi[i - 1].preserves_sub)
      composite = composite * out.psi[i - 1].matrix;
    else
      composite_valid = false;
    if (composite_valid) {
      Subspace ker = Subspace::from_vectors(field, n, nullspace_basis(composite));
      level.kernel_matches_ideal = ker == ideal;
    }
    if (auto rad = alg.trace_radical()) level.trace_radical_dim = rad->dim();
    level.local = level.ideal_two_sided && level.nilpotency_index > 0 && level.residue_dim == base_end &&
                  base_end == 1;
    out.levels.push_back(std::move(level));
  }
  return out;
}

UniserialReport uniserial_check(const Tower& t) {
  const auto& sb = t.semibrick;
  auto k = sb.index_of(t.base);
  if (!k) throw InapplicableError("the base of the tower is not a member of the semi-brick");
  if (sb.ext_table[*k][*k] != 1)
    throw InapplicableError("uniserial check needs dim Ext(Y, Y) = 1, found " + std::to_string(sb.ext_table[*k][*k]));
  for (std::size_t j = 0; j < sb.size(); ++j)
    if (j != *k && sb.ext_table[j][*k] != 0)
      throw InapplicableError("uniserial check needs Ext(X, Y) = 0 for members X other than Y; member " +
                              std::to_string(j) + " has dimension " + std::to_string(sb.ext_table[j][*k]));

  const std::size_t nv = t.base.quiver().vertex_count();
  const Field& field = t.base.field();
  auto dims_at = [&](std::size_t level, std::size_t v) -> std::size_t {
    return level == 0 ? 0 : t.modules[level - 1].dim(v);
  };
  UniserialReport out;
  for (std::size_t i = 1; i <= t.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const Rep& m = t.modules[i - 1];
      std::vector<Subspace> lower;
      std::vector<Subspace> expected;
      for (std::size_t v = 0; v < nv; ++v) {
        Matrix gen(field, m.dim(v), dims_at(j, v));
        for (std::size_t c = 0; c < dims_at(j, v); ++c) gen.at(c, c) = 1;
        lower.push_back(Subspace::column_span(gen));
        // quotient coordinates are the trailing ambient coordinates in order
        const std::size_t qd = m.dim(v) - dims_at(j, v);
        const std::size_t layer = dims_at(j + 1, v) - dims_at(j, v);
        Matrix exp(field, qd, layer);
        for (std::size_t c = 0; c < layer; ++c) exp.at(c, c) = 1;
        expected.push_back(Subspace::column_span(exp));
      }
      auto q = quotient(m, lower);
      UniserialReport::Pair p{j, i};
      for (const auto& x : sb.members)
        for (const auto& f : hom_basis(x, q.rep)) {
          ++p.hom_dim;
          for (std::size_t v = 0; v < nv; ++v)
            if (!(Subspace::column_span(f.block(v)) == expected[v])) p.images_match = false;
        }
      if (p.hom_dim == 0) p.images_match = false;
      out.uniserial = out.uniserial && p.images_match;
      out.pairs.push_back(p);
    }
  return out;
}

bool hom_property_holds(const Tower& t) {
  const Rep& top = t.modules.back();
  const std::size_t nv = top.quiver().vertex_count();
  for (const auto& x : t.semibrick.members)
    for (const auto& f : hom_basis(x, top))
      for (std::size_t v = 0; v < nv; ++v) {
        const Matrix& b = f.block(v);
        const std::size_t d = t.base.dim(v);
        if (!b.block(d, 0, b.rows() - d, b.cols()).is_zero()) return false;
      }
  return true;
}

EnvelopeReport envelope_check(const Tower& t) {
  EnvelopeReport out;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    auto incl = t.inclusion(i, i + 1);
    std::vector<std::pair<std::size_t, std::size_t>> row;
    for (const auto& x : t.semibrick.members) {
      ExtSpace ext(x, t.modules[i]);
      std::size_t split = 0;
      for (const auto& xi : ext.basis()) {
        auto po = pushout(extension_middle(x, t.modules[i], xi), incl);
        if (is_split(po.ses)) ++split;
      }
      if (split != ext.dim()) out.all_die = false;
      row.emplace_back(ext.dim(), split);
    }
    out.counts.push_back(std::move(row));
  }
  return out;
}

}  // namespace semibrick
