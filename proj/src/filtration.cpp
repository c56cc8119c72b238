#include "semibrick/filtration.hpp"

#include "semibrick/errors.hpp"

namespace semibrick {

namespace {

void require_member_compatible(const Rep& m, const SemiBrickCert& sb) {
  if (sb.members.empty()) throw UsageError("empty semi-brick");
  if (!m.compatible_with(sb.members.front()))
    throw UsageError("module and semi-brick live over different quivers or fields");
}

std::vector<Subspace> zero_spaces(const Rep& m) {
  std::vector<Subspace> out;
  for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v) out.emplace_back(m.field(), m.dim(v));
  return out;
}

// Blocks of the inclusion `inner` -> `outer` when both are subreps of the same
// ambient.
Morphism relative_inclusion(const SubrepInclusion& inner, const SubrepInclusion& outer) {
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < inner.inclusion.blocks().size(); ++v) {
    auto x = solve(outer.inclusion.block(v), inner.inclusion.block(v));
    if (!x) throw InvalidInput("filtration chain is not increasing");
    blocks.push_back(std::move(*x));
  }
  return Morphism(inner.sub, outer.sub, std::move(blocks));
}

}  // namespace

SubrepInclusion x_socle(const Rep& m, const SemiBrickCert& sb) {
  require_member_compatible(m, sb);
  const std::size_t nv = m.quiver().vertex_count();
  std::vector<Matrix> spans;
  for (std::size_t v = 0; v < nv; ++v) spans.emplace_back(m.field(), m.dim(v), 0);
  for (const auto& x : sb.members)
    for (const auto& f : hom_basis(x, m))
      for (std::size_t v = 0; v < nv; ++v) spans[v] = Matrix::hstack(spans[v], f.block(v));
  std::vector<Subspace> spaces;
  for (const auto& s : spans) spaces.push_back(Subspace::column_span(s));
  return subrep(m, spaces);
}

SemisimpleDecomposition decompose_semisimple(const Rep& l, const SemiBrickCert& sb) {
  require_member_compatible(l, sb);
  SemisimpleDecomposition out;
  const std::size_t nv = l.quiver().vertex_count();
  std::vector<Rep> parts;
  std::vector<Matrix> cols;
  for (std::size_t v = 0; v < nv; ++v) cols.emplace_back(l.field(), l.dim(v), 0);
  for (const auto& x : sb.members) {
    auto homs = hom_basis(x, l);
    out.multiplicities.push_back(homs.size());
    for (const auto& f : homs) {
      parts.push_back(x);
      for (std::size_t v = 0; v < nv; ++v) cols[v] = Matrix::hstack(cols[v], f.block(v));
    }
  }
  auto sum = direct_sum(parts, l.quiver_ptr(), l.field());
  if (sum.sum.dims() != l.dims()) {
    std::string have, need;
    for (std::size_t v = 0; v < nv; ++v) {
      have += (v ? "," : "") + std::to_string(sum.sum.dims()[v]);
      need += (v ? "," : "") + std::to_string(l.dims()[v]);
    }
    out.diagnostic = "assembled sum of members has dims (" + have + "), module has (" + need + ")";
    return out;
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (!is_invertible(cols[v])) {
      out.diagnostic = "assembled map from the sum of members is not invertible at vertex " + l.quiver().vertices()[v];
      return out;
    }
  out.witness = make_morphism_unchecked(sum.sum, l, std::move(cols));
  out.ok = true;
  return out;
}

std::vector<DimVector> Filtration::chain_dims() const {
  std::vector<DimVector> out;
  for (const auto& c : chain) out.push_back(c.sub.dims());
  return out;
}

FiltrationResult x_socle_filtration(const Rep& m, const SemiBrickCert& sb) {
  require_member_compatible(m, sb);
  const std::size_t nv = m.quiver().vertex_count();
  FiltrationResult out{false, Filtration{m, {}, {}}, {}, std::nullopt, {}};
  std::vector<Subspace> current = zero_spaces(m);
  out.filtration.chain.push_back(subrep(m, current));

  while (out.filtration.chain.back().sub.total_dim() < m.total_dim()) {
    auto q = quotient(m, current);
    auto soc = x_socle(q.rep, sb);
    if (soc.sub.is_zero()) {
      out.refusal = "no socle-tower filtration: the quotient by step " +
                    std::to_string(out.filtration.chain.size() - 1) + " has zero socle";
      out.stalled_quotient_dims = q.rep.dims();
      for (const auto& x : sb.members) out.stalled_hom_dims.push_back(hom_dim(x, q.rep));
      return out;
    }
    std::vector<Subspace> next;
    for (std::size_t v = 0; v < nv; ++v)
      next.push_back(Subspace::column_span(
          Matrix::hstack(current[v].basis_columns(), q.sections[v] * soc.inclusion.block(v))));
    auto step = subrep(m, next);
    auto layer_map = relative_inclusion(out.filtration.chain.back(), step);
    auto layer = cokernel(layer_map);
    auto dec = decompose_semisimple(layer.rep, sb);
    out.filtration.chain.push_back(step);
    if (!dec.ok) {
      out.refusal = "layer " + std::to_string(out.filtration.layers.size()) + " is not a direct sum of members: " +
                    dec.diagnostic;
      return out;
    }
    out.filtration.layers.push_back({layer.rep, dec.multiplicities, *dec.witness});
    current = std::move(next);
  }
  out.complete = true;
  return out;
}

FiltrationResult filt_membership(const Rep& m, const SemiBrickCert& sb) {
  auto result = x_socle_filtration(m, sb);
  if (result.complete && !verify_filtration(result.filtration, sb)) {
    result.complete = false;
    result.refusal = "filtration witness failed re-verification";
  }
  return result;
}

bool verify_filtration(const Filtration& f, const SemiBrickCert& sb) {
  if (f.chain.empty() || !f.chain.front().sub.is_zero()) return false;
  if (f.chain.back().sub.dims() != f.ambient.dims() || !f.chain.back().inclusion.is_isomorphism()) return false;
  if (f.layers.size() + 1 != f.chain.size()) return false;
  for (const auto& c : f.chain) {
    if (!(c.ambient() == f.ambient) || !c.inclusion.is_injective()) return false;
    if (intertwining_failure(c.sub, f.ambient, c.inclusion.blocks())) return false;
  }
  for (std::size_t i = 0; i + 1 < f.chain.size(); ++i) {
    if (!factors_through(f.chain[i].inclusion, f.chain[i + 1].inclusion)) return false;
    if (f.chain[i].sub.total_dim() >= f.chain[i + 1].sub.total_dim()) return false;
    auto sq = cokernel(relative_inclusion(f.chain[i], f.chain[i + 1]));
    const auto& layer = f.layers[i];
    if (!(sq.rep == layer.subquotient)) return false;
    std::vector<Rep> parts;
    if (layer.multiplicities.size() != sb.size()) return false;
    for (std::size_t k = 0; k < sb.size(); ++k)
      for (std::size_t c = 0; c < layer.multiplicities[k]; ++c) parts.push_back(sb.members[k]);
    auto sum = direct_sum(parts, f.ambient.quiver_ptr(), f.ambient.field());
    if (!(layer.witness.source() == sum.sum) || !(layer.witness.target() == sq.rep)) return false;
    if (intertwining_failure(sum.sum, sq.rep, layer.witness.blocks())) return false;
    if (!layer.witness.is_isomorphism()) return false;
  }
  return true;
}

bool maps_filtration_into(const Morphism& f, const Filtration& source, const Filtration& target) {
  const std::size_t steps = std::max(source.chain.size(), target.chain.size());
  for (std::size_t i = 0; i < steps; ++i) {
    const auto& s = source.chain[std::min(i, source.chain.size() - 1)];
    const auto& t = target.chain[std::min(i, target.chain.size() - 1)];
    for (std::size_t v = 0; v < f.blocks().size(); ++v)
      if (!Subspace::column_span(t.inclusion.block(v)).contains_columns(f.block(v) * s.inclusion.block(v)))
        return false;
  }
  return true;
}

Morphism steinitz_exchange(const DirectSum& sum, const Morphism& y_inclusion, std::size_t k) {
  if (k >= sum.injections.size()) throw UsageError("exchange index out of range");
  if (!(y_inclusion.target() == sum.sum)) throw UsageError("exchanged subrepresentation does not live in the sum");
  std::vector<Rep> parts;
  std::vector<Matrix> blocks;
  const std::size_t nv = sum.sum.quiver().vertex_count();
  for (std::size_t v = 0; v < nv; ++v) blocks.emplace_back(sum.sum.field(), sum.sum.dim(v), 0);
  for (std::size_t i = 0; i < sum.injections.size(); ++i) {
    if (i == k) continue;
    parts.push_back(sum.injections[i].source());
    for (std::size_t v = 0; v < nv; ++v) blocks[v] = Matrix::hstack(blocks[v], sum.injections[i].block(v));
  }
  parts.push_back(y_inclusion.source());
  for (std::size_t v = 0; v < nv; ++v) blocks[v] = Matrix::hstack(blocks[v], y_inclusion.block(v));
  auto source = direct_sum(parts, sum.sum.quiver_ptr(), sum.sum.field());
  return Morphism(source.sum, sum.sum, std::move(blocks));
}

}  // namespace semibrick
