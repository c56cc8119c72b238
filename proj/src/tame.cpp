#include "semibrick/tame.hpp"

#include "semibrick/errors.hpp"

namespace semibrick {

Quiver kronecker(std::size_t r) {
  if (r == 0) throw UsageError("the Kronecker quiver needs at least one arrow");
  std::vector<ArrowSpec> arrows;
  for (std::size_t i = 0; i < r; ++i) {
    std::string id = r <= 26 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i + 1);
    arrows.push_back({id, "2", "1"});
  }
  return Quiver({"1", "2"}, arrows, "K" + std::to_string(r));
}

Rep kronecker_point(std::shared_ptr<const Quiver> kr, const Field& field, const PointOnLine& p) {
  const std::size_t r = kr->arrow_count();
  if (kr->vertex_count() != 2 || r == 0) throw UsageError("not a Kronecker quiver");
  for (const auto& a : kr->arrows())
    if (a.source != 1 || a.target != 0) throw UsageError("not a Kronecker quiver");
  std::vector<Matrix> maps;
  Scalar power = field.one();
  const Scalar lambda = p.value ? field.normalize(*p.value) : field.zero();
  for (std::size_t i = 0; i < r; ++i) {
    Matrix m(field, 1, 1);
    if (p.is_infinity()) {
      m.at(0, 0) = i + 1 == r ? field.one() : field.zero();
    } else {
      m.at(0, 0) = power;
      power = field.mul(power, lambda);
    }
    maps.push_back(std::move(m));
  }
  return Rep(std::move(kr), field, {1, 1}, std::move(maps));
}

Rep quasi_simple(const Field& field, const PointOnLine& p) {
  return kronecker_point(std::make_shared<const Quiver>(kronecker(2)), field, p);
}

PreprojectiveReport preprojective_tower_report(const Rep& p, const SemiBrickCert& sb, std::size_t levels,
                                               const TowerOptions& opts) {
  const Quiver& q = p.quiver();
  if (representation_type(q) != RepresentationType::tame) throw InapplicableError("quiver is not tame");
  const long dp = defect(q, p.dims());
  if (dp != -1) throw InapplicableError("defect of the base is " + std::to_string(dp) + ", not -1");
  for (std::size_t i = 0; i < sb.size(); ++i) {
    const std::string who = "member " + std::to_string(i);
    if (defect(q, sb.members[i].dims()) != 0) throw InapplicableError(who + " has nonzero defect");
    if (sb.brick_flags[i] != BrickStatus::certified_brick) throw InapplicableError(who + " is not a certified brick");
    if (sb.ext_table[i][i] != 1) throw InapplicableError(who + " has dim Ext(X, X) != 1");
  }

  auto t = tower(p, sb, levels, opts);
  std::vector<PreprojectiveLevel> out;
  bool all = true;
  for (const auto& m : t.modules) {
    PreprojectiveLevel lv;
    lv.dims = m.dims();
    lv.defect = defect(q, m.dims());
    auto b = is_brick(m);
    lv.brick = b.status;
    lv.end_dim = b.end_dim;
    lv.socle_zero = x_socle(m, sb).sub.is_zero();
    all = all && lv.defect == -1 && lv.brick == BrickStatus::certified_brick && lv.socle_zero;
    out.push_back(std::move(lv));
  }

  const Rep& top = t.modules.back();
  std::vector<Subspace> base_spaces;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    Matrix gen(p.field(), top.dim(v), p.dim(v));
    for (std::size_t c = 0; c < p.dim(v); ++c) gen.at(c, c) = 1;
    base_spaces.push_back(Subspace::column_span(gen));
  }
  auto membership = filt_membership(quotient(top, base_spaces).rep, sb);
  return PreprojectiveReport{std::move(t), std::move(out), all, std::move(membership)};
}

}  // namespace semibrick
