#include "semibrick/commands.hpp"

#include <sstream>

#include "semibrick/errors.hpp"

namespace semibrick {

namespace {

using io::Json;

std::string dims_str(const DimVector& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

std::string list_str(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Json envelope(const std::string& command, const Rep& context, Json result) {
  return {{"command", command},
          {"quiver", context.quiver().name()},
          {"vertices", context.quiver().vertices()},
          {"field", io::field_payload(context.field())},
          {"result", std::move(result)}};
}

Json blocks_json(const Morphism& f) {
  const auto& q = f.source().quiver();
  Json out = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    out[q.vertices()[v]] = io::matrix_payload(f.source().field(), f.block(v));
  return out;
}

Json cocycle_json(const ExtCocycle& e) {
  const auto& q = e.from().quiver();
  Json out = Json::object();
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    out[q.arrows()[a].id] = io::matrix_payload(e.from().field(), e.component(a));
  return out;
}

Json tables_json(const std::vector<std::vector<std::size_t>>& t) {
  Json out = Json::array();
  for (const auto& row : t) out.push_back(row);
  return out;
}

std::string table_text(const std::string& title, const std::vector<std::vector<std::size_t>>& t) {
  std::ostringstream os;
  os << title << "\n";
  for (const auto& row : t) {
    os << " ";
    for (auto x : row) os << " " << x;
    os << "\n";
  }
  return os.str();
}

SemiBrickCert certify(const std::vector<Rep>& members, const CommandOptions& opts) {
  if (members.empty()) throw UsageError("no semi-brick members given");
  return require_semibrick(members, opts.assume_brick);
}

void require_same_setting(const Rep& m, const std::vector<Rep>& members) {
  for (const auto& x : members)
    if (!m.compatible_with(x)) throw UsageError("module and semi-brick members live over different quivers or fields");
}

Json filtration_json(const FiltrationResult& r) {
  Json chain = Json::array();
  for (const auto& d : r.filtration.chain_dims()) chain.push_back(d);
  Json layers = Json::array();
  for (const auto& l : r.filtration.layers)
    layers.push_back({{"dims", l.subquotient.dims()}, {"multiplicities", l.multiplicities}});
  Json out = {{"complete", r.complete}, {"chain_dims", chain}, {"layers", layers}, {"refusal", r.refusal}};
  if (r.stalled_quotient_dims) {
    out["stalled_quotient_dims"] = *r.stalled_quotient_dims;
    out["stalled_hom_dims"] = r.stalled_hom_dims;
  } else {
    out["stalled_quotient_dims"] = nullptr;
    out["stalled_hom_dims"] = nullptr;
  }
  return out;
}

std::string filtration_text(const FiltrationResult& r) {
  std::ostringstream os;
  const auto chain = r.filtration.chain_dims();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    os << "step " << i << ": dims " << dims_str(chain[i]);
    if (i > 0 && i - 1 < r.filtration.layers.size())
      os << "  layer multiplicities " << list_str(r.filtration.layers[i - 1].multiplicities);
    os << "\n";
  }
  if (r.complete) {
    os << "filtration complete\n";
  } else {
    os << "refused: " << r.refusal << "\n";
    if (r.stalled_quotient_dims)
      os << "stalled quotient dims " << dims_str(*r.stalled_quotient_dims) << ", dim Hom(X_i, quotient) "
         << list_str(r.stalled_hom_dims) << "\n";
  }
  return os.str();
}

TowerOptions tower_options(const CommandOptions& opts) {
  TowerOptions t;
  t.budget = opts.budget;
  t.basis_seed = opts.seed;
  return t;
}

}  // namespace

Report cmd_hom(const Rep& left, const Rep& right) {
  auto basis = hom_basis(left, right);
  Json b = Json::array();
  for (const auto& f : basis) b.push_back(blocks_json(f));
  std::ostringstream os;
  os << "dim Hom = " << basis.size() << "\n";
  return {envelope("hom", left, {{"dim", basis.size()}, {"basis", b}}), os.str()};
}

Report cmd_ext(const Rep& left, const Rep& right) {
  ExtSpace ext(left, right);
  Json b = Json::array();
  for (const auto& e : ext.basis()) b.push_back(cocycle_json(e));
  std::ostringstream os;
  os << "dim Ext = " << ext.dim() << "\n";
  return {envelope("ext", left, {{"dim", ext.dim()}, {"coboundary_rank", ext.coboundary_rank()}, {"basis", b}}),
          os.str()};
}

Report cmd_euler(const Rep& left, const Rep& right) {
  if (!left.compatible_with(right)) throw UsageError("representations over different quivers or fields");
  const long e = euler_form(left.quiver(), left.dims(), right.dims());
  const std::size_t h = hom_dim(left, right);
  const std::size_t x = ext_dim(left, right);
  const bool holds = static_cast<long>(h) - static_cast<long>(x) == e;
  std::ostringstream os;
  os << "<" << dims_str(left.dims()) << ", " << dims_str(right.dims()) << "> = " << e << "\n"
     << "dim Hom = " << h << ", dim Ext = " << x << ", identity holds: " << yes_no(holds) << "\n";
  Json r = {{"left_dims", left.dims()}, {"right_dims", right.dims()}, {"euler_form", e},
            {"hom_dim", h},             {"ext_dim", x},               {"identity_holds", holds}};
  return {envelope("euler", left, std::move(r)), os.str()};
}

Report cmd_defect(const Rep& m) {
  const auto type = representation_type(m.quiver());
  const long d = defect(m.quiver(), m.dims());
  auto h = radical_vector(m.quiver());
  std::ostringstream os;
  os << "quiver type " << to_string(type) << ", null root " << dims_str(*h) << "\n"
     << "defect " << dims_str(m.dims()) << " = " << d << "\n";
  Json r = {{"dims", m.dims()}, {"defect", d}, {"null_root", *h}, {"representation_type", to_string(type)}};
  return {envelope("defect", m, std::move(r)), os.str()};
}

Report cmd_brick(const Rep& m) {
  auto b = is_brick(m);
  Json r = {{"status", to_string(b.status)}, {"end_dim", b.end_dim}, {"evidence", b.evidence}};
  r["radical_dim"] = b.radical_dim ? Json(*b.radical_dim) : Json(nullptr);
  r["residue_dim"] = b.residue_dim ? Json(*b.residue_dim) : Json(nullptr);
  r["idempotent"] = b.idempotent ? blocks_json(*b.idempotent) : Json(nullptr);
  std::ostringstream os;
  os << "status " << to_string(b.status) << ", dim End = " << b.end_dim << "\n" << b.evidence << "\n";
  return {envelope("brick", m, std::move(r)), os.str()};
}

Report cmd_semibrick(const std::vector<Rep>& members, const CommandOptions& opts) {
  if (members.empty()) throw UsageError("no semi-brick members given");
  auto check = check_semibrick(members, opts.assume_brick);
  Json flags = Json::array();
  for (const auto& b : check.bricks) flags.push_back(to_string(b.status));
  Json r = {{"certified", check.certificate.has_value()},
            {"refusal", check.refusal},
            {"hom_table", tables_json(check.hom_table)},
            {"ext_table", tables_json(check.ext_table)},
            {"brick_flags", flags},
            {"assumed", check.certificate ? check.certificate->assumed : false}};
  r["violating_pair"] =
      check.violating_pair ? Json::array({check.violating_pair->first, check.violating_pair->second}) : Json(nullptr);
  std::ostringstream os;
  os << "members " << members.size() << ", certified: " << yes_no(check.certificate.has_value()) << "\n";
  if (!check.certificate) os << "refused: " << check.refusal << "\n";
  os << table_text("dim Hom(X_i, X_j):", check.hom_table) << table_text("dim Ext(X_i, X_j):", check.ext_table);
  return {envelope("semibrick", members.front(), std::move(r)), os.str()};
}

Report cmd_socle(const Rep& m, const std::vector<Rep>& members, const CommandOptions& opts) {
  require_same_setting(m, members);
  auto sb = certify(members, opts);
  auto soc = x_socle(m, sb);
  DimVector qd(m.dims());
  for (std::size_t v = 0; v < qd.size(); ++v) qd[v] -= soc.sub.dims()[v];
  std::ostringstream os;
  os << "X-socle dims " << dims_str(soc.sub.dims()) << " inside " << dims_str(m.dims()) << "\n";
  Json r = {{"module_dims", m.dims()}, {"socle_dims", soc.sub.dims()}, {"quotient_dims", qd}};
  return {envelope("socle", m, std::move(r)), os.str()};
}

Report cmd_filtration(const Rep& m, const std::vector<Rep>& members, const CommandOptions& opts) {
  require_same_setting(m, members);
  auto sb = certify(members, opts);
  auto res = x_socle_filtration(m, sb);
  return {envelope("filtration", m, filtration_json(res)), filtration_text(res)};
}

Report cmd_membership(const Rep& m, const std::vector<Rep>& members, const CommandOptions& opts) {
  require_same_setting(m, members);
  auto sb = certify(members, opts);
  auto res = filt_membership(m, sb);
  Json r = filtration_json(res);
  r["accepted"] = res.complete;
  std::string text = std::string("in Filt: ") + yes_no(res.complete) + "\n" + filtration_text(res);
  return {envelope("membership", m, std::move(r)), text};
}

Report cmd_universal(const Rep& base, const std::vector<Rep>& members, const CommandOptions& opts) {
  require_same_setting(base, members);
  auto sb = certify(members, opts);
  UniversalOptions uo;
  uo.basis_seed = opts.seed;
  auto u = universal_sequence(base, sb, uo);
  auto check = is_universal(u.ses, sb);
  Json ms = Json::array();
  std::ostringstream os;
  os << "0 -> " << dims_str(u.ses.sub().dims()) << " -> " << dims_str(u.ses.middle().dims()) << " -> "
     << dims_str(u.ses.quot().dims()) << " -> 0\n";
  for (std::size_t i = 0; i < check.members.size(); ++i) {
    const auto& m = check.members[i];
    ms.push_back({{"multiplicity", u.multiplicities[i]},
                  {"hom_dim", m.hom_dim},
                  {"ext_dim", m.ext_dim},
                  {"rank", m.rank},
                  {"invertible", m.invertible}});
    os << "member " << i << ": multiplicity " << u.multiplicities[i] << ", connecting map " << m.ext_dim << "x"
       << m.hom_dim << " of rank " << m.rank << "\n";
  }
  os << "universal: " << yes_no(check.universal) << "\n";
  Json r = {{"sub_dims", u.ses.sub().dims()},
            {"middle_dims", u.ses.middle().dims()},
            {"quot_dims", u.ses.quot().dims()},
            {"members", ms},
            {"universal", check.universal},
            {"cocycle", cocycle_json(cocycle_of(u.ses))}};
  return {envelope("universal", base, std::move(r)), os.str()};
}

Report cmd_tower(const Rep& base, const std::vector<Rep>& members, const CommandOptions& opts) {
  require_same_setting(base, members);
  auto sb = certify(members, opts);
  auto t = tower(base, sb, opts.levels, tower_options(opts));
  std::ostringstream os;
  Json levels = Json::array();
  bool all_universal = true;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json lv = {{"level", i + 1}, {"dims", t.modules[i].dims()}};
    os << "level " << i + 1 << ": dims " << dims_str(t.modules[i].dims());
    if (i > 0) {
      const auto& u = t.levels[i - 1];
      bool universal = is_universal(u.ses, sb).universal;
      all_universal = all_universal && universal;
      lv["multiplicities"] = u.multiplicities;
      lv["universal"] = universal;
      os << "  multiplicities " << list_str(u.multiplicities) << "  universal " << yes_no(universal);
    } else {
      lv["multiplicities"] = nullptr;
      lv["universal"] = nullptr;
    }
    os << "\n";
    levels.push_back(std::move(lv));
  }
  const bool hom_prop = hom_property_holds(t);
  auto env = envelope_check(t);
  Json r = {{"levels", levels}, {"all_universal", all_universal}, {"hom_property", hom_prop},
            {"envelope", env.all_die}};
  os << "all levels universal: " << yes_no(all_universal) << "\n"
     << "Hom-property (images inside the base): " << yes_no(hom_prop) << "\n"
     << "Ext classes die one level up: " << yes_no(env.all_die) << "\n";

  if (sb.index_of(base)) {
    auto filt = x_socle_filtration(t.modules.back(), sb);
    Json chain = Json::array();
    for (const auto& d : filt.filtration.chain_dims()) chain.push_back(d);
    bool match = filt.complete && filt.filtration.chain.size() == t.size() + 1;
    for (std::size_t i = 0; match && i < t.size(); ++i) {
      std::vector<Subspace> expected;
      const auto incl = t.inclusion(i, t.size() - 1);
      for (const auto& b : incl.blocks()) expected.push_back(Subspace::column_span(b));
      match = filt.filtration.chain[i + 1].spaces() == expected;
    }
    r["socle_chain_dims"] = chain;
    r["socle_matches_tower"] = match;
    os << "X-socle filtration of the top level reproduces the tower: " << yes_no(match) << "\n";
  } else {
    r["socle_chain_dims"] = nullptr;
    r["socle_matches_tower"] = nullptr;
  }
  return {envelope("tower", base, std::move(r)), os.str()};
}

Report cmd_endtower(const Rep& base, const std::vector<Rep>& members, const CommandOptions& opts) {
  require_same_setting(base, members);
  auto sb = certify(members, opts);
  auto t = tower(base, sb, opts.levels, tower_options(opts));
  auto et = end_ring_tower(t);
  std::ostringstream os;
  Json levels = Json::array();
  for (std::size_t i = 0; i < et.levels.size(); ++i) {
    const auto& l = et.levels[i];
    Json lv = {{"level", i + 1},
               {"end_dim", l.algebra.dimension()},
               {"ideal_dim", l.ideal.dim()},
               {"ideal_two_sided", l.ideal_two_sided},
               {"nilpotency_index", l.nilpotency_index},
               {"residue_dim", l.residue_dim},
               {"kernel_matches_ideal", l.kernel_matches_ideal},
               {"local", l.local}};
    lv["trace_radical_dim"] = l.trace_radical_dim ? Json(*l.trace_radical_dim) : Json(nullptr);
    levels.push_back(std::move(lv));
    os << "level " << i + 1 << ": dim End = " << l.algebra.dimension() << ", ideal dim " << l.ideal.dim()
       << ", nilpotency index " << l.nilpotency_index << ", residue dim " << l.residue_dim << ", local "
       << yes_no(l.local) << "\n";
  }
  Json psi = Json::array();
  for (std::size_t i = 0; i < et.psi.size(); ++i) {
    const auto& p = et.psi[i];
    psi.push_back({{"from_level", i + 2},
                   {"to_level", i + 1},
                   {"preserves_sub", p.preserves_sub},
                   {"surjective", p.surjective},
                   {"unital", p.unital},
                   {"multiplicative", p.multiplicative}});
    os << "Psi " << i + 2 << " -> " << i + 1 << ": surjective " << yes_no(p.surjective) << ", unital "
       << yes_no(p.unital) << ", multiplicative " << yes_no(p.multiplicative) << "\n";
  }
  return {envelope("endtower", base, {{"levels", levels}, {"psi", psi}}), os.str()};
}

Report cmd_uniserial(const Rep& base, const std::vector<Rep>& members, const CommandOptions& opts) {
  require_same_setting(base, members);
  auto sb = certify(members, opts);
  auto t = tower(base, sb, opts.levels, tower_options(opts));
  auto u = uniserial_check(t);
  Json pairs = Json::array();
  std::ostringstream os;
  for (const auto& p : u.pairs) {
    pairs.push_back({{"lower", p.j}, {"upper", p.i}, {"hom_dim", p.hom_dim}, {"images_match", p.images_match}});
    os << "Y(" << p.i << ")/Y(" << p.j << "): dim Hom = " << p.hom_dim << ", images equal Y(" << p.j + 1 << ")/Y("
       << p.j << "): " << yes_no(p.images_match) << "\n";
  }
  os << "uniserial: " << yes_no(u.uniserial) << "\n";
  return {envelope("uniserial", base, {{"uniserial", u.uniserial}, {"pairs", pairs}}), os.str()};
}

Report cmd_preproj(const Rep& base, const std::vector<Rep>& members, const CommandOptions& opts) {
  require_same_setting(base, members);
  auto sb = certify(members, opts);
  auto rep = preprojective_tower_report(base, sb, opts.levels, tower_options(opts));
  Json levels = Json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < rep.levels.size(); ++i) {
    const auto& l = rep.levels[i];
    levels.push_back({{"level", i + 1},
                      {"dims", l.dims},
                      {"defect", l.defect},
                      {"brick", to_string(l.brick)},
                      {"end_dim", l.end_dim},
                      {"socle_zero", l.socle_zero}});
    os << "level " << i + 1 << ": dims " << dims_str(l.dims) << ", defect " << l.defect << ", " << to_string(l.brick)
       << ", dim End = " << l.end_dim << ", zero X-socle " << yes_no(l.socle_zero) << "\n";
  }
  os << "all levels hold: " << yes_no(rep.all_hold) << "\n"
     << "top / base in Filt: " << yes_no(rep.quotient_membership.complete) << "\n";
  Json r = {{"levels", levels},
            {"all_hold", rep.all_hold},
            {"quotient_in_filt", rep.quotient_membership.complete},
            {"quotient_filtration", filtration_json(rep.quotient_membership)}};
  return {envelope("preproj", base, std::move(r)), os.str()};
}

Report cmd_demo_kronecker(std::size_t r, const Field& field) {
  if (r < 2) throw UsageError("demo-kronecker needs r >= 2");
  if (!field.is_rationals() && field.characteristic() < 5)
    throw UsageError("demo-kronecker needs five distinct points; use a field with at least 5 elements");
  auto q = std::make_shared<const Quiver>(kronecker(r));
  std::vector<Rep> xs;
  Json points = Json::array();
  for (long l = 0; l < 5; ++l) {
    xs.push_back(kronecker_point(q, field, PointOnLine::at(field.from_int(l))));
    points.push_back(field.format(field.from_int(l)));
  }
  const std::size_t n = xs.size();
  std::vector<std::vector<std::size_t>> hom(n, std::vector<std::size_t>(n)), ext = hom;
  Json bricks = Json::array();
  bool ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    auto b = is_brick(xs[i]);
    bricks.push_back(to_string(b.status));
    ok = ok && b.status == BrickStatus::certified_brick;
    for (std::size_t j = 0; j < n; ++j) {
      hom[i][j] = hom_dim(xs[i], xs[j]);
      ext[i][j] = ext_dim(xs[i], xs[j]);
      const std::size_t want_ext = i == j ? r - 1 : r - 2;
      const std::size_t want_hom = i == j ? 1 : 0;
      ok = ok && ext[i][j] == want_ext && hom[i][j] == want_hom;
    }
  }
  std::ostringstream os;
  os << "K" << r << ", points";
  for (long l = 0; l < 5; ++l) os << " " << l;
  os << "\n" << table_text("dim Hom(X_i, X_j):", hom) << table_text("dim Ext(X_i, X_j):", ext)
     << "expected dim Ext(X, X) = " << r - 1 << ", dim Ext(X_l, X_m) = " << r - 2 << "\n"
     << "all bricks, pairwise orthogonal, Ext as expected: " << yes_no(ok) << "\n";
  Json res = {{"r", r},
              {"points", points},
              {"brick_status", bricks},
              {"hom_table", tables_json(hom)},
              {"ext_table", tables_json(ext)},
              {"expected_self_ext", r - 1},
              {"expected_cross_ext", r - 2},
              {"matches", ok}};
  return {envelope("demo-kronecker", xs.front(), std::move(res)), os.str()};
}

}  // namespace semibrick
