#include "semibrick/io.hpp"

#include <set>

#include "semibrick/errors.hpp"

namespace semibrick::io {

namespace {

std::string join(const std::string& path, const std::string& key) { return path + "/" + key; }

void expect_object(const Json& j, const std::string& path, std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw ParseError("expected an object", path.empty() ? "/" : path);
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!j.contains(k)) throw ParseError("missing key \"" + std::string(k) + "\"", path.empty() ? "/" : path);
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ParseError("unexpected key \"" + k + "\"", path.empty() ? "/" : path);
}

const std::string& as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError("expected a string", path);
  return j.get_ref<const std::string&>();
}

long as_nonnegative(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError("expected a nonnegative integer", path);
  return static_cast<long>(j.get<long long>());
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError("expected an array", path);
  return j;
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), "byte " + std::to_string(e.byte));
  }
}

const Json& open_document(const Json& doc, std::string_view kind) {
  expect_object(doc, "", {"kind", "version", "payload"});
  const auto& k = as_string(doc["kind"], "/kind");
  if (k != kind) throw ParseError("expected a " + std::string(kind) + " document, found " + k, "/kind");
  if (!doc["version"].is_number_integer() || doc["version"].get<long long>() != kFormatVersion)
    throw ParseError("unsupported version (expected " + std::to_string(kFormatVersion) + ")", "/version");
  return doc["payload"];
}

Quiver read_quiver(const Json& j, const std::string& path) {
  expect_object(j, path, {"vertices", "arrows"}, {"name"});
  std::string name;
  if (j.contains("name")) name = as_string(j["name"], join(path, "name"));
  std::vector<std::string> vertices;
  const auto& vs = as_array(j["vertices"], join(path, "vertices"));
  for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(as_string(vs[i], join(path, "vertices/" + std::to_string(i))));
  std::vector<ArrowSpec> arrows;
  const auto& as = as_array(j["arrows"], join(path, "arrows"));
  for (std::size_t i = 0; i < as.size(); ++i) {
    const std::string ap = join(path, "arrows/" + std::to_string(i));
    expect_object(as[i], ap, {"id", "source", "target"});
    arrows.push_back({as_string(as[i]["id"], ap + "/id"), as_string(as[i]["source"], ap + "/source"),
                      as_string(as[i]["target"], ap + "/target")});
  }
  try {
    return Quiver(std::move(vertices), arrows, std::move(name));
  } catch (const InvalidInput& e) {
    throw InvalidInput(e.what(), path.empty() ? "/" : path);
  }
}

Field read_field(const Json& j, const std::string& path) {
  expect_object(j, path, {"kind", "characteristic"});
  const auto& kind = as_string(j["kind"], join(path, "kind"));
  const long p = as_nonnegative(j["characteristic"], join(path, "characteristic"));
  if (kind == "rationals") {
    if (p != 0) throw ParseError("rationals have characteristic 0", join(path, "characteristic"));
    return Field::rationals();
  }
  if (kind == "prime_field") {
    try {
      return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const Error& e) {
      throw ParseError(e.what(), join(path, "characteristic"));
    }
  }
  throw ParseError("unknown field kind \"" + kind + "\"", join(path, "kind"));
}

Scalar read_scalar(const Field& f, const Json& j, const std::string& path) {
  const auto& s = as_string(j, path);
  Scalar v;
  try {
    v = f.parse_element(s);
  } catch (const Error& e) {
    throw ParseError(e.what(), path);
  }
  if (f.format(v) != s) throw ParseError("\"" + s + "\" is not in canonical form (expected \"" + f.format(v) + "\")", path);
  return v;
}

// Matrix of the given shape; ShapeError (naming `what`) on a mismatch.
Matrix read_matrix(const Field& f, const Json& j, std::size_t rows, std::size_t cols, const std::string& path,
                   const std::string& what) {
  if (!j.is_array()) throw ParseError("expected a list of rows", path);
  if (j.size() != rows)
    throw ShapeError(what + " needs " + std::to_string(rows) + " rows, found " + std::to_string(j.size()), path);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "/" + std::to_string(r);
    if (!j[r].is_array()) throw ParseError("expected a row", rp);
    if (j[r].size() != cols)
      throw ShapeError(what + " needs " + std::to_string(cols) + " columns, row " + std::to_string(r) + " has " +
                           std::to_string(j[r].size()),
                       rp);
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = read_scalar(f, j[r][c], rp + "/" + std::to_string(c));
  }
  return m;
}

Rep read_rep(const Json& j, const std::string& path) {
  expect_object(j, path, {"quiver", "field", "dims", "maps"});
  auto q = std::make_shared<const Quiver>(read_quiver(j["quiver"], join(path, "quiver")));
  Field f = read_field(j["field"], join(path, "field"));

  const std::string dp = join(path, "dims");
  if (!j["dims"].is_object()) throw ParseError("expected an object keyed by vertex", dp);
  DimVector dims(q->vertex_count(), 0);
  for (const auto& [k, v] : j["dims"].items())
    if (!q->find_vertex(k)) throw ShapeError("unknown vertex \"" + k + "\"", dp);
  for (std::size_t v = 0; v < q->vertex_count(); ++v) {
    const auto& id = q->vertices()[v];
    if (!j["dims"].contains(id)) throw ShapeError("missing dimension for vertex " + id, dp);
    dims[v] = as_nonnegative(j["dims"][id], dp + "/" + id);
  }

  const std::string mp = join(path, "maps");
  if (!j["maps"].is_object()) throw ParseError("expected an object keyed by arrow", mp);
  for (const auto& [k, v] : j["maps"].items()) {
    bool known = false;
    for (const auto& a : q->arrows()) known = known || a.id == k;
    if (!known) throw ShapeError("unknown arrow \"" + k + "\"", mp);
  }
  std::vector<Matrix> maps;
  for (const auto& a : q->arrows()) {
    if (!j["maps"].contains(a.id)) throw ShapeError("missing matrix for arrow " + a.id, mp);
    maps.push_back(read_matrix(f, j["maps"][a.id], static_cast<std::size_t>(dims[a.target]),
                               static_cast<std::size_t>(dims[a.source]), mp + "/" + a.id, "arrow " + a.id));
  }
  return Rep(std::move(q), f, std::move(dims), std::move(maps));
}

Morphism read_morphism(const Json& j, const std::string& path) {
  expect_object(j, path, {"source", "target", "blocks"});
  Rep s = read_rep(j["source"], join(path, "source"));
  Rep t = read_rep(j["target"], join(path, "target"));
  if (!s.compatible_with(t)) throw ShapeError("source and target live over different quivers or fields", path);
  const auto& q = s.quiver();
  const std::string bp = join(path, "blocks");
  if (!j["blocks"].is_object()) throw ParseError("expected an object keyed by vertex", bp);
  for (const auto& [k, v] : j["blocks"].items())
    if (!q.find_vertex(k)) throw ShapeError("unknown vertex \"" + k + "\"", bp);
  std::vector<Matrix> blocks;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    const auto& id = q.vertices()[v];
    if (!j["blocks"].contains(id)) throw ShapeError("missing block for vertex " + id, bp);
    blocks.push_back(read_matrix(s.field(), j["blocks"][id], t.dim(v), s.dim(v), bp + "/" + id, "block at vertex " + id));
  }
  if (auto a = intertwining_failure(s, t, blocks))
    throw IntertwiningError("blocks do not intertwine the arrow maps on arrow " + q.arrows()[*a].id, bp);
  return Morphism(std::move(s), std::move(t), std::move(blocks));
}

std::vector<Rep> read_members(const Json& j, const std::string& path) {
  expect_object(j, path, {"members"}, {"hom_table", "ext_table", "brick_flags", "assumed"});
  const auto& ms = as_array(j["members"], join(path, "members"));
  std::vector<Rep> out;
  for (std::size_t i = 0; i < ms.size(); ++i) out.push_back(read_rep(ms[i], join(path, "members/" + std::to_string(i))));
  for (std::size_t i = 1; i < out.size(); ++i)
    if (!out[i].compatible_with(out[0]))
      throw ShapeError("members live over different quivers or fields", join(path, "members/" + std::to_string(i)));
  return out;
}

Json table_payload(const std::vector<std::vector<std::size_t>>& t) {
  Json out = Json::array();
  for (const auto& row : t) out.push_back(row);
  return out;
}

}  // namespace

Json quiver_payload(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"id", a.id}, {"source", q.vertices()[a.source]}, {"target", q.vertices()[a.target]}});
  return {{"name", q.name()}, {"vertices", q.vertices()}, {"arrows", arrows}};
}

Json field_payload(const Field& f) {
  return {{"kind", f.is_rationals() ? "rationals" : "prime_field"}, {"characteristic", f.characteristic()}};
}

Json matrix_payload(const Field& f, const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(f.format(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json rep_payload(const Rep& r) {
  const auto& q = r.quiver();
  Json dims = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims[q.vertices()[v]] = r.dims()[v];
  Json maps = Json::object();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) maps[q.arrows()[a].id] = matrix_payload(r.field(), r.map(a));
  return {{"quiver", quiver_payload(q)}, {"field", field_payload(r.field())}, {"dims", dims}, {"maps", maps}};
}

Json morphism_payload(const Morphism& m) {
  const auto& q = m.source().quiver();
  Json blocks = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    blocks[q.vertices()[v]] = matrix_payload(m.source().field(), m.block(v));
  return {{"source", rep_payload(m.source())}, {"target", rep_payload(m.target())}, {"blocks", blocks}};
}

Json semibrick_payload(const SemiBrickCert& sb) {
  Json members = Json::array();
  for (const auto& m : sb.members) members.push_back(rep_payload(m));
  Json flags = Json::array();
  for (auto f : sb.brick_flags) flags.push_back(to_string(f));
  return {{"members", members},
          {"hom_table", table_payload(sb.hom_table)},
          {"ext_table", table_payload(sb.ext_table)},
          {"brick_flags", flags},
          {"assumed", sb.assumed}};
}

std::string document(std::string_view kind, const Json& payload) {
  Json doc = {{"kind", std::string(kind)}, {"version", kFormatVersion}, {"payload", payload}};
  return doc.dump(2) + "\n";
}

std::string serialize(const Quiver& q) { return document("quiver", quiver_payload(q)); }
std::string serialize(const Rep& r) { return document("rep", rep_payload(r)); }
std::string serialize(const Morphism& m) { return document("morphism", morphism_payload(m)); }
std::string serialize(const SemiBrickCert& sb) { return document("semibrick", semibrick_payload(sb)); }
std::string serialize_report(const Json& payload) { return document("report", payload); }

Quiver parse_quiver(std::string_view text) {
  auto doc = parse_text(text);
  return read_quiver(open_document(doc, "quiver"), "/payload");
}

Rep parse_rep(std::string_view text) {
  auto doc = parse_text(text);
  return read_rep(open_document(doc, "rep"), "/payload");
}

Morphism parse_morphism(std::string_view text) {
  auto doc = parse_text(text);
  return read_morphism(open_document(doc, "morphism"), "/payload");
}

std::vector<Rep> parse_members(std::string_view text) {
  auto doc = parse_text(text);
  if (document_kind(text) == "rep") return {read_rep(open_document(doc, "rep"), "/payload")};
  return read_members(open_document(doc, "semibrick"), "/payload");
}

SemiBrickCert parse_semibrick(std::string_view text, bool assume_brick) {
  auto doc = parse_text(text);
  const auto& payload = open_document(doc, "semibrick");
  auto members = read_members(payload, "/payload");
  const bool assumed = payload.contains("assumed") && payload["assumed"].is_boolean() && payload["assumed"].get<bool>();
  auto check = check_semibrick(members, assume_brick || assumed);
  if (!check.certificate) throw InvalidInput("not a semi-brick: " + check.refusal, "/payload/members");
  // Derived fields are optional on input but must agree when present.
  const Json expected = semibrick_payload(*check.certificate);
  for (const char* key : {"hom_table", "ext_table", "brick_flags", "assumed"})
    if (payload.contains(key) && payload[key] != expected[key])
      throw InvalidInput("stored value disagrees with the recomputed certificate", std::string("/payload/") + key);
  return std::move(*check.certificate);
}

std::string document_kind(std::string_view text) {
  auto doc = parse_text(text);
  if (!doc.is_object() || !doc.contains("kind")) throw ParseError("missing key \"kind\"", "/");
  return as_string(doc["kind"], "/kind");
}

}  // namespace semibrick::io
