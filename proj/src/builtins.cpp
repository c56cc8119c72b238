#include "semibrick/builtins.hpp"

#include <cctype>
#include <string>

#include "semibrick/errors.hpp"
#include "semibrick/tame.hpp"

namespace semibrick {

namespace {

std::optional<std::size_t> positive_integer(std::string_view s) {
  if (s.empty() || s.size() > 6) return std::nullopt;
  std::size_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  if (v == 0) return std::nullopt;
  return v;
}

bool is_kronecker(const Quiver& q) {
  if (q.vertex_count() != 2 || q.arrow_count() == 0) return false;
  for (const auto& a : q.arrows())
    if (a.source != 1 || a.target != 0) return false;
  return true;
}

}  // namespace

std::shared_ptr<const Quiver> builtin_quiver(std::string_view name) {
  if (name.size() >= 2 && (name[0] == 'k' || name[0] == 'K'))
    if (auto r = positive_integer(name.substr(1)); r && *r <= 64)
      return std::make_shared<const Quiver>(kronecker(*r));
  if (name.size() >= 2 && (name[0] == 'a' || name[0] == 'A'))
    if (auto n = positive_integer(name.substr(1)); n && *n <= 64) return std::make_shared<const Quiver>(Quiver::linear(*n));
  throw UsageError("unknown builtin quiver \"" + std::string(name) + "\" (expected k<r> or a<n>)");
}

std::optional<Rep> builtin_rep(const std::shared_ptr<const Quiver>& q, const Field& f, std::string_view name) {
  if (name.empty()) return std::nullopt;
  const std::string rest(name.substr(1));
  const char head = name[0];
  if (name == "kq") {
    std::vector<Rep> parts;
    for (std::size_t v = 0; v < q->vertex_count(); ++v)
      parts.push_back(standard_module(q, f, StandardKind::projective, v));
    return direct_sum(parts, q, f).sum;
  }
  if ((head == 'r' || head == 'x') && !rest.empty() && is_kronecker(*q)) {
    if (rest == "inf") return kronecker_point(q, f, PointOnLine::infinity());
    Scalar v;
    try {
      v = Field::rationals().parse_element(rest);
    } catch (const Error&) {
      return std::nullopt;
    }
    return kronecker_point(q, f, PointOnLine::at(v));
  }
  if ((head == 's' || head == 'p' || head == 'i') && q->find_vertex(rest)) {
    const auto kind = head == 's' ? StandardKind::simple : head == 'p' ? StandardKind::projective : StandardKind::injective;
    return standard_module(q, f, kind, *q->find_vertex(rest));
  }
  return std::nullopt;
}

}  // namespace semibrick
