#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "semibrick/brick.hpp"

namespace semibrick::io {

using Json = nlohmann::json;

constexpr int kFormatVersion = 1;

// Documents are {"kind": ..., "version": 1, "payload": ...}. Serialization is
// canonical: sorted keys, two-space indentation, rationals as lowest-terms
// strings, matrices as row-major lists of rows.

Json quiver_payload(const Quiver& q);
Json field_payload(const Field& f);
Json matrix_payload(const Field& f, const Matrix& m);
Json rep_payload(const Rep& r);
Json morphism_payload(const Morphism& m);
Json semibrick_payload(const SemiBrickCert& sb);

std::string document(std::string_view kind, const Json& payload);

std::string serialize(const Quiver& q);
std::string serialize(const Rep& r);
std::string serialize(const Morphism& m);
std::string serialize(const SemiBrickCert& sb);
std::string serialize_report(const Json& payload);

// Parsers validate every invariant before returning. Malformed text or
// structure raises ParseError; bad shapes ShapeError; a morphism failing the
// intertwining relation IntertwiningError. Locations are JSON pointers.
Quiver parse_quiver(std::string_view text);
Rep parse_rep(std::string_view text);
Morphism parse_morphism(std::string_view text);
// The member list of a "semibrick" document, or the single member of a "rep"
// document. Certification is left to the caller.
std::vector<Rep> parse_members(std::string_view text);
// Parses and re-certifies a semibrick document (InvalidInput on refusal).
SemiBrickCert parse_semibrick(std::string_view text, bool assume_brick = false);

// Kind tag of a document (ParseError if absent).
std::string document_kind(std::string_view text);

}  // namespace semibrick::io
