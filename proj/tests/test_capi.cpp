// Exercises the shared library through its C header only.
#include <doctest.h>

#include <cstring>
#include <string>

#include "semibrick/semibrick.h"

namespace {

sb_quiver* quiver(const char* name) {
  sb_quiver* q = nullptr;
  REQUIRE(sb_quiver_builtin(name, &q) == SB_OK);
  return q;
}

sb_rep* rep(sb_quiver* q, const char* name, const char* field = "Q") {
  sb_rep* r = nullptr;
  REQUIRE(sb_rep_builtin(q, field, name, &r) == SB_OK);
  return r;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("version and options") {
    CHECK(std::strlen(sb_version()) > 0);
    sb_options o;
    sb_options_init(&o);
    CHECK(o.budget == 512);
    CHECK(o.levels == 1);
    CHECK(o.has_seed == 0);
    CHECK(o.assume_brick == 0);
  }

  TEST_CASE("status codes") {
    sb_quiver* q = nullptr;
    CHECK(sb_quiver_builtin("nope", &q) == SB_ERR_USAGE);
    CHECK(q == nullptr);
    CHECK(std::string(sb_last_error()).find("nope") != std::string::npos);
    CHECK(sb_quiver_builtin(nullptr, &q) == SB_ERR_USAGE);
    CHECK(sb_quiver_parse("{", &q) == SB_ERR_INVALID_INPUT);
    CHECK(std::string(sb_last_error()).find("byte") != std::string::npos);

    auto* k2 = quiver("k2");
    sb_rep* r = nullptr;
    CHECK(sb_rep_builtin(k2, "Q", "zzz", &r) == SB_ERR_USAGE);
    CHECK(sb_rep_builtin(k2, "6", "r0", &r) == SB_ERR_USAGE);

    auto* k3 = quiver("k3");
    auto* x = rep(k3, "x0");
    sb_replist* l = nullptr;
    REQUIRE(sb_replist_new(&l) == SB_OK);
    REQUIRE(sb_replist_push(l, x) == SB_OK);
    sb_options o;
    sb_options_init(&o);
    o.levels = 5;
    o.budget = 20;
    sb_report* out = nullptr;
    CHECK(sb_cmd_tower(x, l, &o, &out) == SB_ERR_BUDGET);
    CHECK(out == nullptr);
    o.levels = 2;
    CHECK(sb_cmd_uniserial(x, l, &o, &out) == SB_ERR_INVALID_INPUT);
    CHECK(sb_cmd_hom(x, nullptr, &out) == SB_ERR_USAGE);

    sb_replist_free(l);
    sb_rep_free(x);
    sb_quiver_free(k3);
    sb_quiver_free(k2);
  }

  TEST_CASE("serialize and parse round trip") {
    auto* k2 = quiver("k2");
    auto* r = rep(k2, "r1/3");
    char* text = nullptr;
    REQUIRE(sb_rep_serialize(r, &text) == SB_OK);
    CHECK(std::string(text).find("\"1/3\"") != std::string::npos);
    sb_rep* back = nullptr;
    REQUIRE(sb_rep_parse(text, &back) == SB_OK);
    CHECK(sb_rep_total_dim(back) == 2);
    char* again = nullptr;
    REQUIRE(sb_rep_serialize(back, &again) == SB_OK);
    CHECK(std::string(text) == std::string(again));
    sb_replist* l = nullptr;
    REQUIRE(sb_replist_new(&l) == SB_OK);
    CHECK(sb_replist_append_document(l, text) == SB_OK);
    CHECK(sb_replist_size(l) == 1);
    CHECK(sb_replist_append_document(l, "{}") == SB_ERR_INVALID_INPUT);
    sb_replist_free(l);

    char* qtext = nullptr;
    REQUIRE(sb_quiver_serialize(k2, &qtext) == SB_OK);
    sb_quiver* q2 = nullptr;
    CHECK(sb_quiver_parse(qtext, &q2) == SB_OK);
    sb_quiver_free(q2);

    sb_string_free(qtext);
    sb_string_free(again);
    sb_string_free(text);
    sb_rep_free(back);
    sb_rep_free(r);
    sb_quiver_free(k2);
  }

  TEST_CASE("commands produce reports") {
    auto* k3 = quiver("k3");
    auto* x = rep(k3, "x1");
    sb_report* out = nullptr;
    REQUIRE(sb_cmd_ext(x, x, &out) == SB_OK);
    CHECK(std::string(sb_report_text(out)).find("dim Ext = 2") != std::string::npos);
    CHECK(std::string(sb_report_json(out)).find("\"kind\": \"report\"") != std::string::npos);
    sb_report_free(out);

    REQUIRE(sb_cmd_demo_kronecker(3, "Q", &out) == SB_OK);
    CHECK(std::string(sb_report_json(out)).find("\"matches\": true") != std::string::npos);
    sb_report_free(out);
    CHECK(sb_cmd_demo_kronecker(1, "Q", &out) == SB_ERR_USAGE);
    CHECK(sb_cmd_demo_kronecker(3, "3", &out) == SB_ERR_USAGE);

    auto* k2 = quiver("k2");
    auto* s1 = rep(k2, "s1");
    auto* r0 = rep(k2, "r0");
    sb_replist* l = nullptr;
    REQUIRE(sb_replist_new(&l) == SB_OK);
    REQUIRE(sb_replist_push(l, r0) == SB_OK);
    REQUIRE(sb_cmd_membership(s1, l, nullptr, &out) == SB_OK);
    CHECK(std::string(sb_report_json(out)).find("\"accepted\": false") != std::string::npos);
    sb_report_free(out);

    sb_replist_free(l);
    sb_rep_free(r0);
    sb_rep_free(s1);
    sb_quiver_free(k2);
    sb_rep_free(x);
    sb_quiver_free(k3);
  }

  TEST_CASE("null handles are tolerated by accessors and free functions") {
    sb_quiver_free(nullptr);
    sb_rep_free(nullptr);
    sb_replist_free(nullptr);
    sb_report_free(nullptr);
    sb_string_free(nullptr);
    CHECK(sb_rep_total_dim(nullptr) == 0);
    CHECK(sb_replist_size(nullptr) == 0);
    CHECK(std::string(sb_report_json(nullptr)).empty());
  }
}
