#include <doctest.h>

#include <random>

#include "semibrick/errors.hpp"
#include "semibrick/io.hpp"
#include "support.hpp"

using namespace semibrick;
using io::Json;

namespace {

std::string rep_doc(const std::string& maps) {
  return R"({"kind": "rep", "version": 1, "payload": {"quiver": {"name": "K2", "vertices": ["1", "2"],
    "arrows": [{"id": "a", "source": "2", "target": "1"}, {"id": "b", "source": "2", "target": "1"}]},
    "field": {"kind": "rationals", "characteristic": 0}, "dims": {"1": 1, "2": 1}, "maps": )" +
         maps + "}}";
}

template <class E, class F>
std::string caught(F&& f) {
  try {
    f();
  } catch (const E& e) {
    return e.what();
  }
  return "<no exception>";
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("quiver document") {
    auto j = Json::parse(io::serialize(kronecker(2)));
    CHECK(j["kind"] == "quiver");
    CHECK(j["version"] == 1);
    CHECK(j["payload"]["vertices"] == Json::array({"1", "2"}));
    CHECK(j["payload"]["arrows"][0] == Json({{"id", "a"}, {"source", "2"}, {"target", "1"}}));
    CHECK(j["payload"]["arrows"][1]["id"] == "b");
  }

  TEST_CASE("rep document") {
    auto r0 = oracle::point(oracle::k(2), Field::rationals(), 0);
    auto j = Json::parse(io::serialize(r0));
    CHECK(j["payload"]["dims"] == Json({{"1", 1}, {"2", 1}}));
    CHECK(j["payload"]["maps"]["a"] == Json::array({Json::array({"1"})}));
    CHECK(j["payload"]["maps"]["b"] == Json::array({Json::array({"0"})}));
    CHECK(j["payload"]["field"]["kind"] == "rationals");
    auto half = kronecker_point(oracle::k(2), Field::rationals(), PointOnLine::at(Scalar(-1, 2)));
    CHECK(Json::parse(io::serialize(half))["payload"]["maps"]["b"][0][0] == "-1/2");
  }

  TEST_CASE("round trips") {
    std::mt19937_64 rng(97);
    for (Field f : {Field::rationals(), Field::prime(7)})
      for (std::size_t r : {1u, 2u, 3u}) {
        auto q = oracle::k(r);
        for (int t = 0; t < 10; ++t) {
          auto m = oracle::random_rep(q, f, oracle::random_dims(*q, 3, rng), rng);
          const auto text = io::serialize(m);
          auto back = io::parse_rep(text);
          CHECK(back == m);
          CHECK(io::serialize(back) == text);
          auto n = oracle::random_rep(q, f, oracle::random_dims(*q, 3, rng), rng);
          auto g = oracle::random_combination(hom_basis(m, n), m, n, rng);
          CHECK(io::parse_morphism(io::serialize(g)) == g);
          CHECK(io::parse_quiver(io::serialize(*q)) == *q);
        }
      }
    auto q = Quiver::linear(3);
    CHECK(io::parse_quiver(io::serialize(q)) == q);
  }

  TEST_CASE("semibrick documents") {
    Field f = Field::rationals();
    auto q = oracle::k(3);
    auto sb = require_semibrick({oracle::point(q, f, 0), oracle::point(q, f, 1)});
    const auto text = io::serialize(sb);
    auto back = io::parse_semibrick(text);
    CHECK(back.ext_table == sb.ext_table);
    CHECK(back.members == sb.members);
    CHECK(io::parse_members(text).size() == 2);
    CHECK(io::document_kind(text) == "semibrick");
    // a stored table that disagrees with recomputation is rejected
    auto j = Json::parse(text);
    j["payload"]["ext_table"][0][0] = 5;
    CHECK_THROWS_AS(io::parse_semibrick(j.dump()), InvalidInput);
    // derived fields may be omitted
    j["payload"].erase("ext_table");
    CHECK(io::parse_semibrick(j.dump()).ext_table == sb.ext_table);
    // a rep document also yields a member list
    CHECK(io::parse_members(io::serialize(sb.members[0])).size() == 1);
  }

  TEST_CASE("serialization is canonical") {
    auto r0 = oracle::point(oracle::k(2), Field::rationals(), 0);
    const auto text = io::serialize(r0);
    CHECK(text == io::serialize(r0));
    CHECK(text.back() == '\n');
    // whitespace variations parse to the same value
    CHECK(io::parse_rep(Json::parse(text).dump()) == r0);
    // key order in the input does not matter, output order is sorted
    CHECK(text.find("\"kind\"") < text.find("\"payload\""));
    CHECK(text.find("\"payload\"") < text.find("\"version\""));
  }

  TEST_CASE("diagnostics") {
    CHECK_NOTHROW(io::parse_rep(rep_doc(R"({"a": [["1"]], "b": [["0"]]})")));
    auto shape = caught<ShapeError>([] { io::parse_rep(rep_doc(R"({"a": [["1", "0"]], "b": [["0"]]})")); });
    CHECK(shape.find("arrow a") != std::string::npos);
    CHECK(shape.find("/payload/maps/a") != std::string::npos);
    CHECK_THROWS_AS(io::parse_rep(rep_doc(R"({"a": [["1"]]})")), ShapeError);
    CHECK_THROWS_AS(io::parse_rep(rep_doc(R"({"a": [["1"]], "b": [["0"]], "c": [["0"]]})")), ShapeError);
    CHECK_THROWS_AS(io::parse_rep(rep_doc(R"({"a": [["2/4"]], "b": [["0"]]})")), ParseError);
    CHECK_THROWS_AS(io::parse_rep(rep_doc(R"({"a": [[1]], "b": [["0"]]})")), ParseError);
    CHECK_THROWS_AS(io::parse_rep(rep_doc(R"({"a": [["x"]], "b": [["0"]]})")), ParseError);
    auto syntax = caught<ParseError>([] { io::parse_rep("{\"kind\": "); });
    CHECK(syntax.find("byte") != std::string::npos);
    CHECK_THROWS_AS(io::parse_rep(R"({"kind": "rep", "version": 2, "payload": {}})"), ParseError);
    CHECK_THROWS_AS(io::parse_rep(R"({"kind": "quiver", "version": 1, "payload": {}})"), ParseError);
    auto extra = Json::parse(rep_doc(R"({"a": [["1"]], "b": [["0"]]})"));
    extra["payload"]["colour"] = "red";
    CHECK_THROWS_AS(io::parse_rep(extra.dump()), ParseError);
    CHECK_THROWS_AS(io::parse_quiver(R"({"kind": "quiver", "version": 1, "payload": {"name": "c", "vertices": ["1", "2"],
      "arrows": [{"id": "a", "source": "1", "target": "2"}, {"id": "b", "source": "2", "target": "1"}]}})"),
                    InvalidInput);
  }

  TEST_CASE("intertwining diagnostic names the arrow") {
    Field f = Field::rationals();
    auto q = oracle::k(2);
    auto r0 = oracle::point(q, f, 0), r1 = oracle::point(q, f, 1);
    auto j = Json::parse(io::serialize(Morphism::zero(r0, r1)));
    j["payload"]["blocks"]["1"] = Json::array({Json::array({"1"})});
    j["payload"]["blocks"]["2"] = Json::array({Json::array({"1"})});
    auto msg = caught<IntertwiningError>([&] { io::parse_morphism(j.dump()); });
    CHECK(msg.find("arrow b") != std::string::npos);
    CHECK(msg.find("/payload/blocks") != std::string::npos);
  }

  TEST_CASE("prime field documents") {
    Field f5 = Field::prime(5);
    auto x = oracle::point(oracle::k(2), f5, 3);
    auto j = Json::parse(io::serialize(x));
    CHECK(j["payload"]["field"] == Json({{"kind", "prime_field"}, {"characteristic", 5}}));
    j["payload"]["maps"]["b"] = Json::array({Json::array({"7"})});
    CHECK_THROWS_AS(io::parse_rep(j.dump()), InvalidInput);
    j["payload"]["field"]["characteristic"] = 6;
    CHECK_THROWS_AS(io::parse_rep(j.dump()), InvalidInput);
  }
}
