#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "cli_support.hpp"

using nlohmann::json;

namespace {

void write(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("tower on K_2") {
    const auto out = cli::temp_path("tower_k2.report.json");
    auto r = cli::run("tower --quiver k2 --base r0 --semibrick r0 --levels 4 --json " + out);
    REQUIRE(r.code == 0);
    auto j = json::parse(cli::slurp(out));
    CHECK(j["kind"] == "report");
    const auto& levels = j["payload"]["result"]["levels"];
    REQUIRE(levels.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(levels[i]["dims"] == json::array({i + 1, i + 1}));
      CHECK(levels[i]["universal"] != false);
    }
    CHECK(j["payload"]["result"]["all_universal"] == true);
    CHECK(j["payload"]["result"]["socle_matches_tower"] == true);
  }

  TEST_CASE("ext from files") {
    json doc = {{"kind", "rep"},
                {"version", 1},
                {"payload",
                 {{"quiver",
                   {{"name", "K3"},
                    {"vertices", {"1", "2"}},
                    {"arrows",
                     {{{"id", "a"}, {"source", "2"}, {"target", "1"}},
                      {{"id", "b"}, {"source", "2"}, {"target", "1"}},
                      {{"id", "c"}, {"source", "2"}, {"target", "1"}}}}}},
                  {"field", {{"kind", "rationals"}, {"characteristic", 0}}},
                  {"dims", {{"1", 1}, {"2", 1}}},
                  {"maps", {{"a", {{"1"}}}, {"b", {{"1"}}}, {"c", {{"1"}}}}}}}};
    const auto path = cli::temp_path("x11.rep.json");
    write(path, doc.dump(2));
    auto r = cli::run("ext --left " + path + " --right " + path);
    CHECK(r.code == 0);
    CHECK(r.out.find("dim Ext = 2") != std::string::npos);
  }

  TEST_CASE("membership refusal is a successful computation") {
    const auto s1 = cli::temp_path("s1.rep.json");
    const auto r0 = cli::temp_path("r0.rep.json");
    write(s1, R"({"kind": "rep", "version": 1, "payload": {"quiver": {"name": "K2", "vertices": ["1", "2"],
      "arrows": [{"id": "a", "source": "2", "target": "1"}, {"id": "b", "source": "2", "target": "1"}]},
      "field": {"kind": "rationals", "characteristic": 0}, "dims": {"1": 1, "2": 0}, "maps": {"a": [[]], "b": [[]]}}})");
    write(r0, R"({"kind": "rep", "version": 1, "payload": {"quiver": {"name": "K2", "vertices": ["1", "2"],
      "arrows": [{"id": "a", "source": "2", "target": "1"}, {"id": "b", "source": "2", "target": "1"}]},
      "field": {"kind": "rationals", "characteristic": 0}, "dims": {"1": 1, "2": 1}, "maps": {"a": [["1"]], "b": [["0"]]}}})");
    const auto out = cli::temp_path("membership.report.json");
    auto r = cli::run("membership --module " + s1 + " --semibrick " + r0 + " --json " + out);
    CHECK(r.code == 0);
    auto j = json::parse(cli::slurp(out));
    CHECK(j["payload"]["result"]["accepted"] == false);
    CHECK(r.out.find("socle") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    CHECK(cli::run("").code == 1);
    CHECK(cli::run("frobnicate").code == 1);
    CHECK(cli::run("hom --quiver k2 --left r0").code == 1);
    CHECK(cli::run("hom --quiver k2 --left r0 --right nothing").code == 1);
    CHECK(cli::run("hom --quiver k2 --left r0 --right /no/such/file.json").code == 1);
    CHECK(cli::run("hom --quiver k2 --left r0 --right r1 --field 4").code == 1);
    CHECK(cli::run("tower --quiver k2 --base r0 --semibrick r0 --levels 0").code == 1);
    CHECK(cli::run("uniserial --quiver k3 --base x0 --semibrick x0 --levels 2").code == 2);
    CHECK(cli::run("semibrick --quiver k2 --semibrick r0,r0").code == 0);
    CHECK(cli::run("tower --quiver k2 --base r0 --semibrick r0,r0 --levels 2").code == 2);
    CHECK(cli::run("tower --quiver k3 --base x0 --semibrick x0 --levels 4").code == 0);
    CHECK(cli::run("tower --quiver k3 --base x0 --semibrick x0 --levels 4", "SEMIBRICK_BUDGET=20").code == 3);
    CHECK(cli::run("tower --quiver k3 --base x0 --semibrick x0 --levels 2", "SEMIBRICK_BUDGET=abc").code == 1);
    const auto bad = cli::temp_path("bad.rep.json");
    write(bad, "{\"kind\": \"rep\"");
    CHECK(cli::run("brick --module " + bad).code == 2);
    CHECK(cli::run("defect --quiver k3 --module x0").code == 2);
    CHECK(cli::run("--version").code == 0);
  }

  TEST_CASE("every subcommand writes a report") {
    const char* cmds[] = {
        "hom --quiver k2 --left p2 --right r0",
        "ext --quiver k2 --left r0 --right p1",
        "euler --quiver a3 --left p3 --right s1 --field 5",
        "defect --quiver k2 --module p1",
        "brick --quiver k2 --module kq",
        "semibrick --quiver k2 --semibrick r0,r1,rinf",
        "socle --quiver k2 --module p2 --semibrick s1",
        "filtration --quiver k2 --module kq --semibrick s1,s2",
        "membership --quiver k2 --module r0 --semibrick s1,s2",
        "universal --quiver k3 --base x0 --semibrick x0,x1",
        "tower --quiver k2 --base p1 --semibrick r0 --levels 3 --seed 7",
        "endtower --quiver k2 --base r0 --semibrick r0 --levels 3",
        "uniserial --quiver k2 --base r0 --semibrick r0 --levels 3",
        "preproj --quiver k2 --base p1 --semibrick r0,r1 --levels 3",
        "demo-kronecker --quiver k4 --field 7",
    };
    int n = 0;
    for (const char* c : cmds) {
      const auto out = cli::temp_path("cmd" + std::to_string(n++) + ".report.json");
      auto r = cli::run(std::string(c) + " --json " + out);
      CAPTURE(c);
      CHECK(r.code == 0);
      CHECK_FALSE(r.out.empty());
      auto j = json::parse(cli::slurp(out));
      CHECK(j["kind"] == "report");
      CHECK(j["version"] == 1);
      CHECK(j["payload"]["command"] == std::string(c).substr(0, std::string(c).find(' ')));
    }
  }

  TEST_CASE("reports are deterministic") {
    const std::string args = "tower --quiver k2 --base r0 --semibrick r0,r1 --levels 3 --seed 11 --json ";
    const auto a = cli::temp_path("det_a.json"), b = cli::temp_path("det_b.json");
    REQUIRE(cli::run(args + a).code == 0);
    REQUIRE(cli::run(args + b).code == 0);
    CHECK(cli::slurp(a) == cli::slurp(b));
  }

  TEST_CASE("assume-brick mode is marked") {
    const auto out = cli::temp_path("assumed.json");
    auto r = cli::run("semibrick --quiver k2 --semibrick r0 --assume-brick --json " + out);
    REQUIRE(r.code == 0);
    auto j = json::parse(cli::slurp(out));
    CHECK(j["payload"]["result"].contains("assumed"));
  }
}
