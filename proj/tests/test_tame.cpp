#include <doctest.h>

#include "semibrick/builtins.hpp"
#include "semibrick/errors.hpp"
#include "support.hpp"

using namespace semibrick;

TEST_SUITE("tame") {
  TEST_CASE("Kronecker quivers") {
    auto k3 = kronecker(3);
    CHECK(k3.name() == "K3");
    CHECK(k3.vertices() == std::vector<std::string>{"1", "2"});
    REQUIRE(k3.arrow_count() == 3);
    CHECK(k3.arrows()[0].id == "a");
    CHECK(k3.arrows()[2].id == "c");
    for (const auto& a : k3.arrows()) {
      CHECK(a.source == 1);
      CHECK(a.target == 0);
    }
    CHECK(kronecker(27).arrows()[26].id == "a27");
    CHECK_THROWS_AS(kronecker(0), UsageError);
  }

  TEST_CASE("points of the projective line") {
    Field f = Field::rationals();
    auto k3 = oracle::k(3);
    auto x2 = oracle::point(k3, f, 2);
    CHECK(x2.map(0) == Matrix::from_ints(f, 1, 1, {1}));
    CHECK(x2.map(1) == Matrix::from_ints(f, 1, 1, {2}));
    CHECK(x2.map(2) == Matrix::from_ints(f, 1, 1, {4}));
    auto inf = oracle::infinity(k3, f);
    CHECK(inf.map(0).is_zero());
    CHECK(inf.map(2) == Matrix::from_ints(f, 1, 1, {1}));
    auto r = quasi_simple(f, PointOnLine::at(Scalar(3)));
    CHECK(r.quiver().name() == "K2");
    CHECK(r.map(1) == Matrix::from_ints(f, 1, 1, {3}));
    CHECK(quasi_simple(f, PointOnLine::infinity()).map(0).is_zero());
    auto f5 = Field::prime(5);
    CHECK(kronecker_point(oracle::k(2), f5, PointOnLine::at(Scalar(7))).map(1) == Matrix::from_ints(f5, 1, 1, {2}));
  }

  TEST_CASE("quasi-simples are pairwise orthogonal bricks of defect 0") {
    Field f = Field::rationals();
    std::vector<Rep> rs = {quasi_simple(f, PointOnLine::at(Scalar(0))), quasi_simple(f, PointOnLine::at(Scalar(1))),
                           quasi_simple(f, PointOnLine::infinity())};
    auto sb = check_semibrick(rs);
    REQUIRE(sb.certificate);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(defect(rs[i].quiver(), rs[i].dims()) == 0);
      for (std::size_t j = 0; j < 3; ++j) CHECK(sb.certificate->ext_table[i][j] == (i == j ? 1u : 0u));
    }
  }

  TEST_CASE("preprojective tower") {
    Field f = Field::rationals();
    auto k2 = oracle::k(2);
    auto p1 = standard_module(k2, f, StandardKind::projective, 0);
    auto r0 = oracle::point(k2, f, 0), r1 = oracle::point(k2, f, 1), ri = oracle::infinity(k2, f);
    auto rep = preprojective_tower_report(p1, require_semibrick({r0, r1, ri}), 4);
    CHECK(rep.all_hold);
    REQUIRE(rep.levels.size() == 4);
    const std::vector<DimVector> dims = {{1, 0}, {4, 3}, {7, 6}, {10, 9}};
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(rep.levels[i].dims == dims[i]);
      CHECK(rep.levels[i].defect == -1);
      CHECK(rep.levels[i].brick == BrickStatus::certified_brick);
      CHECK(rep.levels[i].end_dim == 1);
      CHECK(rep.levels[i].socle_zero);
    }
    CHECK(rep.quotient_membership.complete);

    auto single = preprojective_tower_report(p1, require_semibrick({r0}), 3);
    CHECK(single.all_hold);
    CHECK(single.levels[2].dims == DimVector{3, 2});
  }

  TEST_CASE("preprojective tower preconditions") {
    Field f = Field::rationals();
    auto k2 = oracle::k(2);
    auto r0 = oracle::point(k2, f, 0);
    auto p2 = standard_module(k2, f, StandardKind::projective, 1);
    auto s2 = standard_module(k2, f, StandardKind::simple, 1);
    CHECK_NOTHROW(preprojective_tower_report(p2, require_semibrick({r0}), 2));
    CHECK_THROWS_AS(preprojective_tower_report(s2, require_semibrick({r0}), 2), InapplicableError);
    CHECK_THROWS_AS(preprojective_tower_report(r0, require_semibrick({r0}), 2), InapplicableError);
    auto p1 = standard_module(k2, f, StandardKind::projective, 0);
    CHECK_THROWS_AS(preprojective_tower_report(p1, require_semibrick({s2}), 2), InapplicableError);
    auto k3 = oracle::k(3);
    auto x = oracle::point(k3, f, 0);
    CHECK_THROWS_AS(
        preprojective_tower_report(standard_module(k3, f, StandardKind::projective, 0), require_semibrick({x}), 2),
        InapplicableError);
  }

  TEST_CASE("builtins") {
    auto k2 = builtin_quiver("k2");
    CHECK(k2->arrow_count() == 2);
    CHECK(builtin_quiver("a4")->vertex_count() == 4);
    CHECK_THROWS_AS(builtin_quiver("z3"), UsageError);
    CHECK_THROWS_AS(builtin_quiver("k0"), UsageError);
    Field f = Field::rationals();
    CHECK(builtin_rep(k2, f, "r0")->map(1).is_zero());
    CHECK(builtin_rep(k2, f, "x1/2")->map(1) == Matrix::from_ints(f, 1, 1, {1}).scaled(Scalar(1, 2)));
    CHECK(builtin_rep(k2, f, "rinf")->map(0).is_zero());
    CHECK(builtin_rep(k2, f, "p2")->dims() == DimVector{2, 1});
    CHECK(builtin_rep(k2, f, "i1")->dims() == DimVector{1, 2});
    CHECK(builtin_rep(k2, f, "kq")->dims() == DimVector{3, 1});
    CHECK_FALSE(builtin_rep(k2, f, "q7"));
    CHECK_FALSE(builtin_rep(k2, f, "s9"));
    auto a3 = builtin_quiver("a3");
    CHECK_FALSE(builtin_rep(a3, f, "r0"));
    CHECK(builtin_rep(a3, f, "s2")->dims() == DimVector{0, 1, 0});
  }
}
