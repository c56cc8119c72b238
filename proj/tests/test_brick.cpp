#include <doctest.h>

#include <random>

#include "semibrick/errors.hpp"
#include "support.hpp"

using namespace semibrick;

TEST_SUITE("brick") {
  TEST_CASE("End algebra structure") {
    std::mt19937_64 rng(61);
    for (Field f : {Field::rationals(), Field::prime(3)}) {
      auto q = oracle::k(2);
      for (int t = 0; t < 10; ++t) {
        auto m = oracle::random_rep(q, f, oracle::random_dims(*q, 3, rng), rng);
        auto alg = end_algebra(m);
        CHECK(alg.dimension() == oracle::hom_dim(m, m));
        CHECK(alg.is_associative());
        CHECK(alg.is_unital());
        CHECK(alg.element(alg.unit()) == Morphism::identity(m));
        // product convention: basis[i] * basis[j] means "apply j, then i"
        for (std::size_t i = 0; i < alg.dimension(); ++i)
          for (std::size_t j = 0; j < alg.dimension(); ++j)
            CHECK(alg.element(alg.table()[i][j]) == alg.basis()[j].then(alg.basis()[i]));
      }
    }
  }

  TEST_CASE("brick statuses") {
    Field f = Field::rationals();
    auto q = oracle::k(2);
    auto r0 = oracle::point(q, f, 0);
    auto rep = is_brick(r0);
    CHECK(rep.status == BrickStatus::certified_brick);
    CHECK(rep.end_dim == 1);

    auto twice = is_brick(direct_sum({r0, r0}).sum);
    CHECK(twice.status == BrickStatus::not_brick);
    CHECK(twice.end_dim == 4);
    REQUIRE(twice.idempotent);
    const auto& e = *twice.idempotent;
    CHECK(e.then(e) == e);
    CHECK_FALSE(e.is_zero());
    CHECK_FALSE(e == Morphism::identity(e.source()));

    auto sb = require_semibrick({r0});
    auto t = tower(r0, sb, 2);
    auto level2 = is_brick(t.modules[1]);
    CHECK(level2.status == BrickStatus::local_not_certified);
    CHECK(level2.end_dim == 2);
    CHECK(level2.radical_dim == std::optional<std::size_t>(1));
    CHECK(level2.residue_dim == std::optional<std::size_t>(1));

    CHECK(is_brick(standard_module(q, f, StandardKind::projective, 1)).status == BrickStatus::certified_brick);
    CHECK(is_brick(Rep::zero(q, f)).status == BrickStatus::not_brick);
  }

  TEST_CASE("local modules over a finite field") {
    Field f = Field::prime(2);
    auto q = oracle::k(2);
    auto r0 = oracle::point(q, f, 0);
    auto sb = require_semibrick({r0});
    auto t = tower(r0, sb, 3);
    auto b = is_brick(t.modules[2]);
    CHECK(b.status == BrickStatus::local_not_certified);
    CHECK(b.end_dim == 3);
  }

  TEST_CASE("semi-brick tables") {
    Field f = Field::rationals();
    auto k3 = oracle::k(3);
    auto s1 = standard_module(k3, f, StandardKind::simple, 0);
    auto s2 = standard_module(k3, f, StandardKind::simple, 1);
    auto chk = check_semibrick({s1, s2});
    REQUIRE(chk.certificate);
    CHECK(chk.certificate->hom_table == std::vector<std::vector<std::size_t>>{{1, 0}, {0, 1}});
    CHECK(chk.certificate->ext_table == std::vector<std::vector<std::size_t>>{{0, 0}, {3, 0}});

    auto k4 = oracle::k(4);
    auto x0 = oracle::point(k4, f, 0), x1 = oracle::point(k4, f, 1), x2 = oracle::point(k4, f, 2);
    auto c4 = require_semibrick({x0, x1, x2});
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(c4.hom_table[i][j] == (i == j ? 1u : 0u));
        CHECK(c4.ext_table[i][j] == (i == j ? 3u : 2u));
      }
    CHECK(c4.index_of(x1) == std::optional<std::size_t>(1));
  }

  TEST_CASE("semi-brick refusals") {
    Field f = Field::rationals();
    auto q = oracle::k(2);
    auto r0 = oracle::point(q, f, 0);
    auto s1 = standard_module(q, f, StandardKind::simple, 0);
    auto p2 = standard_module(q, f, StandardKind::projective, 1);

    auto dup = check_semibrick({r0, r0});
    CHECK_FALSE(dup.certificate);
    CHECK_FALSE(dup.refusal.empty());

    auto homs = check_semibrick({s1, r0});
    CHECK_FALSE(homs.certificate);
    REQUIRE(homs.violating_pair);
    CHECK(homs.violating_pair->first == 0);
    CHECK(homs.violating_pair->second == 1);

    CHECK_FALSE(check_semibrick({direct_sum({r0, r0}).sum}).certificate);
    CHECK_FALSE(check_semibrick({}).certificate);
    CHECK(check_semibrick({p2}).certificate);
    CHECK_THROWS_AS(require_semibrick({r0, r0}), InvalidInput);
  }

  TEST_CASE("assume-brick mode") {
    Field f = Field::rationals();
    auto q = oracle::k(2);
    auto r0 = oracle::point(q, f, 0);
    auto sb = require_semibrick({r0});
    auto y2 = tower(r0, sb, 2).modules[1];
    CHECK_FALSE(check_semibrick({y2}).certificate);
    auto assumed = check_semibrick({y2}, true);
    REQUIRE(assumed.certificate);
    CHECK(assumed.certificate->assumed);
    CHECK_FALSE(check_semibrick({direct_sum({r0, r0}).sum}, true).certificate);
  }

  TEST_CASE("order invariance") {
    Field f = Field::prime(5);
    auto q = oracle::k(3);
    std::vector<Rep> members = {oracle::point(q, f, 0), oracle::infinity(q, f), oracle::point(q, f, 2)};
    auto a = require_semibrick(members);
    auto b = require_semibrick({members[2], members[0], members[1]});
    const std::size_t perm[3] = {1, 2, 0};  // a-index of b's member k
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(b.hom_table[i][j] == a.hom_table[perm[i]][perm[j]]);
        CHECK(b.ext_table[i][j] == a.ext_table[perm[i]][perm[j]]);
      }
  }

  TEST_CASE("trace radical in characteristic zero") {
    Field f = Field::rationals();
    auto q = oracle::k(2);
    auto r0 = oracle::point(q, f, 0);
    auto t = tower(r0, require_semibrick({r0}), 3);
    auto alg = end_algebra(t.modules[2]);
    auto rad = alg.trace_radical();
    REQUIRE(rad);
    CHECK(rad->dim() == 2);
    CHECK_FALSE(end_algebra(oracle::point(oracle::k(2), Field::prime(3), 0)).trace_radical());
  }
}
