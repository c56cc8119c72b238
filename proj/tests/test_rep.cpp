#include <doctest.h>

#include <random>

#include "semibrick/errors.hpp"
#include "support.hpp"

using namespace semibrick;

namespace {

Morphism random_morphism(const Rep& m, const Rep& n, std::mt19937_64& rng) {
  return oracle::random_combination(hom_basis(m, n), m, n, rng);
}

}  // namespace

TEST_SUITE("rep") {
  TEST_CASE("constructor validates shapes") {
    auto q = oracle::k(2);
    Field f = Field::rationals();
    CHECK_THROWS_AS(Rep(q, f, {1, 1}, {Matrix(f, 1, 1)}), ShapeError);
    CHECK_THROWS_AS(Rep(q, f, {1, 1}, {Matrix(f, 1, 1), Matrix(f, 2, 1)}), ShapeError);
    CHECK_THROWS_AS(Rep(q, f, {1, -1}, {Matrix(f, 1, 1), Matrix(f, 1, 1)}), Error);
    CHECK_THROWS_AS(Rep(q, f, {1, 1}, {Matrix(Field::prime(3), 1, 1), Matrix(f, 1, 1)}), Error);
  }

  TEST_CASE("morphism validates intertwining") {
    auto q = oracle::k(2);
    Field f = Field::rationals();
    auto r0 = oracle::point(q, f, 0), r1 = oracle::point(q, f, 1);
    CHECK_THROWS_AS(Morphism(r0, r1, {Matrix::identity(f, 1), Matrix::identity(f, 1)}), IntertwiningError);
    CHECK_NOTHROW(Morphism(r0, r0, {Matrix::identity(f, 1), Matrix::identity(f, 1)}));
    CHECK_THROWS_AS(Morphism(r0, r0, {Matrix::identity(f, 2), Matrix::identity(f, 1)}), ShapeError);
  }

  TEST_CASE("direct sum") {
    auto q = oracle::k(2);
    Field f = Field::rationals();
    auto r0 = oracle::point(q, f, 0);
    auto s1 = standard_module(q, f, StandardKind::simple, 0);
    auto ds = direct_sum({r0, s1});
    CHECK(ds.sum.dims() == DimVector{2, 1});
    REQUIRE(ds.injections.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(ds.injections[i].then(ds.projections[i]) == Morphism::identity(i ? s1 : r0));
      CHECK(ds.injections[i].then(ds.projections[1 - i]).is_zero());
    }
    auto empty = direct_sum({}, q, f);
    CHECK(empty.sum.is_zero());
  }

  TEST_CASE("standard modules on K_2") {
    auto q = oracle::k(2);
    Field f = Field::rationals();
    CHECK(standard_module(q, f, StandardKind::simple, 1).dims() == DimVector{0, 1});
    CHECK(standard_module(q, f, StandardKind::projective, 1).dims() == DimVector{2, 1});
    CHECK(standard_module(q, f, StandardKind::injective, 0).dims() == DimVector{1, 2});
    auto p2 = standard_module(q, f, StandardKind::projective, 1);
    CHECK(oracle::hom_dim(p2, oracle::point(q, f, 3)) == 1);
    // Hom(P(v), M) = M_v
    CHECK(oracle::hom_dim(p2, standard_module(q, f, StandardKind::simple, 0)) == 0);
    CHECK(oracle::hom_dim(p2, standard_module(q, f, StandardKind::simple, 1)) == 1);
    CHECK(oracle::hom_dim(standard_module(q, f, StandardKind::projective, 0), p2) == 2);
  }

  TEST_CASE("kernel image cokernel examples") {
    auto q = oracle::k(2);
    Field f = Field::rationals();
    auto r0 = oracle::point(q, f, 0);
    auto s1 = standard_module(q, f, StandardKind::simple, 0);
    // S_1 sits inside R_0 as the vertex-1 line
    auto basis = hom_basis(s1, r0);
    REQUIRE(basis.size() == 1);
    const auto& i = basis.front();
    CHECK(i.is_injective());
    CHECK(kernel(i).sub.is_zero());
    CHECK(image(i).image.sub.dims() == DimVector{1, 0});
    CHECK(cokernel(i).rep.dims() == DimVector{0, 1});
    auto id = Morphism::identity(r0);
    CHECK(kernel(id).sub.is_zero());
    CHECK(cokernel(id).rep.is_zero());
    auto z = Morphism::zero(r0, r0);
    CHECK(kernel(z).sub.dims() == DimVector{1, 1});
    CHECK(image(z).image.sub.is_zero());
  }

  TEST_CASE("exactness of kernel, image and cokernel on random morphisms") {
    std::mt19937_64 rng(5);
    for (Field f : {Field::rationals(), Field::prime(3)}) {
      for (std::size_t r : {2u, 3u}) {
        auto q = oracle::k(r);
        for (int t = 0; t < 25; ++t) {
          auto m = oracle::random_rep(q, f, oracle::random_dims(*q, 3, rng), rng);
          auto n = oracle::random_rep(q, f, oracle::random_dims(*q, 3, rng), rng);
          auto g = random_morphism(m, n, rng);
          auto k = kernel(g);
          auto im = image(g);
          auto c = cokernel(g);
          CHECK(k.inclusion.then(g).is_zero());
          CHECK(im.corestriction.then(im.image.inclusion) == g);
          CHECK(im.corestriction.is_surjective());
          CHECK(g.then(c.projection).is_zero());
          CHECK(c.projection.is_surjective());
          for (std::size_t v = 0; v < q->vertex_count(); ++v) {
            CHECK(k.sub.dim(v) + im.image.sub.dim(v) == m.dim(v));
            CHECK(im.image.sub.dim(v) + c.rep.dim(v) == n.dim(v));
          }
        }
      }
    }
  }

  TEST_CASE("subrep rejects non-invariant subspaces") {
    auto q = oracle::k(2);
    Field f = Field::rationals();
    auto r0 = oracle::point(q, f, 0);
    std::vector<Subspace> spaces = {Subspace(f, 1), Subspace::column_span(Matrix::identity(f, 1))};
    CHECK_THROWS_AS(subrep(r0, spaces), InvalidInput);
    spaces = {Subspace::column_span(Matrix::identity(f, 1)), Subspace(f, 1)};
    CHECK(subrep(r0, spaces).sub.dims() == DimVector{1, 0});
    CHECK(quotient(r0, spaces).rep.dims() == DimVector{0, 1});
  }

  TEST_CASE("isomorphism decisions") {
    auto q = oracle::k(2);
    Field f = Field::rationals();
    auto r0 = oracle::point(q, f, 0), r1 = oracle::point(q, f, 1);
    auto yes = is_isomorphic(r0, r0);
    CHECK(yes.verdict == Verdict::yes);
    REQUIRE(yes.witness);
    CHECK(yes.witness->is_isomorphism());
    CHECK(is_isomorphic(r0, r1).verdict == Verdict::no);
    CHECK(is_isomorphic(r0, standard_module(q, f, StandardKind::simple, 0)).verdict == Verdict::no);
    // a change of basis of R_0 (+) R_1 is still isomorphic to it
    auto sum = direct_sum({r0, r1}).sum;
    auto p = Matrix::from_ints(f, 2, 2, {1, 1, 0, 1});
    auto pinv = *inverse(p);
    std::vector<Matrix> maps;
    for (const auto& m : sum.maps()) maps.push_back(p * m * pinv);
    Rep conj(q, f, sum.dims(), maps);
    auto res = is_isomorphic(sum, conj);
    CHECK(res.verdict == Verdict::yes);
    REQUIRE(res.witness);
    CHECK(res.witness->is_isomorphism());
  }

  TEST_CASE("composition order") {
    auto q = oracle::k(2);
    Field f = Field::rationals();
    auto s1 = standard_module(q, f, StandardKind::simple, 0);
    auto r0 = oracle::point(q, f, 0);
    auto i = hom_basis(s1, r0).front();
    auto two = Morphism::identity(r0).scaled(Scalar(2));
    auto c = i.then(two);
    CHECK(c.source() == s1);
    CHECK(c.target() == r0);
    CHECK(c == i.scaled(Scalar(2)));
  }
}
