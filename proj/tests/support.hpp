#pragma once

// Test support: random generators and oracles that do not go through the
// library's linear algebra.

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "semibrick/tame.hpp"

namespace oracle {

using semibrick::DimVector;
using semibrick::Field;
using semibrick::Matrix;
using semibrick::Quiver;
using semibrick::Rep;
using semibrick::Scalar;

using Dense = std::vector<std::vector<Scalar>>;

inline Scalar reduce(const Scalar& x, std::uint32_t p) {
  if (p == 0) return x;
  mpz_class num = x.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = x.get_den() % p;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
  return Scalar(mpz_class((num * inv) % p));
}

// Plain Gaussian elimination, written separately from the library's rref.
inline std::size_t rank(Dense a, std::uint32_t p) {
  std::size_t r = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (auto& row : a)
    for (auto& x : row) x = reduce(x, p);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Scalar f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] = reduce(a[i][k] - f * a[r][k], p);
    }
    ++r;
  }
  return r;
}

// dim Hom(M, N) from the Kronecker-product form of the intertwining equations:
// vec(X_t M_a) - vec(N_a X_s) with column-major vec.
inline std::size_t hom_dim(const Rep& m, const Rep& n) {
  const auto& q = m.quiver();
  const std::uint32_t p = m.field().characteristic();
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    offset.push_back(unknowns);
    unknowns += m.dim(v) * n.dim(v);
  }
  Dense eq;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto s = q.arrows()[a].source, t = q.arrows()[a].target;
    const Matrix& ma = m.map(a);
    const Matrix& na = n.map(a);
    // rows of the equation: entries (i, j) of an N_t x M_s matrix
    for (std::size_t j = 0; j < m.dim(s); ++j)
      for (std::size_t i = 0; i < n.dim(t); ++i) {
        std::vector<Scalar> row(unknowns, Scalar(0));
        // (X_t M_a)_{ij} = sum_k X_t[i,k] M_a[k,j]; X_t[i,k] sits at offset_t + k * N_t + i
        for (std::size_t k = 0; k < m.dim(t); ++k) row[offset[t] + k * n.dim(t) + i] += ma(k, j);
        // (N_a X_s)_{ij} = sum_k N_a[i,k] X_s[k,j]; X_s[k,j] at offset_s + j * N_s + k
        for (std::size_t k = 0; k < n.dim(s); ++k) row[offset[s] + j * n.dim(s) + k] -= na(i, k);
        eq.push_back(std::move(row));
      }
  }
  if (eq.empty()) return unknowns;
  return unknowns - rank(eq, p);
}

// dim Ext = dim of the arrow space minus the rank of the coboundary map.
inline std::size_t ext_dim(const Rep& m, const Rep& n) {
  const auto& q = m.quiver();
  std::size_t arrows = 0, vertices = 0;
  for (const auto& a : q.arrows()) arrows += m.dim(a.source) * n.dim(a.target);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) vertices += m.dim(v) * n.dim(v);
  return arrows - (vertices - oracle::hom_dim(m, n));
}

// |Hom(M, N)| by enumerating every family of vertex matrices over F_p.
inline std::size_t brute_force_hom_count(const Rep& m, const Rep& n) {
  const std::uint32_t p = m.field().characteristic();
  const auto& q = m.quiver();
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    offset.push_back(unknowns);
    unknowns += m.dim(v) * n.dim(v);
  }
  std::vector<long> x(unknowns, 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < q.arrow_count() && ok; ++a) {
      const auto s = q.arrows()[a].source, t = q.arrows()[a].target;
      for (std::size_t i = 0; i < n.dim(t) && ok; ++i)
        for (std::size_t j = 0; j < m.dim(s) && ok; ++j) {
          mpz_class lhs = 0, rhs = 0;
          for (std::size_t k = 0; k < m.dim(t); ++k)
            lhs += x[offset[t] + i * m.dim(t) + k] * m.map(a)(k, j).get_num();
          for (std::size_t k = 0; k < n.dim(s); ++k)
            rhs += n.map(a)(i, k).get_num() * x[offset[s] + k * m.dim(s) + j];
          mpz_class d = (lhs - rhs) % p;
          ok = d == 0;
        }
    }
    if (ok) ++count;
    std::size_t k = 0;
    while (k < unknowns && ++x[k] == static_cast<long>(p)) x[k++] = 0;
    if (k == unknowns) break;
  }
  return count;
}

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng, long lo = -2,
                            long hi = 2) {
  std::uniform_int_distribution<long> dist(lo, hi);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = f.from_int(dist(rng));
  return m;
}

inline Rep random_rep(const std::shared_ptr<const Quiver>& q, const Field& f, const DimVector& dims,
                      std::mt19937_64& rng) {
  std::vector<Matrix> maps;
  for (const auto& a : q->arrows())
    maps.push_back(random_matrix(f, static_cast<std::size_t>(dims[a.target]), static_cast<std::size_t>(dims[a.source]), rng));
  return Rep(q, f, dims, std::move(maps));
}

inline DimVector random_dims(const Quiver& q, long max, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(0, max);
  DimVector d(q.vertex_count());
  for (auto& x : d) x = dist(rng);
  return d;
}

inline std::shared_ptr<const Quiver> k(std::size_t r) {
  return std::make_shared<const Quiver>(semibrick::kronecker(r));
}

inline Rep point(const std::shared_ptr<const Quiver>& q, const Field& f, long l) {
  return semibrick::kronecker_point(q, f, semibrick::PointOnLine::at(Scalar(l)));
}

inline Rep infinity(const std::shared_ptr<const Quiver>& q, const Field& f) {
  return semibrick::kronecker_point(q, f, semibrick::PointOnLine::infinity());
}

// Random element of the span of a Hom basis (nonzero unless the basis is empty).
inline semibrick::Morphism random_combination(const std::vector<semibrick::Morphism>& basis, const Rep& s,
                                              const Rep& t, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-3, 3);
  auto f = semibrick::Morphism::zero(s, t);
  for (const auto& b : basis) f = f + b.scaled(s.field().from_int(dist(rng)));
  return f;
}

}  // namespace oracle
