#pragma once

// Test-only oracles. Nothing here calls into the code paths it checks:
// determinants are cofactor expansions, invariant factors come from
// determinantal divisors, products of slide matrices are row operations.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "kirby/intmat.hpp"

namespace oracle {

using kirby::Integer;
using kirby::IntegerMatrix;

inline Integer laplace_det(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    Integer term = m[0][c] * laplace_det(minor);
    acc += (c % 2 == 0) ? term : Integer(-term);
  }
  return acc;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Invariant factors d_k = D_k / D_{k-1} where D_k is the gcd of all k x k minors.
inline std::vector<Integer> invariant_factors(const IntegerMatrix& a) {
  const std::size_t kmax = std::min(a.rows(), a.cols());
  std::vector<Integer> divisors{1};
  for (std::size_t k = 1; k <= kmax; ++k) {
    Integer g = 0;
    for (const auto& rs : subsets(a.rows(), k))
      for (const auto& cs : subsets(a.cols(), k)) {
        std::vector<std::vector<Integer>> minor;
        for (auto r : rs) {
          std::vector<Integer> row;
          for (auto c : cs) row.push_back(a(r, c));
          minor.push_back(row);
        }
        Integer d = laplace_det(minor);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    divisors.push_back(g);
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k <= kmax; ++k) {
    if (divisors[k] == 0) {
      out.push_back(0);
    } else {
      out.push_back(divisors[k] / divisors[k - 1]);
    }
  }
  return out;
}

/// Cokernel from determinantal divisors; only for small matrices.
inline kirby::AbelianGroup cokernel_by_minors(const IntegerMatrix& a) {
  kirby::AbelianGroup g;
  std::size_t nonzero = 0;
  for (const auto& d : invariant_factors(a)) {
    if (d == 0) continue;
    ++nonzero;
    if (d != 1) g.torsion.push_back(d);
  }
  g.free_rank = a.rows() - nonzero;
  return g;
}

inline Integer det(const IntegerMatrix& a) {
  std::vector<std::vector<Integer>> m(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return laplace_det(m);
}

struct Slide {
  std::size_t i, j;  // 1-based
  int eps;
};

/// Product w_1 * w_2 * ... * w_k of slide matrices, evaluated as row
/// operations on the identity from the right-most factor outwards.
inline IntegerMatrix slide_product(std::size_t n, const std::vector<Slide>& factors) {
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    // Left multiplication by I + eps E_{ij}: row i += eps * row j.
    for (std::size_t c = 0; c < n; ++c) m[it->i - 1][c] += it->eps * m[it->j - 1][c];
  }
  IntegerMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m[i][j];
  return out;
}

inline IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo,
                                   long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

inline IntegerMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
  return m;
}

}  // namespace oracle
