#pragma once

// Independent reference computations used as test oracles.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "looptor/homology.hpp"

namespace oracle {

/// Rank over F_p by plain Gaussian elimination on a copy.
inline int rank_mod(const looptor::IntMatrix& m, int p) {
  std::vector<std::vector<std::int64_t>> a(m.rows, std::vector<std::int64_t>(m.cols));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) a[r][c] = ((m.at(r, c) % p) + p) % p;
  auto inv = [p](std::int64_t x) {
    for (std::int64_t y = 1; y < p; ++y)
      if (x * y % p == 1) return y;
    return std::int64_t{0};
  };
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (a[r][c]) piv = r;
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    std::int64_t k = inv(a[rank][c]);
    for (auto& v : a[rank]) v = v * k % p;
    for (int r = 0; r < m.rows; ++r)
      if (r != rank && a[r][c]) {
        std::int64_t f = a[r][c];
        for (int j = 0; j < m.cols; ++j) a[r][j] = ((a[r][j] - f * a[rank][j]) % p + p) % p;
      }
    ++rank;
  }
  return rank;
}

/// dim H_k(C; F_p) from ranks of the boundary maps mod p.
inline int mod_p_betti(const looptor::ChainComplex& C, int k, int p) {
  int r_out = k >= 1 ? rank_mod(C.boundary[k], p) : 0;
  int r_in = k + 1 <= C.top() ? rank_mod(C.boundary[k + 1], p) : 0;
  return C.ranks[k] - r_out - r_in;
}

/// Universal coefficients: dim H_k(C; F_p) from the integral groups.
inline int uct_mod_p(const std::vector<looptor::HomologyGroup>& H, int k, int p) {
  auto divisible = [p](const looptor::HomologyGroup& h) {
    int n = 0;
    for (auto t : h.torsion) n += t % p == 0;
    return n;
  };
  return H[k].betti + divisible(H[k]) + (k > 0 ? divisible(H[k - 1]) : 0);
}

inline looptor::IntMatrix multiply(const looptor::IntMatrix& a, const looptor::IntMatrix& b) {
  looptor::IntMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k)
      if (a.at(i, k))
        for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
  return c;
}

inline bool is_zero(const looptor::IntMatrix& m) {
  for (auto v : m.data)
    if (v) return false;
  return true;
}

/// Random unimodular matrix and its inverse, from a few elementary operations.
inline std::pair<looptor::IntMatrix, looptor::IntMatrix> unimodular(int n, std::mt19937_64& rng, int steps = 4) {
  looptor::IntMatrix u(n, n), v(n, n);
  for (int i = 0; i < n; ++i) u.at(i, i) = v.at(i, i) = 1;
  if (n < 2) return {u, v};
  std::uniform_int_distribution<int> pick(0, n - 1), coef(-1, 1);
  for (int s = 0; s < steps; ++s) {
    int i = pick(rng), j = pick(rng), k = coef(rng);
    if (i == j || k == 0) continue;
    // u <- E u with E = I + k e_ij; v <- v E^{-1}.
    for (int c = 0; c < n; ++c) u.at(i, c) += k * u.at(j, c);
    for (int r = 0; r < n; ++r) v.at(r, j) -= k * v.at(r, i);
  }
  return {u, v};
}

/// A chain complex assembled from elementary pieces with known homology, then disguised by a
/// random change of basis in every degree.
struct KnownComplex {
  looptor::ChainComplex complex;
  std::vector<looptor::HomologyGroup> homology;
};

inline KnownComplex random_known_complex(std::mt19937_64& rng, int top = 3) {
  // Pieces: free Z in degree k, or Z --m--> Z from degree k+1 to k.
  std::vector<int> free(top + 1, 0);
  std::vector<std::vector<int>> edges(top + 1);  // edges[k]: multipliers of pieces from k+1 to k
  std::uniform_int_distribution<int> count(0, 2), mult(1, 6);
  for (int k = 0; k <= top; ++k) free[k] = count(rng);
  for (int k = 0; k < top; ++k) {
    int e = count(rng);
    for (int i = 0; i < e; ++i) edges[k].push_back(mult(rng));
  }
  std::vector<int> ranks(top + 1);
  for (int k = 0; k <= top; ++k) ranks[k] = free[k] + static_cast<int>(edges[k].size()) + (k > 0 ? static_cast<int>(edges[k - 1].size()) : 0);
  // Basis of C_k: free part, then sources of pieces into degree k-1, then targets of pieces from k+1.
  KnownComplex out;
  out.complex.ranks = ranks;
  out.complex.boundary.resize(top + 1);
  out.complex.boundary[0] = looptor::IntMatrix(0, ranks[0]);
  std::vector<looptor::IntMatrix> fwd, back;
  for (int k = 0; k <= top; ++k) {
    auto [u, v] = unimodular(ranks[k], rng);
    fwd.push_back(u);
    back.push_back(v);
  }
  for (int k = 1; k <= top; ++k) {
    looptor::IntMatrix d(ranks[k - 1], ranks[k]);
    int src0 = free[k];
    int tgt0 = free[k - 1] + (k >= 2 ? static_cast<int>(edges[k - 2].size()) : 0);
    for (std::size_t i = 0; i < edges[k - 1].size(); ++i) d.at(tgt0 + i, src0 + i) = edges[k - 1][i];
    // Disguise: d' = U_{k-1} d U_k^{-1}.
    out.complex.boundary[k] = multiply(multiply(fwd[k - 1], d), back[k]);
  }
  out.homology.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    std::vector<std::int64_t> orders;
    int betti = free[k];
    for (int m : edges[k]) orders.push_back(m);
    out.homology[k] = {betti, looptor::canonical_torsion(orders)};
  }
  return out;
}

}  // namespace oracle
