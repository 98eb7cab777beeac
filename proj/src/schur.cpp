#include "schur.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace feld {

namespace {

void check_config(const std::vector<int>& positions, int n, int sites) {
  if (static_cast<int>(positions.size()) != n)
    fail(errc::config_mismatch, "expected " + std::to_string(n) + " marked positions");
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 1 || positions[i] > sites)
      fail(errc::config_mismatch, "position out of range");
    if (i > 0 && positions[i] <= positions[i - 1])
      fail(errc::config_mismatch, "positions must be strictly increasing");
  }
}

partition pad_partition(const partition& lambda, int n) {
  partition padded = lambda;
  while (static_cast<int>(padded.size()) > n) {
    if (padded.back() != 0) fail(errc::invalid_config, "partition has too many parts");
    padded.pop_back();
  }
  for (std::size_t i = 0; i < padded.size(); ++i) {
    if (padded[i] < 0) fail(errc::invalid_config, "negative partition part");
    if (i > 0 && padded[i] > padded[i - 1])
      fail(errc::invalid_config, "partition parts must be weakly decreasing");
  }
  padded.resize(n, 0);
  return padded;
}

}  // namespace

partition partition_from_config(const std::vector<int>& positions, int n, int sites) {
  check_config(positions, n, sites);
  partition lambda(n);
  for (int j = 1; j <= n; ++j) lambda[j - 1] = positions[n - j] - n + j - 1;
  return lambda;
}

std::vector<int> config_from_partition(const partition& lambda, int n, int sites) {
  partition padded = pad_partition(lambda, n);
  std::vector<int> positions(n);
  for (int j = 1; j <= n; ++j) positions[n - j] = padded[j - 1] + n - j + 1;
  check_config(positions, n, sites);
  return positions;
}

partition mu_from_config(const std::vector<int>& positions, int n, int sites) {
  check_config(positions, n + 1, sites);
  partition mu(n + 1);
  for (int j = 1; j <= n + 1; ++j) mu[j - 1] = positions[n + 1 - j] - n + j - 2;
  return mu;
}

poly_matrix identity_matrix(std::size_t n) {
  poly_matrix m(n, std::vector<laurent_poly>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

poly_matrix matmul(const poly_matrix& a, const poly_matrix& b) {
  std::size_t n = a.size(), k = b.size(), cols = k ? b[0].size() : 0;
  poly_matrix r(n, std::vector<laurent_poly>(cols));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (b[l][j].is_zero()) continue;
        r[i][j] += a[i][l] * b[l][j];
      }
    }
  return r;
}

namespace {

laurent_poly det_by_permutations(const poly_matrix& m) {
  std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  laurent_poly det;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    laurent_poly prod(1);
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) prod *= m[i][perm[i]];
    det += (inversions % 2) ? -prod : prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Fraction-free Gaussian elimination (Bareiss): every intermediate entry is
// an exact subdeterminant, each 2x2 cross is exactly divisible by the
// previous pivot.
laurent_poly det_bareiss(poly_matrix m) {
  std::size_t n = m.size();
  int sign = 1;
  laurent_poly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

laurent_poly det_poly(poly_matrix m, int cap) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) fail(errc::invalid_config, "determinant of a non-square matrix");
  if (static_cast<int>(n) > cap)
    fail(errc::dimension_cap, "matrix dimension " + std::to_string(n) + " exceeds cap " +
                                  std::to_string(cap));
  if (n == 0) return {1};
  if (n <= 4) return det_by_permutations(m);
  return det_bareiss(std::move(m));
}

laurent_poly vandermonde(const std::vector<var_id>& zs) {
  laurent_poly prod(1);
  for (std::size_t j = 0; j < zs.size(); ++j)
    for (std::size_t k = j + 1; k < zs.size(); ++k) prod *= lp(zs[j]) - lp(zs[k]);
  return prod;
}

namespace {

laurent_poly divide_by_vandermonde(laurent_poly num, const std::vector<var_id>& zs) {
  for (std::size_t j = 0; j < zs.size(); ++j)
    for (std::size_t k = j + 1; k < zs.size(); ++k)
      num = exact_div(num, lp(zs[j]) - lp(zs[k]));
  return num;
}

}  // namespace

laurent_poly schur(const partition& lambda, int n, const std::vector<var_id>& zs) {
  if (static_cast<int>(zs.size()) != n) fail(errc::config_mismatch, "need n variables");
  partition padded = pad_partition(lambda, n);
  if (n == 0) return {1};
  poly_matrix m(n, std::vector<laurent_poly>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m[j][k] = lp(zs[j], padded[k] + n - 1 - k);
  return divide_by_vandermonde(det_poly(std::move(m), std::max(n, 6)), zs);
}

laurent_poly factorial_schur(const partition& lambda, int n, const std::vector<var_id>& zs,
                             const std::vector<laurent_poly>& alphas) {
  if (static_cast<int>(zs.size()) != n) fail(errc::config_mismatch, "need n variables");
  partition padded = pad_partition(lambda, n);
  if (n == 0) return {1};
  int needed = padded[0] + n - 1;
  if (static_cast<int>(alphas.size()) < needed)
    fail(errc::insufficient_alphas, "need at least " + std::to_string(needed) +
                                        " shift parameters, got " +
                                        std::to_string(alphas.size()));
  poly_matrix m(n, std::vector<laurent_poly>(n));
  for (int l = 0; l < n; ++l) {
    int mu = padded[l] + n - 1 - l;
    for (int k = 0; k < n; ++k) {
      laurent_poly entry(1);
      for (int j = 0; j < mu; ++j) entry *= lp(zs[k]) + alphas[j];
      m[l][k] = entry;
    }
  }
  return divide_by_vandermonde(det_poly(std::move(m), std::max(n, 6)), zs);
}

}  // namespace feld
