#pragma once

#include <vector>

#include "poly.hpp"

namespace feld {

// Weakly decreasing list of nonnegative parts.
using partition = std::vector<int>;

// Strictly increasing 1-based marked positions (particles or holes).
// N marks among `sites` sites; lambda_j = pos_{N-j+1} - N + j - 1.
partition partition_from_config(const std::vector<int>& positions, int n, int sites);
std::vector<int> config_from_partition(const partition& lambda, int n, int sites);

// N+1 marks; mu_j = pos_{N-j+2} - N + j - 2 for j = 1..N+1.
partition mu_from_config(const std::vector<int>& positions, int n, int sites);

using poly_matrix = std::vector<std::vector<laurent_poly>>;

poly_matrix identity_matrix(std::size_t n);
poly_matrix matmul(const poly_matrix& a, const poly_matrix& b);

// Exact determinant: permutation expansion for n <= 4, fraction-free Bareiss
// elimination above that. Dimensions beyond `cap` throw errc::dimension_cap.
laurent_poly det_poly(poly_matrix m, int cap = 6);

laurent_poly vandermonde(const std::vector<var_id>& zs);

// Bialternant Schur polynomial in n variables.
laurent_poly schur(const partition& lambda, int n, const std::vector<var_id>& zs);

// Factorial Schur polynomial: determinant of prod_{j<=mu_l} (z_k + a_j) over
// the Vandermonde, mu = lambda + delta. Needs at least lambda_1 + n - 1
// shift parameters.
laurent_poly factorial_schur(const partition& lambda, int n, const std::vector<var_id>& zs,
                             const std::vector<laurent_poly>& alphas);

}  // namespace feld
