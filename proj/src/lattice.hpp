#pragma once

#include <utility>
#include <vector>

#include "poly.hpp"

namespace feld {

// Row-operator flavors. `rescaled` carries the 1/t gauge, `five_vertex` is
// the rescaled table at t = -1, `inhomogeneous` adds per-site shifts a_j on
// the z-entries.
enum class l_variant { standard, rescaled, inhomogeneous, five_vertex };

struct model_params {
  int sites = 0;
  std::vector<laurent_poly> alphas;  // per-site shifts, size `sites` when used
  std::vector<var_id> vs;            // per-site spectral divisors, size `sites` when used
};

model_params make_params(int sites);
model_params make_symbolic_alpha_params(int sites);
model_params make_inhomogeneous_dwbp_params(int sites);

// Vertex weight with auxiliary flow left-to-right and quantum flow on the
// site line; `site` is 1-based (it selects a_j for the inhomogeneous table).
laurent_poly l_weight(l_variant variant, const model_params& params, int site, int in_aux,
                      int in_q, int out_aux, int out_q, const laurent_poly& z);

// R-matrix on two auxiliary lines, rows = outputs; zratio stands for z1/z2.
laurent_poly r_weight(int out_a, int out_b, int in_a, int in_b, const laurent_poly& zratio,
                      const laurent_poly& t);

// Per-site spectral arguments of one row: z/v_j when the v's are present.
std::vector<laurent_poly> row_args(const laurent_poly& z, const model_params& params);

// Marked positions on a chain of sites, strictly increasing and 1-based.
struct site_config {
  int sites = 0;
  bool marks_are_holes = false;
  std::vector<int> positions;

  static site_config particles(int sites, std::vector<int> positions);
  static site_config holes(int sites, std::vector<int> positions);

  // Occupation bitmask: bit j-1 set iff site j carries a particle.
  unsigned mask() const;
  int particle_count() const;
};

// Dense state on the 2^M site basis, indexed by occupation bitmask.
struct quantum_state {
  int sites = 0;
  std::vector<laurent_poly> amps;

  static quantum_state basis(int sites, unsigned mask);
};

// One B layer: enter the auxiliary line in |1>, exit projected on <0|.
quantum_state apply_B(const quantum_state& in, l_variant variant, const model_params& params,
                      const laurent_poly& z);

// <x|B(z_1)...B(z_N)|empty>, B(z_N) applied first.
laurent_poly wavefunction(const std::vector<int>& x, int sites,
                          const std::vector<laurent_poly>& zs, l_variant variant,
                          const model_params& params);

// <full|B(z_1)...B(z_N)|xbar>, holes of the initial state at xbar.
laurent_poly dual_wavefunction(const std::vector<int>& xbar, int sites,
                               const std::vector<laurent_poly>& zs, l_variant variant,
                               const model_params& params);

// <xbar|B(z)|ybar> between hole configurations, by the forced single sweep
// of the auxiliary line.
laurent_poly b_matrix_element(const std::vector<int>& xbar, const std::vector<int>& ybar,
                              int sites, const laurent_poly& z, l_variant variant,
                              const model_params& params);

// Product formula for <xbar|B(z)|ybar> in the standard table: zero unless
// ybar_1 <= xbar_1 <= ybar_2 <= ... <= xbar_N <= ybar_{N+1}, otherwise a
// single monomial in t, t+1 and z.
laurent_poly b_matrix_element_closed_form(const std::vector<int>& xbar,
                                          const std::vector<int>& ybar, int sites,
                                          const laurent_poly& z);

// Closed form of the same element in the five-vertex table: +-z^{ybar_j - 1}
// when xbar is ybar with its j-th hole removed, zero otherwise.
laurent_poly five_vertex_b_element(const std::vector<int>& xbar, const std::vector<int>& ybar,
                                   int sites, const laurent_poly& z);

// Domain-wall boundary partition function <full|B(z_1)...B(z_M)|empty>.
// When params.vs is set, the row argument at site j is z_a / v_j.
laurent_poly dwbp(int sites, const std::vector<laurent_poly>& zs, const model_params& params);

// Full edge data of a rows x cols grid; row 0 is applied first (bottom).
struct grid_boundary {
  int rows = 0;
  int cols = 0;
  std::vector<int> left;   // auxiliary in, per row
  std::vector<int> right;  // auxiliary out, per row
  unsigned bottom = 0;     // quantum in, occupation mask
  unsigned top = 0;        // quantum out, occupation mask
  std::vector<laurent_poly> row_z;
};

grid_boundary wavefunction_boundary(const std::vector<int>& x, int sites,
                                    const std::vector<laurent_poly>& zs);
grid_boundary dual_wavefunction_boundary(const std::vector<int>& xbar, int sites,
                                         const std::vector<laurent_poly>& zs);
grid_boundary dwbp_boundary(int sites, const std::vector<laurent_poly>& zs);

// Brute-force sum of weight products over all internal edge assignments,
// pruned by arrow conservation at each vertex. Grids larger than
// `vertex_cap` vertices throw errc::too_large.
laurent_poly enumerate_configurations_oracle(const grid_boundary& boundary, l_variant variant,
                                             const model_params& params, long vertex_cap = 20);

// Decomposition of the dual wavefunction over intermediate hole
// configurations between consecutive B layers. Returns only chains with a
// nonzero weight product; each chain lists the N-1 intermediate configs.
std::vector<std::pair<std::vector<std::vector<int>>, laurent_poly>> dual_inner_states(
    const std::vector<int>& xbar, int sites, const std::vector<laurent_poly>& zs,
    l_variant variant, const model_params& params);

std::vector<laurent_poly> z_symbols(int n);

}  // namespace feld
