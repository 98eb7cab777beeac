#include "lattice.hpp"

#include <algorithm>
#include <functional>

#include "errors.hpp"

namespace feld {

model_params make_params(int sites) {
  model_params p;
  p.sites = sites;
  return p;
}

model_params make_symbolic_alpha_params(int sites) {
  model_params p;
  p.sites = sites;
  for (int j = 1; j <= sites; ++j) p.alphas.push_back(lp(avar(j)));
  return p;
}

model_params make_inhomogeneous_dwbp_params(int sites) {
  model_params p;
  p.sites = sites;
  for (int j = 1; j <= sites; ++j) p.vs.push_back(vvar(j));
  return p;
}

laurent_poly l_weight(l_variant variant, const model_params& params, int site, int in_aux,
                      int in_q, int out_aux, int out_q, const laurent_poly& z) {
  if (in_aux + in_q != out_aux + out_q) return {};
  laurent_poly t = lp(tvar());
  int key = in_aux * 8 + in_q * 4 + out_aux * 2 + out_q;
  switch (key) {
    case 0b0000:
      if (variant == l_variant::rescaled) return lp(tvar(), -1);
      if (variant == l_variant::five_vertex) return {-1};
      return {1};
    case 0b0101:
      if (variant == l_variant::rescaled || variant == l_variant::five_vertex) return {1};
      return t;
    case 0b1001:
      if (variant == l_variant::rescaled) return lp(tvar(), -1);
      if (variant == l_variant::five_vertex) return {-1};
      return {1};
    case 0b0110:
      if (variant == l_variant::five_vertex) return {};
      return (t + 1) * z;
    case 0b1010:
      if (variant == l_variant::inhomogeneous) {
        if (site < 1 || site > static_cast<int>(params.alphas.size()))
          fail(errc::invalid_config, "missing shift parameter for site " + std::to_string(site));
        return z + params.alphas[site - 1];
      }
      return z;
    case 0b1111:
      if (variant == l_variant::inhomogeneous) {
        if (site < 1 || site > static_cast<int>(params.alphas.size()))
          fail(errc::invalid_config, "missing shift parameter for site " + std::to_string(site));
        return z - t * params.alphas[site - 1];
      }
      return z;
    default:
      return {};
  }
}

laurent_poly r_weight(int out_a, int out_b, int in_a, int in_b, const laurent_poly& zratio,
                      const laurent_poly& t) {
  if (in_a + in_b != out_a + out_b) return {};
  int key = in_a * 8 + in_b * 4 + out_a * 2 + out_b;
  switch (key) {
    case 0b0000:
      return laurent_poly(1) + t * zratio;
    case 0b0101:
      return t * (laurent_poly(1) - zratio);
    case 0b1001:
      return t + 1;
    case 0b0110:
      return (t + 1) * zratio;
    case 0b1010:
      return zratio - 1;
    case 0b1111:
      return zratio + t;
    default:
      return {};
  }
}

std::vector<laurent_poly> row_args(const laurent_poly& z, const model_params& params) {
  std::vector<laurent_poly> args(params.sites, z);
  if (!params.vs.empty()) {
    if (static_cast<int>(params.vs.size()) != params.sites)
      fail(errc::invalid_config, "need one spectral divisor per site");
    for (int j = 0; j < params.sites; ++j) args[j] = z * lp(params.vs[j], -1);
  }
  return args;
}

namespace {

void check_positions(const std::vector<int>& positions, int sites) {
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 1 || positions[i] > sites)
      fail(errc::config_mismatch, "position out of range");
    if (i > 0 && positions[i] <= positions[i - 1])
      fail(errc::config_mismatch, "positions must be strictly increasing");
  }
}

unsigned positions_mask(const std::vector<int>& positions) {
  unsigned mask = 0;
  for (int p : positions) mask |= 1u << (p - 1);
  return mask;
}

unsigned full_mask(int sites) { return (sites == 0) ? 0u : ((1u << sites) - 1u); }

}  // namespace

site_config site_config::particles(int sites, std::vector<int> positions) {
  check_positions(positions, sites);
  return {sites, false, std::move(positions)};
}

site_config site_config::holes(int sites, std::vector<int> positions) {
  check_positions(positions, sites);
  return {sites, true, std::move(positions)};
}

unsigned site_config::mask() const {
  unsigned marks = positions_mask(positions);
  return marks_are_holes ? (full_mask(sites) & ~marks) : marks;
}

int site_config::particle_count() const {
  int n = static_cast<int>(positions.size());
  return marks_are_holes ? sites - n : n;
}

quantum_state quantum_state::basis(int sites, unsigned mask) {
  quantum_state s;
  s.sites = sites;
  s.amps.assign(std::size_t(1) << sites, laurent_poly{});
  s.amps[mask] = 1;
  return s;
}

quantum_state apply_B(const quantum_state& in, l_variant variant, const model_params& params,
                      const laurent_poly& z) {
  if (in.sites != params.sites) fail(errc::config_mismatch, "state size mismatch");
  int sites = in.sites;
  std::size_t dim = std::size_t(1) << sites;
  auto args = row_args(z, params);
  std::vector<laurent_poly> cur0(dim), cur1 = in.amps;
  for (int j = 1; j <= sites; ++j) {
    unsigned bit = 1u << (j - 1);
    laurent_poly w[2][2][2][2];
    for (int ia = 0; ia < 2; ++ia)
      for (int iq = 0; iq < 2; ++iq)
        for (int oa = 0; oa < 2; ++oa)
          for (int oq = 0; oq < 2; ++oq)
            w[ia][iq][oa][oq] = l_weight(variant, params, j, ia, iq, oa, oq, args[j - 1]);
    std::vector<laurent_poly> nxt0(dim), nxt1(dim);
    for (unsigned mask = 0; mask < dim; ++mask) {
      int iq = (mask >> (j - 1)) & 1;
      for (int ia = 0; ia < 2; ++ia) {
        const laurent_poly& amp = ia ? cur1[mask] : cur0[mask];
        if (amp.is_zero()) continue;
        for (int oa = 0; oa < 2; ++oa) {
          int oq = ia + iq - oa;
          if (oq < 0 || oq > 1) continue;
          const laurent_poly& weight = w[ia][iq][oa][oq];
          if (weight.is_zero()) continue;
          unsigned omask = (mask & ~bit) | (unsigned(oq) << (j - 1));
          (oa ? nxt1 : nxt0)[omask] += amp * weight;
        }
      }
    }
    cur0 = std::move(nxt0);
    cur1 = std::move(nxt1);
  }
  quantum_state out;
  out.sites = sites;
  out.amps = std::move(cur0);
  return out;
}

namespace {

laurent_poly layered_contraction(unsigned start_mask, unsigned end_mask, int sites,
                                 const std::vector<laurent_poly>& zs, l_variant variant,
                                 const model_params& params) {
  quantum_state state = quantum_state::basis(sites, start_mask);
  for (auto it = zs.rbegin(); it != zs.rend(); ++it) state = apply_B(state, variant, params, *it);
  return state.amps[end_mask];
}

}  // namespace

laurent_poly wavefunction(const std::vector<int>& x, int sites,
                          const std::vector<laurent_poly>& zs, l_variant variant,
                          const model_params& params) {
  check_positions(x, sites);
  if (x.size() != zs.size())
    fail(errc::config_mismatch, "need one spectral parameter per particle");
  return layered_contraction(0u, positions_mask(x), sites, zs, variant, params);
}

laurent_poly dual_wavefunction(const std::vector<int>& xbar, int sites,
                               const std::vector<laurent_poly>& zs, l_variant variant,
                               const model_params& params) {
  check_positions(xbar, sites);
  if (xbar.size() != zs.size())
    fail(errc::config_mismatch, "need one spectral parameter per hole");
  unsigned start = full_mask(sites) & ~positions_mask(xbar);
  return layered_contraction(start, full_mask(sites), sites, zs, variant, params);
}

laurent_poly b_matrix_element(const std::vector<int>& xbar, const std::vector<int>& ybar,
                              int sites, const laurent_poly& z, l_variant variant,
                              const model_params& params) {
  check_positions(xbar, sites);
  check_positions(ybar, sites);
  unsigned bra = full_mask(sites) & ~positions_mask(xbar);
  unsigned ket = full_mask(sites) & ~positions_mask(ybar);
  auto args = row_args(z, params);
  laurent_poly product(1);
  int aux = 1;
  for (int j = 1; j <= sites; ++j) {
    int iq = (ket >> (j - 1)) & 1;
    int oq = (bra >> (j - 1)) & 1;
    int oa = aux + iq - oq;
    if (oa < 0 || oa > 1) return {};
    product *= l_weight(variant, params, j, aux, iq, oa, oq, args[j - 1]);
    if (product.is_zero()) return {};
    aux = oa;
  }
  return aux == 0 ? product : laurent_poly{};
}

laurent_poly b_matrix_element_closed_form(const std::vector<int>& xbar,
                                          const std::vector<int>& ybar, int sites,
                                          const laurent_poly& z) {
  check_positions(xbar, sites);
  check_positions(ybar, sites);
  if (ybar.size() != xbar.size() + 1)
    fail(errc::config_mismatch, "ket must carry exactly one more hole than bra");
  int n = static_cast<int>(xbar.size());
  for (int j = 0; j < n; ++j)
    if (!(ybar[j] <= xbar[j] && xbar[j] <= ybar[j + 1])) return {};

  laurent_poly t = lp(tvar());
  int guard_count = 0;
  for (int j = 0; j < n; ++j)
    if (xbar[j] != ybar[j] && xbar[j] != ybar[j + 1]) ++guard_count;
  long t_power = 0;
  for (int j = 0; j <= n; ++j) {
    int x = (j < n) ? xbar[j] : sites + 1;
    t_power += std::max(x - ybar[j] - 1, 0);
  }
  long z_power = ybar[0] - 1;
  for (int j = 0; j < n; ++j) z_power += ybar[j + 1] - xbar[j];
  return (t + 1).pow(guard_count) * lp(tvar(), t_power) * z.pow(z_power);
}

laurent_poly five_vertex_b_element(const std::vector<int>& xbar, const std::vector<int>& ybar,
                                   int sites, const laurent_poly& z) {
  check_positions(xbar, sites);
  check_positions(ybar, sites);
  if (ybar.size() != xbar.size() + 1)
    fail(errc::config_mismatch, "ket must carry exactly one more hole than bra");
  int k = static_cast<int>(ybar.size());
  int removed = -1;
  for (int j = 0, i = 0; j < k; ++j) {
    if (i < k - 1 && xbar[i] == ybar[j]) {
      ++i;
    } else if (removed == -1) {
      removed = j;
    } else {
      return {};
    }
  }
  long sign = ((k % 2) ? -1 : 1) * ((removed % 2) ? -1 : 1);
  return laurent_poly(sign) * z.pow(ybar[removed] - 1);
}

laurent_poly dwbp(int sites, const std::vector<laurent_poly>& zs, const model_params& params) {
  if (static_cast<int>(zs.size()) != sites)
    fail(errc::config_mismatch, "need one spectral parameter per row");
  return layered_contraction(0u, full_mask(sites), sites, zs,
                             params.alphas.empty() ? l_variant::standard
                                                   : l_variant::inhomogeneous,
                             params);
}

namespace {

std::vector<laurent_poly> reversed(std::vector<laurent_poly> zs) {
  std::reverse(zs.begin(), zs.end());
  return zs;
}

}  // namespace

grid_boundary wavefunction_boundary(const std::vector<int>& x, int sites,
                                    const std::vector<laurent_poly>& zs) {
  grid_boundary b;
  b.rows = static_cast<int>(zs.size());
  b.cols = sites;
  b.left.assign(b.rows, 1);
  b.right.assign(b.rows, 0);
  b.bottom = 0u;
  b.top = positions_mask(x);
  b.row_z = reversed(zs);
  return b;
}

grid_boundary dual_wavefunction_boundary(const std::vector<int>& xbar, int sites,
                                         const std::vector<laurent_poly>& zs) {
  grid_boundary b;
  b.rows = static_cast<int>(zs.size());
  b.cols = sites;
  b.left.assign(b.rows, 1);
  b.right.assign(b.rows, 0);
  b.bottom = full_mask(sites) & ~positions_mask(xbar);
  b.top = full_mask(sites);
  b.row_z = reversed(zs);
  return b;
}

grid_boundary dwbp_boundary(int sites, const std::vector<laurent_poly>& zs) {
  grid_boundary b;
  b.rows = sites;
  b.cols = sites;
  b.left.assign(b.rows, 1);
  b.right.assign(b.rows, 0);
  b.bottom = 0u;
  b.top = full_mask(sites);
  b.row_z = reversed(zs);
  return b;
}

laurent_poly enumerate_configurations_oracle(const grid_boundary& boundary, l_variant variant,
                                             const model_params& params, long vertex_cap) {
  if (static_cast<long>(boundary.rows) * boundary.cols > vertex_cap)
    fail(errc::too_large, "grid of " + std::to_string(boundary.rows * boundary.cols) +
                              " vertices exceeds the enumeration bound " +
                              std::to_string(vertex_cap));
  if (static_cast<int>(boundary.left.size()) != boundary.rows ||
      static_cast<int>(boundary.right.size()) != boundary.rows ||
      static_cast<int>(boundary.row_z.size()) != boundary.rows)
    fail(errc::invalid_config, "boundary data does not match the grid");
  if (boundary.cols != params.sites) fail(errc::config_mismatch, "grid width mismatch");
  if (boundary.rows == 0)
    return boundary.bottom == boundary.top ? laurent_poly(1) : laurent_poly{};

  std::vector<std::vector<laurent_poly>> args;
  args.reserve(boundary.rows);
  for (const auto& z : boundary.row_z) args.push_back(row_args(z, params));

  std::vector<int> q(boundary.cols);
  for (int c = 0; c < boundary.cols; ++c) q[c] = (boundary.bottom >> c) & 1;

  laurent_poly total;
  std::function<void(int, int, int, const laurent_poly&)> visit =
      [&](int row, int col, int aux, const laurent_poly& acc) {
        if (col == boundary.cols) {
          if (aux != boundary.right[row]) return;
          if (row + 1 == boundary.rows) {
            unsigned mask = 0;
            for (int c = 0; c < boundary.cols; ++c) mask |= unsigned(q[c]) << c;
            if (mask == boundary.top) total += acc;
            return;
          }
          visit(row + 1, 0, boundary.left[row + 1], acc);
          return;
        }
        int iq = q[col];
        for (int oa = 0; oa < 2; ++oa) {
          int oq = aux + iq - oa;
          if (oq < 0 || oq > 1) continue;
          laurent_poly w =
              l_weight(variant, params, col + 1, aux, iq, oa, oq, args[row][col]);
          if (w.is_zero()) continue;
          q[col] = oq;
          visit(row, col + 1, oa, acc * w);
          q[col] = iq;
        }
      };
  visit(0, 0, boundary.left[0], laurent_poly(1));
  return total;
}

namespace {

void for_each_combination(int sites, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick(k);
  std::function<void(int, int)> rec = [&](int next, int depth) {
    if (depth == k) {
      fn(pick);
      return;
    }
    for (int p = next; p <= sites - (k - depth - 1); ++p) {
      pick[depth] = p;
      rec(p + 1, depth + 1);
    }
  };
  rec(1, 0);
}

}  // namespace

std::vector<std::pair<std::vector<std::vector<int>>, laurent_poly>> dual_inner_states(
    const std::vector<int>& xbar, int sites, const std::vector<laurent_poly>& zs,
    l_variant variant, const model_params& params) {
  check_positions(xbar, sites);
  int n = static_cast<int>(xbar.size());
  if (static_cast<int>(zs.size()) != n)
    fail(errc::config_mismatch, "need one spectral parameter per hole");
  std::vector<std::pair<std::vector<std::vector<int>>, laurent_poly>> out;
  if (n == 0) {
    out.emplace_back(std::vector<std::vector<int>>{}, laurent_poly(1));
    return out;
  }
  std::vector<std::vector<int>> chain(n - 1);
  // c_k has n-k holes; the layer from c_k to c_{k+1} carries z_{n-k}.
  std::function<void(int, const std::vector<int>&, const laurent_poly&)> rec =
      [&](int k, const std::vector<int>& ck, const laurent_poly& acc) {
        if (k == n - 1) {
          laurent_poly w = b_matrix_element({}, ck, sites, zs[0], variant, params);
          if (!w.is_zero()) out.emplace_back(chain, acc * w);
          return;
        }
        for_each_combination(sites, n - k - 1, [&](const std::vector<int>& next) {
          laurent_poly w = b_matrix_element(next, ck, sites, zs[n - k - 1], variant, params);
          if (w.is_zero()) return;
          chain[k] = next;
          rec(k + 1, next, acc * w);
        });
      };
  rec(0, xbar, laurent_poly(1));
  return out;
}

std::vector<laurent_poly> z_symbols(int n) {
  std::vector<laurent_poly> zs;
  for (int j = 1; j <= n; ++j) zs.push_back(lp(zvar(j)));
  return zs;
}

}  // namespace feld
