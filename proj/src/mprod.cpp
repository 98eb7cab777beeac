#include "mprod.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <utility>

#include "errors.hpp"
#include "io.hpp"

namespace feld {
namespace {

using json = nlohmann::ordered_json;

laurent_poly tpoly() { return lp(tvar()); }

std::vector<laurent_poly> check_spectral(int n, const std::vector<laurent_poly>& zs) {
  if (n < 0) fail(errc::invalid_config, "operator count must be nonnegative");
  if (static_cast<int>(zs.size()) < n)
    fail(errc::invalid_config, "need one spectral parameter per operator");
  return {zs.begin(), zs.begin() + n};
}

poly_matrix zero_matrix(std::size_t dim) {
  return poly_matrix(dim, std::vector<laurent_poly>(dim));
}

// Tensor step placing the new two-dimensional space in the least significant
// bit: out[(i<<1)|b][(k<<1)|c] += A[i][k] * B[b][c].
void kron_accumulate(poly_matrix& out, const poly_matrix& a,
                     const laurent_poly b[2][2]) {
  const std::size_t dim = a.size();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int b_out = 0; b_out < 2; ++b_out)
        for (int b_in = 0; b_in < 2; ++b_in) {
          if (b[b_out][b_in].is_zero()) continue;
          out[(i << 1) | b_out][(k << 1) | b_in] += a[i][k] * b[b_out][b_in];
        }
    }
}

std::vector<laurent_poly> row_times(const std::vector<laurent_poly>& vec,
                                    const poly_matrix& m) {
  const std::size_t dim = m.size();
  std::vector<laurent_poly> out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (vec[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (m[i][j].is_zero()) continue;
      out[j] += vec[i] * m[i][j];
    }
  }
  return out;
}

// ---- rational-function matrices ------------------------------------------

ratfn_matrix rf_zero(std::size_t dim) {
  return ratfn_matrix(dim, std::vector<rational_fn>(dim));
}

ratfn_matrix rf_identity(std::size_t dim) {
  ratfn_matrix m = rf_zero(dim);
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = rational_fn(laurent_poly(1));
  return m;
}

ratfn_matrix rf_mul(const ratfn_matrix& a, const ratfn_matrix& b) {
  const std::size_t dim = a.size();
  ratfn_matrix out = rf_zero(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (b[k][j].is_zero()) continue;
        out[i][j] = out[i][j] + a[i][k] * b[k][j];
      }
    }
  return out;
}

ratfn_matrix rf_scale(const rational_fn& s, const ratfn_matrix& a) {
  ratfn_matrix out = a;
  for (auto& row : out)
    for (auto& e : row) e = s * e;
  return out;
}

// ---- exact rational evaluation --------------------------------------------

using qmatrix = std::vector<std::vector<mpq_class>>;
using sample_map = std::map<var_id, mpq_class>;

qmatrix q_zero(std::size_t dim) {
  return qmatrix(dim, std::vector<mpq_class>(dim, mpq_class(0)));
}

qmatrix q_identity(std::size_t dim) {
  qmatrix m = q_zero(dim);
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1;
  return m;
}

qmatrix q_mul(const qmatrix& a, const qmatrix& b) {
  const std::size_t dim = a.size();
  qmatrix out = q_zero(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (b[k][j] == 0) continue;
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  return out;
}

qmatrix q_scale(const mpq_class& s, const qmatrix& a) {
  qmatrix out = a;
  for (auto& row : out)
    for (auto& e : row) e *= s;
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> q_first_difference(
    const qmatrix& a, const qmatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != b[i][j]) return std::make_pair(i, j);
  return std::nullopt;
}

qmatrix eval_poly_matrix(const poly_matrix& m, const sample_map& point) {
  qmatrix out = q_zero(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      out[i][j] = eval_rational(m[i][j], point);
  return out;
}

qmatrix eval_ratfn_matrix(const ratfn_matrix& m, const sample_map& point) {
  qmatrix out = q_zero(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      mpq_class den = eval_rational(m[i][j].den, point);
      if (den == 0) fail(errc::degenerate_sample, "denominator vanished at sample point");
      out[i][j] = eval_rational(m[i][j].num, point) / den;
    }
  return out;
}

mpq_class q_pow(mpq_class base, int exp) {
  if (exp < 0) {
    if (base == 0) fail(errc::division_by_zero, "zero base with negative exponent");
    mpq_class inv;
    mpq_inv(inv.get_mpq_t(), base.get_mpq_t());
    return q_pow(inv, -exp);
  }
  mpq_class acc(1);
  while (exp-- > 0) acc *= base;
  return acc;
}

std::string q_str(const mpq_class& v) { return rational_to_string(v); }

json point_to_json(const sample_map& point) {
  json obj = json::object();
  for (const auto& [var, val] : point) obj[var_name(var)] = q_str(val);
  return obj;
}

// Shared driver: evaluates one relation at `samples` points, resampling a
// point at most 16 times when a denominator degenerates.
template <typename CheckFn>
relation_report run_relation(const std::string& name, int n, int samples,
                             std::uint64_t seed, const std::vector<var_id>& vars,
                             CheckFn&& check) {
  relation_report rep;
  rep.relation = name;
  rep.n = n;
  rep.samples = samples;
  for (int s = 0; s < samples; ++s) {
    bool evaluated = false;
    for (int attempt = 0; attempt < 16 && !evaluated; ++attempt) {
      sample_map point = sample_point(seed, s * 16 + attempt, vars);
      std::optional<std::string> detail;
      try {
        detail = check(point);
      } catch (const error& e) {
        if (e.code() == errc::degenerate_sample) continue;
        throw;
      }
      evaluated = true;
      if (detail && rep.passed) {
        rep.passed = false;
        json cx;
        cx["sample"] = s;
        cx["point"] = point_to_json(point);
        cx["detail"] = *detail;
        rep.counterexample = cx.dump();
      }
    }
    if (!evaluated)
      fail(errc::degenerate_sample, "no usable sample point after 16 attempts");
  }
  return rep;
}

std::string entry_detail(const std::string& prefix,
                         std::pair<std::size_t, std::size_t> at,
                         const qmatrix& lhs, const qmatrix& rhs) {
  return prefix + " entry (" + std::to_string(at.first) + "," +
         std::to_string(at.second) + "): lhs=" + q_str(lhs[at.first][at.second]) +
         " rhs=" + q_str(rhs[at.first][at.second]);
}

}  // namespace

// ---- rational_fn -----------------------------------------------------------

rational_fn::rational_fn(laurent_poly n) : num(std::move(n)) {}

rational_fn::rational_fn(laurent_poly n, laurent_poly d)
    : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) fail(errc::division_by_zero, "rational function with zero denominator");
  if (num.is_zero()) den = laurent_poly(1);
}

rational_fn rational_fn::operator+(const rational_fn& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  return rational_fn(num * o.den + o.num * den, den * o.den);
}

rational_fn rational_fn::operator-() const {
  rational_fn out = *this;
  out.num = -out.num;
  return out;
}

rational_fn rational_fn::operator*(const rational_fn& o) const {
  if (is_zero() || o.is_zero()) return rational_fn(laurent_poly(0));
  return rational_fn(num * o.num, den * o.den);
}

bool rational_fn::equals(const rational_fn& o) const {
  return num * o.den == o.num * den;
}

// ---- transfer operators ----------------------------------------------------

mp_operators build_CD(int n, const std::vector<laurent_poly>& zs) {
  const auto z = check_spectral(n, zs);
  if (n > 8) fail(errc::too_large, "transfer operators limited to 8 auxiliary spaces");
  mp_operators ops;
  ops.n = n;
  if (n == 0) {
    ops.D = {{laurent_poly(1)}};
    ops.C = {{laurent_poly(0)}};
    return ops;
  }
  const laurent_poly t = tpoly();
  poly_matrix d{{t, laurent_poly(0)}, {laurent_poly(0), z[0]}};
  poly_matrix c{{laurent_poly(0), laurent_poly(1)},
                {laurent_poly(0), laurent_poly(0)}};
  for (int m = 1; m < n; ++m) {
    const laurent_poly& zn = z[m];
    const std::size_t dim = d.size() << 1;
    poly_matrix d_next = zero_matrix(dim);
    poly_matrix c_next = zero_matrix(dim);
    const laurent_poly zero(0), one(1);
    laurent_poly d_block[2][2] = {{t, zero}, {zero, zn}};
    laurent_poly d_hop[2][2] = {{zero, zero}, {(t + one) * zn, zero}};
    laurent_poly c_raise[2][2] = {{zero, one}, {zero, zero}};
    laurent_poly c_keep[2][2] = {{one, zero}, {zero, zn}};
    kron_accumulate(d_next, d, d_block);
    kron_accumulate(d_next, c, d_hop);
    kron_accumulate(c_next, d, c_raise);
    kron_accumulate(c_next, c, c_keep);
    d = std::move(d_next);
    c = std::move(c_next);
  }
  ops.D = std::move(d);
  ops.C = std::move(c);
  return ops;
}

laurent_poly mp_dual_wavefunction(const std::vector<int>& xbar, int sites,
                                  const std::vector<laurent_poly>& zs) {
  const int n = static_cast<int>(xbar.size());
  if (sites < 0) fail(errc::invalid_config, "negative system size");
  for (int i = 0; i < n; ++i) {
    if (xbar[i] < 1 || xbar[i] > sites)
      fail(errc::invalid_config, "hole position out of range");
    if (i > 0 && xbar[i] <= xbar[i - 1])
      fail(errc::invalid_config, "hole positions must increase strictly");
  }
  if (static_cast<int>(zs.size()) != n)
    fail(errc::invalid_config, "need one spectral parameter per hole");
  if (n == 0) return laurent_poly(1);

  mp_operators ops = build_CD(n, zs);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<laurent_poly> vec(dim);
  vec[0] = laurent_poly(1);
  auto push_D = [&](int count) {
    for (int r = 0; r < count; ++r) vec = row_times(vec, ops.D);
  };
  push_D(sites - xbar[n - 1]);
  for (int k = n - 1; k >= 1; --k) {
    vec = row_times(vec, ops.C);
    push_D(xbar[k] - xbar[k - 1] - 1);
  }
  vec = row_times(vec, ops.C);
  push_D(xbar[0] - 1);
  return vec[dim - 1];
}

// ---- gauge construction ----------------------------------------------------

gauge_objects build_gauge(int n, const std::vector<laurent_poly>& zs, int cap) {
  const auto z = check_spectral(n, zs);
  if (n > cap) fail(errc::dimension_cap, "gauge recursion capped at " + std::to_string(cap));
  gauge_objects g;
  g.n = n;
  if (n == 0) {
    g.D_diag = {{laurent_poly(1)}};
    g.G = rf_identity(1);
    g.G_inv = rf_identity(1);
    return g;
  }
  const laurent_poly t = tpoly();
  const laurent_poly t_inv = lp(tvar(), -1);

  poly_matrix dd{{t, laurent_poly(0)}, {laurent_poly(0), z[0]}};
  std::vector<ratfn_matrix> comps;
  {
    ratfn_matrix c1 = rf_zero(2);
    c1[0][1] = rational_fn(laurent_poly(1));
    comps.push_back(std::move(c1));
  }
  ratfn_matrix big_g = rf_identity(2);
  ratfn_matrix big_g_inv = rf_identity(2);

  for (int m = 1; m < n; ++m) {
    const laurent_poly& zn = z[m];
    const std::size_t half = dd.size();
    const std::size_t dim = half << 1;

    // H solves the off-diagonal cancellation for the enlarged D.
    ratfn_matrix h = rf_zero(half);
    for (int j = 0; j < m; ++j) {
      rational_fn coeff((t + laurent_poly(1)) * zn, z[j] - zn);
      for (std::size_t i = 0; i < half; ++i)
        for (std::size_t k = 0; k < half; ++k) {
          if (comps[j][i][k].is_zero()) continue;
          h[i][k] = h[i][k] + coeff * comps[j][i][k];
        }
    }
    for (std::size_t i = 0; i < half; ++i) {
      rational_fn d_inv(dd[i][i].pow(-1));
      for (std::size_t k = 0; k < half; ++k)
        if (!h[i][k].is_zero()) h[i][k] = d_inv * h[i][k];
    }

    // Unipotent enlargement of the gauge and its inverse.
    ratfn_matrix gh = rf_mul(big_g, h);
    ratfn_matrix hgi = rf_mul(h, big_g_inv);
    ratfn_matrix g_next = rf_zero(dim);
    ratfn_matrix g_inv_next = rf_zero(dim);
    for (std::size_t i = 0; i < half; ++i)
      for (std::size_t k = 0; k < half; ++k) {
        g_next[(i << 1) | 0][(k << 1) | 0] = big_g[i][k];
        g_next[(i << 1) | 1][(k << 1) | 1] = big_g[i][k];
        g_next[(i << 1) | 1][(k << 1) | 0] = gh[i][k];
        g_inv_next[(i << 1) | 0][(k << 1) | 0] = big_g_inv[i][k];
        g_inv_next[(i << 1) | 1][(k << 1) | 1] = big_g_inv[i][k];
        g_inv_next[(i << 1) | 1][(k << 1) | 0] = -hgi[i][k];
      }

    // Diagonal enlargement of D and the component lift.
    poly_matrix dd_next = zero_matrix(dim);
    for (std::size_t i = 0; i < half; ++i) {
      dd_next[(i << 1) | 0][(i << 1) | 0] = t * dd[i][i];
      dd_next[(i << 1) | 1][(i << 1) | 1] = zn * dd[i][i];
    }
    std::vector<ratfn_matrix> comps_next;
    for (int j = 0; j < m; ++j) {
      rational_fn s(z[j] + t * zn, z[j] - zn);
      rational_fn s_low = s * rational_fn(-(zn * t_inv));
      ratfn_matrix lifted = rf_zero(dim);
      for (std::size_t i = 0; i < half; ++i)
        for (std::size_t k = 0; k < half; ++k) {
          if (comps[j][i][k].is_zero()) continue;
          lifted[(i << 1) | 0][(k << 1) | 0] = s * comps[j][i][k];
          lifted[(i << 1) | 1][(k << 1) | 1] = s_low * comps[j][i][k];
        }
      comps_next.push_back(std::move(lifted));
    }
    ratfn_matrix newest = rf_zero(dim);
    for (std::size_t i = 0; i < half; ++i)
      newest[(i << 1) | 0][(i << 1) | 1] = rational_fn(dd[i][i]);
    comps_next.push_back(std::move(newest));

    dd = std::move(dd_next);
    comps = std::move(comps_next);
    big_g = std::move(g_next);
    big_g_inv = std::move(g_inv_next);
  }

  g.D_diag = std::move(dd);
  g.C = std::move(comps);
  g.G = std::move(big_g);
  g.G_inv = std::move(big_g_inv);
  return g;
}

// ---- randomized relation checks --------------------------------------------

std::map<var_id, mpq_class> sample_point(std::uint64_t seed, int index,
                                         const std::vector<var_id>& vars) {
  static const int primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                               37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                               79, 83, 89, 97, 101, 103, 107, 109, 113, 127};
  const std::size_t pool = sizeof(primes) / sizeof(primes[0]);
  if (vars.size() > pool)
    fail(errc::degenerate_sample, "more variables than available sample primes");
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL *
                              (static_cast<std::uint64_t>(index) + 1)));
  std::vector<std::size_t> order(pool);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::map<var_id, mpq_class> point;
  std::size_t next = 0;
  for (const var_id& v : vars) point[v] = mpq_class(primes[order[next++]]);
  return point;
}

std::vector<relation_report> verify_algebra(int n, int samples,
                                            std::uint64_t seed) {
  if (n < 1) fail(errc::invalid_config, "relation checks need at least one operator");
  std::vector<laurent_poly> zs;
  std::vector<var_id> vars{tvar()};
  for (int j = 1; j <= n; ++j) {
    zs.push_back(lp(zvar(j)));
    vars.push_back(zvar(j));
  }
  mp_operators ops = build_CD(n, zs);
  gauge_objects g = build_gauge(n, zs);
  const std::size_t dim = std::size_t{1} << n;

  struct point_data {
    qmatrix d, c, dd, g, g_inv;
    std::vector<qmatrix> comp;
    mpq_class t;
    std::vector<mpq_class> z;
  };
  auto evaluate = [&](const sample_map& point) {
    point_data pd;
    pd.d = eval_poly_matrix(ops.D, point);
    pd.c = eval_poly_matrix(ops.C, point);
    pd.dd = eval_poly_matrix(g.D_diag, point);
    pd.g = eval_ratfn_matrix(g.G, point);
    pd.g_inv = eval_ratfn_matrix(g.G_inv, point);
    for (const auto& comp : g.C) pd.comp.push_back(eval_ratfn_matrix(comp, point));
    pd.t = point.at(tvar());
    for (int j = 1; j <= n; ++j) pd.z.push_back(point.at(zvar(j)));
    return pd;
  };

  std::vector<relation_report> reports;
  reports.push_back(run_relation(
      "component_exchange_with_D", n, samples, seed, vars,
      [&](const sample_map& point) -> std::optional<std::string> {
        point_data pd = evaluate(point);
        for (int j = 0; j < n; ++j) {
          qmatrix lhs = q_mul(pd.comp[j], pd.dd);
          qmatrix rhs = q_scale(pd.z[j] / pd.t, q_mul(pd.dd, pd.comp[j]));
          if (auto at = q_first_difference(lhs, rhs))
            return entry_detail("component " + std::to_string(j + 1), *at, lhs, rhs);
        }
        return std::nullopt;
      }));
  reports.push_back(run_relation(
      "component_square_zero", n, samples, seed, vars,
      [&](const sample_map& point) -> std::optional<std::string> {
        point_data pd = evaluate(point);
        const qmatrix zero = q_zero(dim);
        for (int j = 0; j < n; ++j) {
          qmatrix sq = q_mul(pd.comp[j], pd.comp[j]);
          if (auto at = q_first_difference(sq, zero))
            return entry_detail("component " + std::to_string(j + 1), *at, sq, zero);
        }
        return std::nullopt;
      }));
  reports.push_back(run_relation(
      "component_anticommutation", n, samples, seed, vars,
      [&](const sample_map& point) -> std::optional<std::string> {
        point_data pd = evaluate(point);
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            if (j == k) continue;
            qmatrix lhs = q_mul(pd.comp[j], pd.comp[k]);
            qmatrix rhs = q_scale(-pd.z[j] / pd.z[k], q_mul(pd.comp[k], pd.comp[j]));
            if (auto at = q_first_difference(lhs, rhs))
              return entry_detail("components (" + std::to_string(j + 1) + "," +
                                      std::to_string(k + 1) + ")",
                                  *at, lhs, rhs);
          }
        return std::nullopt;
      }));
  reports.push_back(run_relation(
      "gauge_diagonalizes_D", n, samples, seed, vars,
      [&](const sample_map& point) -> std::optional<std::string> {
        point_data pd = evaluate(point);
        qmatrix lhs = q_mul(pd.d, pd.g);
        qmatrix rhs = q_mul(pd.g, pd.dd);
        if (auto at = q_first_difference(lhs, rhs))
          return entry_detail("D G vs G D_diag", *at, lhs, rhs);
        return std::nullopt;
      }));
  reports.push_back(run_relation(
      "gauge_decomposes_C", n, samples, seed, vars,
      [&](const sample_map& point) -> std::optional<std::string> {
        point_data pd = evaluate(point);
        qmatrix sum = q_zero(dim);
        for (int j = 0; j < n; ++j)
          for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t k = 0; k < dim; ++k) sum[i][k] += pd.comp[j][i][k];
        qmatrix lhs = q_mul(pd.c, pd.g);
        qmatrix rhs = q_mul(pd.g, sum);
        if (auto at = q_first_difference(lhs, rhs))
          return entry_detail("C G vs G sum", *at, lhs, rhs);
        return std::nullopt;
      }));
  reports.push_back(run_relation(
      "gauge_inverse", n, samples, seed, vars,
      [&](const sample_map& point) -> std::optional<std::string> {
        point_data pd = evaluate(point);
        qmatrix prod = q_mul(pd.g, pd.g_inv);
        qmatrix id = q_identity(dim);
        if (auto at = q_first_difference(prod, id))
          return entry_detail("G G_inv vs I", *at, prod, id);
        return std::nullopt;
      }));
  return reports;
}

relation_report prefactor_K_report(int sites, int n, int samples,
                                   std::uint64_t seed) {
  if (n < 0 || sites < n)
    fail(errc::invalid_config, "need at least as many sites as operators");
  const std::string name =
      "prefactor_trace_matches_product[M=" + std::to_string(sites) + "]";
  if (n == 0) {
    relation_report rep;
    rep.relation = name;
    rep.n = 0;
    rep.samples = samples;
    return rep;
  }
  std::vector<laurent_poly> zs;
  std::vector<var_id> vars{tvar()};
  for (int j = 1; j <= n; ++j) {
    zs.push_back(lp(zvar(j)));
    vars.push_back(zvar(j));
  }
  gauge_objects g = build_gauge(n, zs);
  const std::size_t dim = std::size_t{1} << n;

  return run_relation(
      name, n, samples, seed, vars,
      [&](const sample_map& point) -> std::optional<std::string> {
        qmatrix dd = eval_poly_matrix(g.D_diag, point);
        std::vector<qmatrix> comp;
        for (const auto& c : g.C) comp.push_back(eval_ratfn_matrix(c, point));
        const mpq_class t = point.at(tvar());
        std::vector<mpq_class> z;
        for (int j = 1; j <= n; ++j) z.push_back(point.at(zvar(j)));

        qmatrix x = q_identity(dim);
        for (int r = 0; r < sites - n; ++r) x = q_mul(x, dd);
        for (int j = n; j >= 1; --j) x = q_mul(x, comp[j - 1]);
        mpq_class trace = x[0][dim - 1];

        mpq_class prefactor(1);
        for (int j = 1; j <= n; ++j) prefactor *= q_pow(t / z[j - 1], j - 1);
        for (int j = 0; j < n; ++j)
          for (int k = j + 1; k < n; ++k) prefactor *= (z[k] - z[j]) / t;
        mpq_class lhs = prefactor * trace;

        mpq_class rhs = q_pow(t, n * (sites - n));
        for (int j = 0; j < n; ++j)
          for (int k = j + 1; k < n; ++k) rhs *= z[j] + t * z[k];

        if (lhs != rhs)
          return "prefactor lhs=" + q_str(lhs) + " rhs=" + q_str(rhs);
        return std::nullopt;
      });
}

std::string relation_report_to_json(const relation_report& r) {
  json obj;
  obj["relation"] = r.relation;
  obj["n"] = r.n;
  obj["samples"] = r.samples;
  obj["passed"] = r.passed;
  if (r.counterexample.empty())
    obj["counterexample"] = nullptr;
  else
    obj["counterexample"] = json::parse(r.counterexample);
  return obj.dump();
}

}  // namespace feld
