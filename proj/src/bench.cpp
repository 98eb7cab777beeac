#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "errors.hpp"
#include "gtpattern.hpp"
#include "lattice.hpp"
#include "mprod.hpp"
#include "poly.hpp"
#include "schur.hpp"

namespace feld {
namespace {

long long time_micros(const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  body();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
}

}  // namespace

std::vector<int> bench_config(int sites, int n) {
  if (n < 0 || sites < n) fail(errc::invalid_config, "need at least as many sites as holes");
  std::vector<int> holes;
  for (int j = 1; j <= n; ++j) holes.push_back(std::min(2 * j, sites - n + j));
  return holes;
}

std::vector<bench_row> run_bench(int sites, int n) {
  if (sites > 12) fail(errc::cap_exceeded, "transfer sweep capped at 12 sites");
  const std::vector<int> xbar = bench_config(sites, n);
  const std::vector<laurent_poly> zs = z_symbols(n);
  const model_params params = make_params(sites);

  std::vector<bench_row> rows;
  auto record = [&](const std::string& strategy, const std::function<laurent_poly()>& body,
                    const laurent_poly* reference) {
    bench_row row;
    row.strategy = strategy;
    row.sites = sites;
    row.holes = n;
    laurent_poly value;
    row.micros = time_micros([&] { value = body(); });
    row.terms = value.term_count();
    row.agree = reference == nullptr || value == *reference;
    rows.push_back(row);
    return value;
  };

  laurent_poly reference = record(
      "sweep",
      [&] { return dual_wavefunction(xbar, sites, zs, l_variant::standard, params); }, nullptr);
  if (static_cast<long>(sites) * n < 20)
    record(
        "oracle-enum",
        [&] {
          return enumerate_configurations_oracle(dual_wavefunction_boundary(xbar, sites, zs),
                                                 l_variant::standard, params);
        },
        &reference);
  if (n <= 8)
    record(
        "mp-trace", [&] { return mp_dual_wavefunction(xbar, sites, zs); }, &reference);
  record(
      "gt-sum",
      [&] {
        partition lb = partition_from_config(xbar, n, sites);
        return dual_tokuyama_sum(lb, n, sites, zs);
      },
      &reference);
  return rows;
}

std::string bench_rows_to_csv(const std::vector<bench_row>& rows) {
  std::ostringstream out;
  out << "strategy,M,N,micros,terms,agree\n";
  for (const auto& r : rows)
    out << r.strategy << "," << r.sites << "," << r.holes << "," << r.micros << "," << r.terms
        << "," << (r.agree ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace feld
