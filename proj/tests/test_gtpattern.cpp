#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "errors.hpp"
#include "gtpattern.hpp"
#include "lattice.hpp"
#include "poly.hpp"
#include "schur.hpp"

using namespace feld;

namespace {

laurent_poly tsym() { return lp(tvar()); }
laurent_poly z1() { return lp(zvar(1)); }
laurent_poly z2() { return lp(zvar(2)); }

std::vector<std::vector<int>> all_configs(int n, int sites) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int p = next; p <= sites; ++p) {
      cur.push_back(p);
      self(self, p + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

unsigned mask_of(const std::vector<int>& positions) {
  unsigned m = 0;
  for (int p : positions) m |= 1u << (p - 1);
  return m;
}

// Ascending particle positions carried by row i of a top-fixed pattern.
std::vector<int> row_particles(const gt_pattern& p, int i) {
  std::vector<int> out;
  for (int e : p.rows[i]) out.push_back(e + 1);
  std::sort(out.begin(), out.end());
  return out;
}

bool pattern_is_strict(const gt_pattern& p) {
  int n = p.size;
  for (int i = 0; i < n; ++i)
    for (int j = i; j + 1 < n; ++j)
      if (p.entry(i, j) <= p.entry(i, j + 1)) return false;
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (p.entry(i - 1, j - 1) < p.entry(i, j)) return false;
      if (p.entry(i, j) < p.entry(i - 1, j)) return false;
    }
  return true;
}

std::vector<int> flatten(const gt_pattern& p) {
  std::vector<int> out;
  for (const auto& row : p.rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

}  // namespace

TEST_CASE("two row patterns above a single box") {
  auto patterns = enumerate_top_fixed({1, 0}, 2);
  REQUIRE(patterns.size() == 3);
  for (const auto& p : patterns) {
    CHECK(p.rows[0] == std::vector<int>{2, 0});
    CHECK_FALSE(p.bottom_fixed);
    CHECK(pattern_is_strict(p));
  }
  CHECK(patterns[0].rows[1] == std::vector<int>{0});
  CHECK(patterns[1].rows[1] == std::vector<int>{1});
  CHECK(patterns[2].rows[1] == std::vector<int>{2});
  auto zs = z_symbols(2);
  CHECK(weight_G(patterns[0], zs) == z1() * z1());
  CHECK(weight_G(patterns[1], zs) == (tsym() + laurent_poly(1)) * z1() * z2());
  CHECK(weight_G(patterns[2], zs) == tsym() * z2() * z2());
}

TEST_CASE("worked pattern weight") {
  gt_pattern p;
  p.size = 2;
  p.rows = {{3, 1}, {3}};
  CHECK(weight_G(p, z_symbols(2)) == tsym() * z1() * z2().pow(3));
}

TEST_CASE("pattern sums factor through the wavefunction product") {
  auto zs = z_symbols(2);
  laurent_poly pairing = z1() + tsym() * z2();
  for (partition lambda : std::vector<partition>{{0, 0}, {1, 0}, {2, 1}, {3, 1}}) {
    laurent_poly sum = tokuyama_sum(lambda, 2, zs);
    CHECK(sum == pairing * schur(lambda, 2, {zvar(1), zvar(2)}));
  }
  CHECK(tokuyama_sum({}, 0, {}) == laurent_poly(1));
}

TEST_CASE("enumeration matches independent nested loops") {
  partition lambda{2, 1, 0};
  auto patterns = enumerate_top_fixed(lambda, 3);
  std::vector<std::vector<int>> expected;
  const int r00 = 4, r01 = 2, r02 = 0;
  for (int a11 = r01; a11 <= r00; ++a11)
    for (int a12 = r02; a12 <= r01; ++a12) {
      if (a12 >= a11) continue;
      for (int a22 = a12; a22 <= a11; ++a22)
        expected.push_back({r00, r01, r02, a11, a12, a22});
    }
  std::sort(expected.begin(), expected.end());
  REQUIRE(patterns.size() == expected.size());
  for (std::size_t i = 0; i < patterns.size(); ++i) CHECK(flatten(patterns[i]) == expected[i]);
}

TEST_CASE("patterns arrive strictly interlaced and lexicographically") {
  for (partition lambda : std::vector<partition>{{1, 0}, {2, 2, 0}, {3, 1, 1}}) {
    int n = static_cast<int>(lambda.size());
    auto patterns = enumerate_top_fixed(lambda, n);
    std::vector<std::vector<int>> flat;
    for (const auto& p : patterns) {
      CHECK(pattern_is_strict(p));
      flat.push_back(flatten(p));
    }
    CHECK(std::is_sorted(flat.begin(), flat.end()));
  }
}

TEST_CASE("per pattern weights match transfer layer products") {
  for (partition lambda : std::vector<partition>{{1, 0}, {2, 1}, {2, 1, 0}, {2, 2, 1}}) {
    int n = static_cast<int>(lambda.size());
    auto zs = z_symbols(n);
    int sites = n + (lambda.empty() ? 0 : lambda[0]);
    model_params params = make_params(sites);
    for (const auto& p : enumerate_top_fixed(lambda, n)) {
      laurent_poly product(1);
      for (int i = 0; i < n; ++i) {
        unsigned target = mask_of(row_particles(p, i));
        unsigned source = (i + 1 < n) ? mask_of(row_particles(p, i + 1)) : 0u;
        quantum_state step =
            apply_B(quantum_state::basis(sites, source), l_variant::standard, params, zs[i]);
        product *= step.amps[target];
      }
      CHECK(product == weight_G(p, zs));
    }
  }
}

TEST_CASE("bottom reading on four sites") {
  auto patterns = enumerate_bottom_fixed({2, 1}, 2, 4);
  REQUIRE(patterns.size() == 3);
  auto zs = z_symbols(2);
  laurent_poly t = tsym();
  std::vector<laurent_poly> expected{t * t * z1() * z2().pow(3),
                                     t * (t + laurent_poly(1)) * z1() * z1() * z2() * z2(),
                                     t * z1().pow(3) * z2()};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& p = patterns[i];
    CHECK(p.bottom_fixed);
    CHECK(p.sites == 4);
    CHECK(p.rows[0] == std::vector<int>{3, 1});
    CHECK(p.rows[1] == std::vector<int>{static_cast<int>(i) + 1});
    CHECK(pattern_row_holes(p, 0) == std::vector<int>{2, 4});
    CHECK(pattern_row_holes(p, 1) == std::vector<int>{static_cast<int>(i) + 2});
    CHECK(weight_G_dual(p, zs) == expected[i]);
  }
}

TEST_CASE("bottom reading rejects overfull shapes") {
  CHECK_THROWS_AS(enumerate_bottom_fixed({3, 1}, 2, 4), error);
}

TEST_CASE("dual pattern sum equals the dual wavefunction") {
  auto zs = z_symbols(2);
  model_params params = make_params(4);
  for (const auto& xbar : all_configs(2, 4)) {
    partition lb = partition_from_config(xbar, 2, 4);
    laurent_poly sum = dual_tokuyama_sum(lb, 2, 4, zs);
    CHECK(sum == dual_wavefunction(xbar, 4, zs, l_variant::standard, params));
  }
}

TEST_CASE("dual pattern sum in factorized form") {
  // Sum over patterns = t^(N(M-N)) prod_{j<k}(z_j + t z_k) s_lambda(z/t).
  auto zs = z_symbols(2);
  partition lb{2, 1};
  laurent_poly sum = dual_tokuyama_sum(lb, 2, 4, zs);
  laurent_poly s = schur(lb, 2, {zvar(1), zvar(2)});
  for (int k = 1; k <= 2; ++k)
    s = substitute_scale(s, zvar(k), 1, monomial({{tvar(), -1}, {zvar(k), 1}}));
  laurent_poly expected = lp(tvar(), 4) * (z1() + tsym() * z2()) * s;
  CHECK(sum == expected);
}

TEST_CASE("dual weights match transfer layer products") {
  for (auto [sites, n] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {5, 3}}) {
    auto zs = z_symbols(n);
    model_params params = make_params(sites);
    for (const auto& xbar : all_configs(n, sites)) {
      partition lb = partition_from_config(xbar, n, sites);
      for (const auto& p : enumerate_bottom_fixed(lb, n, sites)) {
        laurent_poly product(1);
        for (int i = 0; i + 1 < n; ++i)
          product *= b_matrix_element(pattern_row_holes(p, i + 1), pattern_row_holes(p, i),
                                      sites, zs[n - 1 - i], l_variant::standard, params);
        product *= b_matrix_element({}, pattern_row_holes(p, n - 1), sites, zs[0],
                                    l_variant::standard, params);
        CHECK(product == weight_G_dual(p, zs));
      }
    }
  }
}

TEST_CASE("pattern serialization") {
  gt_pattern p;
  p.size = 2;
  p.rows = {{3, 1}, {3}};
  CHECK(pattern_to_json_string(p) == R"({"orientation":"top","M":0,"rows":[[3,1],[3]]})");
  auto bottoms = enumerate_bottom_fixed({2, 1}, 2, 4);
  CHECK(pattern_to_json_string(bottoms[0]) ==
        R"({"orientation":"bottom","M":4,"rows":[[3,1],[1]]})");
}
