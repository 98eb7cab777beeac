#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "schur.hpp"

using namespace feld;

namespace {

std::vector<var_id> z_ids(int n) {
  std::vector<var_id> out;
  for (int j = 1; j <= n; ++j) out.push_back(zvar(j));
  return out;
}

laurent_poly z1() { return lp(zvar(1)); }
laurent_poly z2() { return lp(zvar(2)); }
laurent_poly z3() { return lp(zvar(3)); }

// Independent oracle: sum over semistandard tableaux of the given shape with
// entries in 1..n, weakly increasing along rows, strictly increasing down
// columns.
void fill_ssyt(const std::vector<int>& shape, int n, std::vector<std::vector<int>>& t, int r,
               int c, laurent_poly& acc) {
  if (r == static_cast<int>(shape.size())) {
    std::map<int, long> counts;
    for (const auto& row : t)
      for (int v : row) ++counts[v];
    std::vector<std::pair<var_id, long>> exps;
    for (const auto& [v, e] : counts) exps.push_back({zvar(v), e});
    acc += laurent_poly(1, monomial(exps));
    return;
  }
  int nr = r, nc = c + 1;
  if (nc == shape[r]) {
    nr = r + 1;
    nc = 0;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, t[r][c - 1]);
  if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
  for (int v = lo; v <= n; ++v) {
    t[r][c] = v;
    fill_ssyt(shape, n, t, nr, nc, acc);
  }
}

laurent_poly schur_ssyt(const partition& lambda, int n) {
  std::vector<int> shape;
  for (int part : lambda)
    if (part > 0) shape.push_back(part);
  if (static_cast<int>(shape.size()) > n) return laurent_poly(0);
  if (shape.empty()) return laurent_poly(1);
  std::vector<std::vector<int>> t;
  for (int len : shape) t.push_back(std::vector<int>(len, 0));
  laurent_poly acc;
  fill_ssyt(shape, n, t, 0, 0, acc);
  return acc;
}

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

}  // namespace

TEST_CASE("position configurations translate to partitions") {
  CHECK(partition_from_config({2, 4}, 2, 4) == partition{2, 1});
  CHECK(partition_from_config({3, 6}, 2, 10) == partition{4, 2});
  CHECK(partition_from_config({1, 2, 3}, 3, 5) == partition{0, 0, 0});
  CHECK(partition_from_config({3, 4, 5}, 3, 5) == partition{2, 2, 2});
  CHECK(config_from_partition({2, 1}, 2, 4) == std::vector<int>{2, 4});
  CHECK(config_from_partition({0, 0}, 2, 6) == std::vector<int>{1, 2});
}

TEST_CASE("translations round trip over every configuration") {
  for (int sites = 1; sites <= 8; ++sites)
    for (int n = 0; n <= sites; ++n)
      for (const auto& cfg : all_configs(n, sites)) {
        partition lambda = partition_from_config(cfg, n, sites);
        CHECK(static_cast<int>(lambda.size()) == n);
        CHECK(std::is_sorted(lambda.rbegin(), lambda.rend()));
        if (n > 0) CHECK(lambda[0] <= sites - n);
        CHECK(config_from_partition(lambda, n, sites) == cfg);
      }
}

TEST_CASE("translation rejects bad input") {
  CHECK_THROWS_AS(partition_from_config({4, 2}, 2, 4), error);
  CHECK_THROWS_AS(partition_from_config({2, 2}, 2, 4), error);
  CHECK_THROWS_AS(partition_from_config({0, 2}, 2, 4), error);
  CHECK_THROWS_AS(partition_from_config({2, 5}, 2, 4), error);
  CHECK_THROWS_AS(config_from_partition({3, 1}, 2, 4), error);  // needs sites >= 5
  CHECK_THROWS_AS(config_from_partition({1, 2}, 2, 4), error);  // not a partition
}

TEST_CASE("mu translation uses one extra mark") {
  CHECK(mu_from_config({1, 6, 8}, 2, 10) == partition{5, 4, 0});
  CHECK(mu_from_config({1, 2}, 1, 4) == partition{0, 0});
  for (int sites = 1; sites <= 7; ++sites)
    for (int n = 0; n + 1 <= sites; ++n)
      for (const auto& cfg : all_configs(n + 1, sites)) {
        partition mu = mu_from_config(cfg, n, sites);
        CHECK(static_cast<int>(mu.size()) == n + 1);
        CHECK(std::is_sorted(mu.rbegin(), mu.rend()));
        CHECK(mu.back() >= 0);
      }
}

TEST_CASE("determinants match the Vandermonde product") {
  for (int n : {2, 3, 5, 6}) {
    poly_matrix m(n, std::vector<laurent_poly>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = lp(zvar(i + 1), j);
    laurent_poly expected(1);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) expected *= lp(zvar(j)) - lp(zvar(i));
    CHECK(det_poly(m) == expected);
  }
}

TEST_CASE("determinant of a singular matrix vanishes") {
  poly_matrix m(5, std::vector<laurent_poly>(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m[i][j] = lp(zvar(i == 4 ? 1 : i + 1), j);
  CHECK(det_poly(m) == laurent_poly(0));
}

TEST_CASE("determinant dimension cap") {
  poly_matrix m(7, std::vector<laurent_poly>(7, laurent_poly(1)));
  CHECK_THROWS_AS(det_poly(m), error);
  try {
    det_poly(m);
  } catch (const error& e) {
    CHECK(e.code() == errc::dimension_cap);
  }
  // Raising the cap admits the same matrix.
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m[i][j] = lp(zvar(i + 1), j);
  laurent_poly expected(1);
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) expected *= lp(zvar(j)) - lp(zvar(i));
  CHECK(det_poly(m, 7) == expected);
}

TEST_CASE("schur polynomials match the tableau sum") {
  std::vector<partition> shapes{{1}, {2}, {1, 1}, {2, 1}, {3, 1}, {2, 2}, {2, 1, 1}, {3, 2, 1}};
  for (int n : {2, 3})
    for (const auto& lambda : shapes) {
      if (static_cast<int>(lambda.size()) > n) continue;
      CHECK(schur(lambda, n, z_ids(n)) == schur_ssyt(lambda, n));
    }
}

TEST_CASE("schur specializations in three variables") {
  auto e1 = z1() + z2() + z3();
  auto e2 = z1() * z2() + z1() * z3() + z2() * z3();
  auto e3 = z1() * z2() * z3();
  auto h2 = z1() * z1() + z2() * z2() + z3() * z3() + e2;
  CHECK(schur({1}, 3, z_ids(3)) == e1);
  CHECK(schur({1, 1}, 3, z_ids(3)) == e2);
  CHECK(schur({1, 1, 1}, 3, z_ids(3)) == e3);
  CHECK(schur({2}, 3, z_ids(3)) == h2);
  CHECK(schur({}, 3, z_ids(3)) == laurent_poly(1));
}

TEST_CASE("schur polynomials are symmetric") {
  partition lambda{3, 1};
  laurent_poly direct = schur(lambda, 2, {zvar(1), zvar(2)});
  laurent_poly swapped = schur(lambda, 2, {zvar(2), zvar(1)});
  CHECK(direct == swapped);
  laurent_poly rotated = schur({2, 1, 1}, 3, {zvar(2), zvar(3), zvar(1)});
  CHECK(schur({2, 1, 1}, 3, z_ids(3)) == rotated);
}

TEST_CASE("factorial schur in two variables") {
  std::vector<laurent_poly> alphas{lp(avar(1)), lp(avar(2)), lp(avar(3)), lp(avar(4))};
  laurent_poly got = factorial_schur({1, 0}, 2, z_ids(2), alphas);
  CHECK(got == z1() + z2() + lp(avar(1)) + lp(avar(2)));
}

TEST_CASE("factorial schur with zero shifts reduces to schur") {
  std::vector<laurent_poly> zeros(8, laurent_poly(0));
  for (int n : {2, 3})
    for (partition lambda : std::vector<partition>{{1}, {2, 1}, {3, 1}, {2, 2, 1}}) {
      if (static_cast<int>(lambda.size()) > n) continue;
      CHECK(factorial_schur(lambda, n, z_ids(n), zeros) == schur(lambda, n, z_ids(n)));
    }
}

TEST_CASE("factorial schur needs enough shift parameters") {
  std::vector<laurent_poly> three{lp(avar(1)), lp(avar(2)), lp(avar(3))};
  CHECK_THROWS_AS(factorial_schur({3}, 2, z_ids(2), three), error);
  try {
    factorial_schur({3}, 2, z_ids(2), three);
  } catch (const error& e) {
    CHECK(e.code() == errc::insufficient_alphas);
  }
}

TEST_CASE("matrix helpers") {
  poly_matrix a{{z1(), laurent_poly(1)}, {laurent_poly(0), z2()}};
  poly_matrix id = identity_matrix(2);
  CHECK(matmul(a, id) == a);
  CHECK(matmul(id, a) == a);
  poly_matrix sq = matmul(a, a);
  CHECK(sq[0][0] == z1() * z1());
  CHECK(sq[0][1] == z1() + z2());
  CHECK(sq[1][1] == z2() * z2());
  CHECK(sq[1][0] == laurent_poly(0));
}
