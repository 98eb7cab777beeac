#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <felderhof/felderhof.h>

#include <string>

namespace {

struct poly_guard {
  feld_poly* p = nullptr;
  ~poly_guard() { feld_poly_free(p); }
};

struct string_guard {
  char* s = nullptr;
  ~string_guard() { feld_string_free(s); }
  std::string str() const { return s == nullptr ? std::string() : std::string(s); }
};

std::string eval(const feld_poly* p, const char* point) {
  string_guard out;
  REQUIRE(feld_poly_eval(p, point, &out.s) == FELD_OK);
  return out.str();
}

}  // namespace

TEST_CASE("version and error buffer") {
  CHECK(std::string(feld_version()) == "1.0.0");

  poly_guard p;
  CHECK(feld_wavefunction(4, 1, nullptr, "standard", &p.p) == FELD_ERR_INVALID);
  CHECK(std::string(feld_last_error()) != "");

  int x[] = {1};
  REQUIRE(feld_wavefunction(4, 1, x, "standard", &p.p) == FELD_OK);
  CHECK(std::string(feld_last_error()) == "");
}

TEST_CASE("dual wavefunction golden value through evaluation") {
  int xbar[] = {2, 4};
  poly_guard p;
  REQUIRE(feld_dual_wavefunction(4, 2, xbar, "standard", &p.p) == FELD_OK);

  // t^2 z1 z2^3 + t(t+1) z1^2 z2^2 + t z1^3 z2 at t=5, z1=2, z2=3
  CHECK(eval(p.p, "t=5,z1=2,z2=3") == "2550");

  long terms = 0;
  REQUIRE(feld_poly_term_count(p.p, &terms) == FELD_OK);
  CHECK(terms == 4);
}

TEST_CASE("trace route agrees with the sweep") {
  int xbar[] = {2, 5};
  poly_guard sweep, trace;
  REQUIRE(feld_dual_wavefunction(5, 2, xbar, "standard", &sweep.p) == FELD_OK);
  REQUIRE(feld_mp_dual_wavefunction(5, 2, xbar, &trace.p) == FELD_OK);

  int equal = 0;
  REQUIRE(feld_poly_equal(sweep.p, trace.p, &equal) == FELD_OK);
  CHECK(equal == 1);
}

TEST_CASE("render formats") {
  int x[] = {1, 2};
  poly_guard p;
  REQUIRE(feld_wavefunction(2, 2, x, "standard", &p.p) == FELD_OK);

  string_guard pretty, csv, json, bad;
  REQUIRE(feld_poly_render(p.p, "pretty", &pretty.s) == FELD_OK);
  CHECK(pretty.str() == "t*z2 + z1");
  REQUIRE(feld_poly_render(p.p, "csv", &csv.s) == FELD_OK);
  CHECK(csv.str() == "coeff,monomial\n1,t*z2\n1,z1\n");
  REQUIRE(feld_poly_render(p.p, "json", &json.s) == FELD_OK);
  CHECK(json.str().find("\"coeff\"") != std::string::npos);
  CHECK(feld_poly_render(p.p, "yaml", &bad.s) == FELD_ERR_INVALID);
}

TEST_CASE("configuration translations round trip") {
  int holes[] = {2, 4};
  int lambda[2] = {-1, -1};
  REQUIRE(feld_partition_from_config(4, 2, holes, lambda) == FELD_OK);
  CHECK(lambda[0] == 2);
  CHECK(lambda[1] == 1);

  int back[2] = {0, 0};
  REQUIRE(feld_config_from_partition(4, 2, 2, lambda, back) == FELD_OK);
  CHECK(back[0] == 2);
  CHECK(back[1] == 4);
}

TEST_CASE("schur and pattern sums") {
  int lambda[] = {2, 1};
  poly_guard s;
  REQUIRE(feld_schur(2, 2, lambda, &s.p) == FELD_OK);
  CHECK(eval(s.p, "z1=2,z2=3") == "30");

  poly_guard g;
  REQUIRE(feld_gt_sum(2, 2, lambda, &g.p) == FELD_OK);
  // (z1 + t z2) s_(2,1) at t=1, z1=2, z2=3
  CHECK(eval(g.p, "t=1,z1=2,z2=3") == "150");

  int holes[] = {2, 4};
  poly_guard dual_sum, dual;
  REQUIRE(feld_dual_gt_sum(4, 2, holes, &dual_sum.p) == FELD_OK);
  REQUIRE(feld_dual_wavefunction(4, 2, holes, "standard", &dual.p) == FELD_OK);
  int equal = 0;
  REQUIRE(feld_poly_equal(dual_sum.p, dual.p, &equal) == FELD_OK);
  CHECK(equal == 1);
}

TEST_CASE("factorial schur with integer and symbolic shifts") {
  int lambda[] = {1};
  poly_guard numeric, symbolic;
  REQUIRE(feld_factorial_schur(2, 1, lambda, "1,2", &numeric.p) == FELD_OK);
  CHECK(eval(numeric.p, "z1=2,z2=3") == "8");
  REQUIRE(feld_factorial_schur(2, 1, lambda, nullptr, &symbolic.p) == FELD_OK);
  CHECK(eval(symbolic.p, "z1=2,z2=3,a1=1,a2=2") == "8");

  poly_guard bad;
  CHECK(feld_factorial_schur(2, 1, lambda, "1,x", &bad.p) == FELD_ERR_INVALID);
}

TEST_CASE("domain wall boundaries") {
  poly_guard z2;
  REQUIRE(feld_dwbp(2, "standard", &z2.p) == FELD_OK);
  CHECK(eval(z2.p, "t=5,z1=2,z2=3") == "17");

  poly_guard inhom;
  REQUIRE(feld_dwbp(2, "inhomogeneous", &inhom.p) == FELD_OK);
  // v1^-1 (z1 + t z2) at t=5, z1=2, z2=3, v1=7, v2=11
  CHECK(eval(inhom.p, "t=5,z1=2,z2=3,v1=7,v2=11") == "17/7");

  poly_guard bad;
  CHECK(feld_dwbp(2, "diagonal", &bad.p) == FELD_ERR_INVALID);
}

TEST_CASE("row element instance") {
  int xbar[] = {3, 6};
  int ybar[] = {1, 6, 8};
  poly_guard p;
  REQUIRE(feld_b_element(10, 2, xbar, 3, ybar, "standard", &p.p) == FELD_OK);
  // (t+1) t^3 z^5 at t=2, z1=3
  CHECK(eval(p.p, "t=2,z1=3") == "5832");
}

TEST_CASE("verify suite over the boundary") {
  string_guard report;
  int all_passed = 0;
  REQUIRE(feld_verify("c01", 62237, &report.s, &all_passed) == FELD_OK);
  CHECK(all_passed == 1);
  CHECK(report.str().find("\"all_passed\": true") != std::string::npos);

  string_guard again;
  REQUIRE(feld_verify("c01", 62237, &again.s, nullptr) == FELD_OK);
  CHECK(report.str() == again.str());

  CHECK(feld_verify("c99", 62237, nullptr, nullptr) == FELD_ERR_INVALID);
}

TEST_CASE("bench rows and caps") {
  string_guard csv;
  REQUIRE(feld_bench(4, 2, "csv", &csv.s) == FELD_OK);
  CHECK(csv.str().rfind("strategy,M,N,micros,terms,agree\n", 0) == 0);
  CHECK(csv.str().find("sweep,4,2,") != std::string::npos);
  CHECK(csv.str().find(",true") != std::string::npos);

  string_guard json;
  REQUIRE(feld_bench(4, 2, "json", &json.s) == FELD_OK);
  CHECK(json.str().find("\"strategy\": \"sweep\"") != std::string::npos);

  string_guard over;
  CHECK(feld_bench(13, 2, "csv", &over.s) == FELD_ERR_CAP);
}
