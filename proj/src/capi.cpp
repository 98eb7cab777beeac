#include "felderhof/felderhof.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "bench.hpp"
#include "errors.hpp"
#include "gtpattern.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "mprod.hpp"
#include "poly.hpp"
#include "schur.hpp"
#include "verify.hpp"

struct feld_poly {
  feld::laurent_poly value;
};

namespace {

thread_local std::string g_last_error;

feld_status map_code(feld::errc code) {
  switch (code) {
    case feld::errc::cap_exceeded:
    case feld::errc::too_large:
    case feld::errc::dimension_cap:
      return FELD_ERR_CAP;
    case feld::errc::verification_failure:
      return FELD_ERR_VERIFY;
    default:
      return FELD_ERR_INVALID;
  }
}

template <typename Fn>
feld_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return FELD_OK;
  } catch (const feld::error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FELD_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown failure";
    return FELD_ERR_UNKNOWN;
  }
}

char* dup_string(const std::string& s) {
  char* block = static_cast<char*>(std::malloc(s.size() + 1));
  if (block != nullptr) std::memcpy(block, s.c_str(), s.size() + 1);
  return block;
}

void require(bool ok, const char* what) {
  if (!ok) feld::fail(feld::errc::invalid_config, what);
}

std::vector<int> int_list(const int* data, int count, const char* what) {
  require(count >= 0, what);
  require(count == 0 || data != nullptr, what);
  return {data, data + count};
}

feld::l_variant parse_variant(const char* text) {
  std::string name = text == nullptr ? "standard" : text;
  if (name.empty() || name == "standard") return feld::l_variant::standard;
  if (name == "rescaled") return feld::l_variant::rescaled;
  if (name == "five-vertex" || name == "five_vertex") return feld::l_variant::five_vertex;
  if (name == "inhomogeneous") return feld::l_variant::inhomogeneous;
  feld::fail(feld::errc::invalid_config, "unknown variant: " + name);
}

feld::model_params params_for(feld::l_variant variant, int sites) {
  if (variant == feld::l_variant::inhomogeneous) return feld::make_symbolic_alpha_params(sites);
  return feld::make_params(sites);
}

feld_poly* wrap(feld::laurent_poly p) { return new feld_poly{std::move(p)}; }

std::vector<feld::laurent_poly> parse_integer_alphas(const std::string& text) {
  std::vector<feld::laurent_poly> alphas;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) feld::fail(feld::errc::parse_error, "empty entry in alpha list");
    std::size_t pos = 0;
    long value = 0;
    try {
      value = std::stol(cur, &pos);
    } catch (const std::exception&) {
      feld::fail(feld::errc::parse_error, "bad integer in alpha list: " + cur);
    }
    if (pos != cur.size())
      feld::fail(feld::errc::parse_error, "bad integer in alpha list: " + cur);
    alphas.emplace_back(value);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty() || !alphas.empty()) flush();
  return alphas;
}

}  // namespace

extern "C" {

const char* feld_version(void) { return "1.0.0"; }

const char* feld_last_error(void) { return g_last_error.c_str(); }

void feld_poly_free(feld_poly* p) { delete p; }

void feld_string_free(char* s) { std::free(s); }

feld_status feld_poly_render(const feld_poly* p, const char* format, char** out) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null argument");
    std::string name = format == nullptr ? "json" : format;
    std::string text;
    if (name == "json") {
      text = feld::poly_to_json_string(p->value);
    } else if (name == "csv") {
      text = feld::poly_to_csv(p->value);
    } else if (name == "pretty") {
      text = feld::to_pretty(p->value);
    } else {
      feld::fail(feld::errc::invalid_config, "unknown format: " + name);
    }
    *out = dup_string(text);
  });
}

feld_status feld_poly_eval(const feld_poly* p, const char* assignments, char** out) {
  return guarded([&] {
    require(p != nullptr && assignments != nullptr && out != nullptr, "null argument");
    auto point = feld::parse_assignment(assignments);
    mpq_class value = feld::eval_rational(p->value, point);
    *out = dup_string(feld::rational_to_string(value));
  });
}

feld_status feld_poly_equal(const feld_poly* a, const feld_poly* b, int* out_equal) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out_equal != nullptr, "null argument");
    *out_equal = a->value == b->value ? 1 : 0;
  });
}

feld_status feld_poly_term_count(const feld_poly* p, long* out_count) {
  return guarded([&] {
    require(p != nullptr && out_count != nullptr, "null argument");
    *out_count = static_cast<long>(p->value.term_count());
  });
}

feld_status feld_partition_from_config(int sites, int n, const int* positions,
                                       int* out_partition) {
  return guarded([&] {
    require(out_partition != nullptr, "null argument");
    auto lambda = feld::partition_from_config(int_list(positions, n, "bad positions"), n, sites);
    std::copy(lambda.begin(), lambda.end(), out_partition);
  });
}

feld_status feld_config_from_partition(int sites, int n, int parts, const int* partition,
                                       int* out_positions) {
  return guarded([&] {
    require(out_positions != nullptr, "null argument");
    auto pos =
        feld::config_from_partition(int_list(partition, parts, "bad partition"), n, sites);
    std::copy(pos.begin(), pos.end(), out_positions);
  });
}

feld_status feld_wavefunction(int sites, int n, const int* particles, const char* variant,
                              feld_poly** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    auto kind = parse_variant(variant);
    auto params = params_for(kind, sites);
    auto x = int_list(particles, n, "bad particle positions");
    *out = wrap(feld::wavefunction(x, sites, feld::z_symbols(n), kind, params));
  });
}

feld_status feld_dual_wavefunction(int sites, int n, const int* holes, const char* variant,
                                   feld_poly** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    auto kind = parse_variant(variant);
    auto params = params_for(kind, sites);
    auto xbar = int_list(holes, n, "bad hole positions");
    *out = wrap(feld::dual_wavefunction(xbar, sites, feld::z_symbols(n), kind, params));
  });
}

feld_status feld_mp_dual_wavefunction(int sites, int n, const int* holes, feld_poly** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    auto xbar = int_list(holes, n, "bad hole positions");
    *out = wrap(feld::mp_dual_wavefunction(xbar, sites, feld::z_symbols(n)));
  });
}

feld_status feld_schur(int n, int parts, const int* partition, feld_poly** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    auto lambda = int_list(partition, parts, "bad partition");
    std::vector<feld::var_id> zs;
    for (int k = 1; k <= n; ++k) zs.push_back(feld::zvar(k));
    *out = wrap(feld::schur(lambda, n, zs));
  });
}

feld_status feld_factorial_schur(int n, int parts, const int* partition, const char* alphas,
                                 feld_poly** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    auto lambda = int_list(partition, parts, "bad partition");
    std::vector<feld::var_id> zs;
    for (int k = 1; k <= n; ++k) zs.push_back(feld::zvar(k));
    std::vector<feld::laurent_poly> shifts;
    std::string text = alphas == nullptr ? "" : alphas;
    if (text.empty()) {
      int needed = n - 1;
      if (!lambda.empty()) needed += lambda.front();
      for (int j = 1; j <= needed; ++j) shifts.emplace_back(feld::avar(j));
    } else {
      shifts = parse_integer_alphas(text);
    }
    *out = wrap(feld::factorial_schur(lambda, n, zs, shifts));
  });
}

feld_status feld_gt_sum(int n, int parts, const int* partition, feld_poly** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    auto lambda = int_list(partition, parts, "bad partition");
    *out = wrap(feld::tokuyama_sum(lambda, n, feld::z_symbols(n)));
  });
}

feld_status feld_dual_gt_sum(int sites, int n, const int* holes, feld_poly** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    auto xbar = int_list(holes, n, "bad hole positions");
    auto lambda_bar = feld::partition_from_config(xbar, n, sites);
    *out = wrap(feld::dual_tokuyama_sum(lambda_bar, n, sites, feld::z_symbols(n)));
  });
}

feld_status feld_dwbp(int sites, const char* variant, feld_poly** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    std::string name = variant == nullptr ? "standard" : variant;
    feld::model_params params;
    if (name.empty() || name == "standard" || name == "homogeneous") {
      params = feld::make_params(sites);
    } else if (name == "inhomogeneous") {
      params = feld::make_inhomogeneous_dwbp_params(sites);
    } else {
      feld::fail(feld::errc::invalid_config, "unknown variant: " + name);
    }
    *out = wrap(feld::dwbp(sites, feld::z_symbols(sites), params));
  });
}

feld_status feld_b_element(int sites, int nx, const int* xbar, int ny, const int* ybar,
                           const char* variant, feld_poly** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    auto kind = parse_variant(variant);
    auto params = params_for(kind, sites);
    auto x = int_list(xbar, nx, "bad xbar positions");
    auto y = int_list(ybar, ny, "bad ybar positions");
    *out = wrap(
        feld::b_matrix_element(x, y, sites, feld::laurent_poly(feld::zvar(1)), kind, params));
  });
}

feld_status feld_verify(const char* suite, uint64_t seed, char** report_json, int* all_passed) {
  feld::verify_report report;
  feld_status status = guarded([&] {
    require(suite != nullptr, "null suite");
    report = feld::run_verify(suite, seed);
  });
  if (status != FELD_OK) return status;
  if (report_json != nullptr) *report_json = dup_string(feld::verify_report_to_json(report));
  if (all_passed != nullptr) *all_passed = report.all_passed ? 1 : 0;
  if (!report.all_passed) {
    g_last_error = "verification failures present";
    return FELD_ERR_VERIFY;
  }
  return FELD_OK;
}

feld_status feld_bench(int sites, int n, const char* format, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    std::string name = format == nullptr ? "csv" : format;
    auto rows = feld::run_bench(sites, n);
    if (name.empty() || name == "csv") {
      *out = dup_string(feld::bench_rows_to_csv(rows));
    } else if (name == "json") {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& row : rows) {
        arr.push_back({{"strategy", row.strategy},
                       {"M", row.sites},
                       {"N", row.holes},
                       {"micros", row.micros},
                       {"terms", row.terms},
                       {"agree", row.agree}});
      }
      *out = dup_string(arr.dump(2));
    } else {
      feld::fail(feld::errc::invalid_config, "unknown format: " + name);
    }
  });
}

}  // extern "C"
