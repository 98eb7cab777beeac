#include "verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

#include "bench.hpp"
#include "errors.hpp"
#include "gtpattern.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "mprod.hpp"
#include "poly.hpp"
#include "schur.hpp"

namespace feld {
namespace {

using json = nlohmann::ordered_json;

struct group_ctx {
  verify_group& g;
  std::uint64_t seed;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    ++g.cases;
    if (ok)
      ++g.passed;
    else
      g.failures.push_back({name, detail});
  }
  void note(const std::string& text) { g.notes.push_back(text); }
};

laurent_poly tp() { return lp(tvar()); }

std::vector<var_id> z_ids(int n) {
  std::vector<var_id> out;
  for (int j = 1; j <= n; ++j) out.push_back(zvar(j));
  return out;
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

std::string config_str(const std::vector<int>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << ")";
  return out.str();
}

laurent_poly pair_product(int n) {
  laurent_poly out(1);
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) out *= lp(zvar(j)) + tp() * lp(zvar(k));
  return out;
}

// z_k -> z_k / t for every k up to n.
laurent_poly scale_z_by_inverse_t(laurent_poly p, int n) {
  for (int k = 1; k <= n; ++k)
    p = substitute_scale(p, zvar(k), 1, monomial({{tvar(), -1}, {zvar(k), 1}}));
  return p;
}

long factorial(int n) {
  long out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

// ---- criterion groups ------------------------------------------------------

void run_c01(group_ctx& ctx) {
  laurent_poly t = tp(), one(1);
  laurent_poly z1 = lp(zvar(1)), z2 = lp(zvar(2));
  laurent_poly golden =
      t * t * z1 * z2.pow(3) + t * (t + one) * z1 * z1 * z2 * z2 + t * z1.pow(3) * z2;
  laurent_poly dual =
      dual_wavefunction({2, 4}, 4, z_symbols(2), l_variant::standard, make_params(4));
  ctx.check("three term golden value", dual == golden);
  laurent_poly product =
      lp(tvar(), 4) * (z1 + t * z2) * scale_z_by_inverse_t(schur({2, 1}, 2, z_ids(2)), 2);
  ctx.check("factorized form after substitution", dual == product);
}

void run_c02(group_ctx& ctx) {
  for (int sites = 1; sites <= 6; ++sites) {
    model_params params = make_params(sites);
    for (int n = 0; n <= std::min(3, sites); ++n) {
      auto zs = z_symbols(n);
      laurent_poly pair = pair_product(n);
      for (const auto& x : all_configs(n, sites)) {
        laurent_poly wf = wavefunction(x, sites, zs, l_variant::standard, params);
        partition lambda = partition_from_config(x, n, sites);
        ctx.check("M=" + std::to_string(sites) + " x=" + config_str(x),
                  wf == pair * schur(lambda, n, z_ids(n)));
      }
    }
  }
}

void run_c03(group_ctx& ctx) {
  for (int sites = 1; sites <= 6; ++sites) {
    model_params params = make_params(sites);
    for (int n = 0; n <= std::min(3, sites); ++n) {
      auto zs = z_symbols(n);
      laurent_poly pair = pair_product(n);
      for (const auto& xbar : all_configs(n, sites)) {
        laurent_poly dual = dual_wavefunction(xbar, sites, zs, l_variant::standard, params);
        partition lb = partition_from_config(xbar, n, sites);
        laurent_poly rhs = lp(tvar(), static_cast<long>(n) * (sites - n)) * pair *
                           scale_z_by_inverse_t(schur(lb, n, z_ids(n)), n);
        ctx.check("M=" + std::to_string(sites) + " xbar=" + config_str(xbar), dual == rhs);
      }
    }
  }
}

void run_c04(group_ctx& ctx) {
  laurent_poly z = lp(zvar(1));
  for (int sites = 1; sites <= 8; ++sites) {
    model_params params = make_params(sites);
    for (int n = 0; n + 1 <= std::min(4, sites); ++n) {
      if (n > 3) continue;
      for (const auto& ybar : all_configs(n + 1, sites))
        for (const auto& xbar : all_configs(n, sites)) {
          laurent_poly swept =
              b_matrix_element(xbar, ybar, sites, z, l_variant::standard, params);
          laurent_poly closed = b_matrix_element_closed_form(xbar, ybar, sites, z);
          ctx.check("M=" + std::to_string(sites) + " xbar=" + config_str(xbar) +
                        " ybar=" + config_str(ybar),
                    swept == closed);
        }
    }
  }
  laurent_poly expected = (tp() + laurent_poly(1)) * lp(tvar(), 3) * lp(zvar(1), 5);
  ctx.check("ten site worked instance, closed form",
            b_matrix_element_closed_form({3, 6}, {1, 6, 8}, 10, z) == expected);
  ctx.check("ten site worked instance, sweep",
            b_matrix_element({3, 6}, {1, 6, 8}, 10, z, l_variant::standard,
                             make_params(10)) == expected);
}

void run_c05(group_ctx& ctx) {
  for (int sites = 1; sites <= 6; ++sites) {
    model_params params = make_params(sites);
    for (int n = 0; n <= std::min(3, sites); ++n) {
      auto zs = z_symbols(n);
      laurent_poly pair = pair_product(n);
      for (const auto& xbar : all_configs(n, sites)) {
        partition lb = partition_from_config(xbar, n, sites);
        laurent_poly sum = dual_tokuyama_sum(lb, n, sites, zs);
        laurent_poly dual = dual_wavefunction(xbar, sites, zs, l_variant::standard, params);
        std::string tag = "M=" + std::to_string(sites) + " xbar=" + config_str(xbar);
        ctx.check(tag + " pattern sum", sum == dual);
        long weight = 0;
        for (int part : lb) weight += part;
        laurent_poly rescaled = lp(tvar(), weight - static_cast<long>(n) * (sites - n)) * sum;
        ctx.check(tag + " factorized", rescaled == pair * schur(lb, n, z_ids(n)));
      }
    }
  }
  // Three pattern example on four sites.
  auto patterns = enumerate_bottom_fixed({2, 1}, 2, 4);
  auto zs = z_symbols(2);
  laurent_poly t = tp(), one(1);
  laurent_poly z1 = lp(zvar(1)), z2 = lp(zvar(2));
  bool three = patterns.size() == 3 &&
               weight_G_dual(patterns[0], zs) == t * t * z2.pow(3) * z1 &&
               weight_G_dual(patterns[1], zs) == t * (t + one) * z2 * z2 * z1 * z1 &&
               weight_G_dual(patterns[2], zs) == t * z2 * z1.pow(3);
  ctx.check("three pattern weights", three);
}

void run_c06(group_ctx& ctx) {
  for (int sites = 1; sites <= 6; ++sites) {
    model_params params = make_params(sites);
    for (int n = 0; n <= std::min(3, sites); ++n) {
      auto zs = z_symbols(n);
      for (const auto& x : all_configs(n, sites)) {
        partition lambda = partition_from_config(x, n, sites);
        laurent_poly sum = tokuyama_sum(lambda, n, zs);
        laurent_poly wf = wavefunction(x, sites, zs, l_variant::standard, params);
        ctx.check("M=" + std::to_string(sites) + " x=" + config_str(x), sum == wf);
      }
    }
  }
}

void run_c07(group_ctx& ctx) {
  for (int sites = 1; sites <= 5; ++sites) {
    laurent_poly z_m = dwbp(sites, z_symbols(sites), make_params(sites));
    ctx.check("homogeneous M=" + std::to_string(sites), z_m == pair_product(sites));
  }
  for (int sites = 1; sites <= 4; ++sites) {
    laurent_poly z_m = dwbp(sites, z_symbols(sites), make_inhomogeneous_dwbp_params(sites));
    bool shaped = false;
    std::string recorded;
    try {
      laurent_poly quotient = exact_div(z_m, pair_product(sites));
      if (quotient.is_single_term()) {
        const auto& [mono, coeff] = *quotient.terms().begin();
        bool only_vs = true;
        for (const auto& [var, exp] : mono.entries())
          if (var.kind != var_kind::v) only_vs = false;
        shaped = coeff == 1 && only_vs;
        recorded = to_pretty(quotient);
      }
    } catch (const error&) {
      shaped = false;
    }
    ctx.check("inhomogeneous shape M=" + std::to_string(sites), shaped);
    if (shaped)
      ctx.note(R"({"inhomogeneous_monomial":{"M":)" + std::to_string(sites) + R"(,"value":")" +
               recorded + R"("}})");
  }
}

void run_c08(group_ctx& ctx) {
  for (int sites = 1; sites <= 6; ++sites) {
    model_params params = make_params(sites);
    for (int n = 1; n <= std::min(3, sites); ++n) {
      std::vector<int> xbar;
      for (int j = 1; j <= n; ++j) xbar.push_back(j);
      laurent_poly dual = dual_wavefunction(xbar, sites, z_symbols(n), l_variant::standard, params);
      laurent_poly rhs = lp(tvar(), static_cast<long>(n) * (sites - n)) *
                         dwbp(n, z_symbols(n), make_params(n));
      ctx.check("M=" + std::to_string(sites) + " N=" + std::to_string(n), dual == rhs);
    }
  }
}

void run_c09(group_ctx& ctx) {
  for (int sites = 1; sites <= 6; ++sites) {
    model_params params = make_params(sites);
    for (int n = 0; n <= std::min(3, sites); ++n) {
      auto zs = z_symbols(n);
      for (const auto& xbar : all_configs(n, sites)) {
        laurent_poly trace = mp_dual_wavefunction(xbar, sites, zs);
        laurent_poly sweep = dual_wavefunction(xbar, sites, zs, l_variant::standard, params);
        ctx.check("M=" + std::to_string(sites) + " xbar=" + config_str(xbar), trace == sweep);
      }
    }
  }
}

void run_c10(group_ctx& ctx) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& report : verify_algebra(n, 20, ctx.seed)) {
      ctx.check(report.relation + " n=" + std::to_string(n), report.passed,
                report.counterexample);
      ctx.note(relation_report_to_json(report));
    }
  for (int sites = 1; sites <= 5; ++sites)
    for (int n = 0; n <= std::min(3, sites); ++n) {
      relation_report report = prefactor_K_report(sites, n, 20, ctx.seed);
      ctx.check(report.relation + " N=" + std::to_string(n), report.passed,
                report.counterexample);
      ctx.note(relation_report_to_json(report));
    }
}

void run_c11(group_ctx& ctx) {
  // Exchange relation on two auxiliary lines, 8x8 symbolic.
  laurent_poly zr = lp(zvar(1)) * lp(zvar(2), -1);
  model_params single = make_params(1);
  auto embed_l = [&](l_variant variant, const laurent_poly& z, bool on_a) {
    poly_matrix m(8, std::vector<laurent_poly>(8));
    for (int in_line = 0; in_line < 2; ++in_line)
      for (int iq = 0; iq < 2; ++iq)
        for (int out_line = 0; out_line < 2; ++out_line)
          for (int oq = 0; oq < 2; ++oq) {
            laurent_poly w = l_weight(variant, single, 1, in_line, iq, out_line, oq, z);
            if (w.is_zero()) continue;
            for (int other = 0; other < 2; ++other) {
              int row = on_a ? out_line * 4 + other * 2 + oq : other * 4 + out_line * 2 + oq;
              int col = on_a ? in_line * 4 + other * 2 + iq : other * 4 + in_line * 2 + iq;
              m[row][col] += w;
            }
          }
    return m;
  };
  auto embed_r = [&](const laurent_poly& t) {
    poly_matrix m(8, std::vector<laurent_poly>(8));
    for (int ia = 0; ia < 2; ++ia)
      for (int ib = 0; ib < 2; ++ib)
        for (int oa = 0; oa < 2; ++oa)
          for (int ob = 0; ob < 2; ++ob) {
            laurent_poly w = r_weight(oa, ob, ia, ib, zr, t);
            if (w.is_zero()) continue;
            for (int q = 0; q < 2; ++q) m[oa * 4 + ob * 2 + q][ia * 4 + ib * 2 + q] += w;
          }
    return m;
  };
  struct table {
    const char* name;
    l_variant variant;
    laurent_poly t;
  };
  std::vector<table> tables{{"standard", l_variant::standard, tp()},
                            {"rescaled", l_variant::rescaled, tp()},
                            {"five vertex", l_variant::five_vertex, laurent_poly(-1)}};
  for (const auto& tab : tables) {
    poly_matrix la = embed_l(tab.variant, lp(zvar(1)), true);
    poly_matrix lb = embed_l(tab.variant, lp(zvar(2)), false);
    poly_matrix r = embed_r(tab.t);
    ctx.check(std::string("two line exchange, ") + tab.name,
              matmul(r, matmul(la, lb)) == matmul(lb, matmul(la, r)));
  }
  // Row operator exchange on the full chain.
  laurent_poly u = lp(zvar(1)) * lp(zvar(2), -1);
  laurent_poly lhs_scale = laurent_poly(1) + tp() * u;
  laurent_poly rhs_scale = u + tp();
  for (l_variant variant : {l_variant::standard, l_variant::rescaled})
    for (int sites = 1; sites <= 4; ++sites) {
      model_params params = make_params(sites);
      bool ok = true;
      for (unsigned mask = 0; mask < (1u << sites) && ok; ++mask) {
        quantum_state start = quantum_state::basis(sites, mask);
        quantum_state ab =
            apply_B(apply_B(start, variant, params, lp(zvar(2))), variant, params, lp(zvar(1)));
        quantum_state ba =
            apply_B(apply_B(start, variant, params, lp(zvar(1))), variant, params, lp(zvar(2)));
        for (std::size_t i = 0; i < ab.amps.size(); ++i)
          if (lhs_scale * ab.amps[i] != rhs_scale * ba.amps[i]) ok = false;
      }
      ctx.check(std::string("row exchange, ") +
                    (variant == l_variant::standard ? "standard" : "rescaled") +
                    " M=" + std::to_string(sites),
                ok);
    }
}

void run_c12(group_ctx& ctx) {
  for (int sites = 1; sites <= 5; ++sites) {
    model_params params = make_params(sites);
    for (int n = 0; n <= std::min(3, sites); ++n) {
      auto zs = z_symbols(n);
      laurent_poly divisor(1);
      for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          divisor *= lp(tpvar()) * lp(zvar(j)) + lp(zvar(k));
      for (const auto& xbar : all_configs(n, sites)) {
        laurent_poly p =
            lp(tvar(), n) * dual_wavefunction(xbar, sites, zs, l_variant::rescaled, params);
        laurent_poly q = substitute_scale(p, tvar(), 1, monomial::unit(tpvar(), -1));
        auto [lo, hi] = degree_range(q, tpvar());
        std::string tag = "M=" + std::to_string(sites) + " xbar=" + config_str(xbar);
        bool divides = true;
        try {
          exact_div(q, divisor);
        } catch (const error&) {
          divides = false;
        }
        bool ok = lo >= 0 && hi == static_cast<long>(n) * (n - 1) / 2 && divides;
        ctx.check(tag, ok,
                  ok ? "" : "degrees [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
      }
    }
  }
}

void run_c13(group_ctx& ctx) {
  for (int sites = 1; sites <= 4; ++sites) {
    model_params ap = make_symbolic_alpha_params(sites);
    std::vector<laurent_poly> neg_alphas, zero_alphas;
    for (int j = 1; j <= sites; ++j) {
      neg_alphas.push_back(-lp(avar(j)));
      zero_alphas.push_back(laurent_poly(0));
    }
    for (int n = 0; n <= std::min(2, sites); ++n) {
      auto zs = z_symbols(n);
      laurent_poly pair = pair_product(n);
      for (const auto& x : all_configs(n, sites)) {
        partition lambda = partition_from_config(x, n, sites);
        std::string tag = "M=" + std::to_string(sites) + " config=" + config_str(x);
        laurent_poly wf = wavefunction(x, sites, zs, l_variant::inhomogeneous, ap);
        ctx.check(tag + " shifted wavefunction",
                  wf == pair * factorial_schur(lambda, n, z_ids(n), ap.alphas));
        laurent_poly dual = dual_wavefunction(x, sites, zs, l_variant::inhomogeneous, ap);
        laurent_poly rhs = lp(tvar(), static_cast<long>(n) * (sites - n)) * pair *
                           scale_z_by_inverse_t(
                               factorial_schur(lambda, n, z_ids(n), neg_alphas), n);
        ctx.check(tag + " shifted dual", dual == rhs);
        ctx.check(tag + " zero shift reduction",
                  factorial_schur(lambda, n, z_ids(n), zero_alphas) ==
                      schur(lambda, n, z_ids(n)));
      }
    }
  }
}

void run_c14(group_ctx& ctx) {
  laurent_poly z = lp(zvar(1));
  for (int sites = 1; sites <= 6; ++sites) {
    model_params params = make_params(sites);
    for (int n = 0; n + 1 <= sites; ++n)
      for (const auto& ybar : all_configs(n + 1, sites))
        for (const auto& xbar : all_configs(n, sites)) {
          laurent_poly swept =
              b_matrix_element(xbar, ybar, sites, z, l_variant::five_vertex, params);
          laurent_poly closed = five_vertex_b_element(xbar, ybar, sites, z);
          ctx.check("element M=" + std::to_string(sites) + " xbar=" + config_str(xbar) +
                        " ybar=" + config_str(ybar),
                    swept == closed);
        }
    for (int n = 1; n <= std::min(3, sites); ++n)
      for (const auto& xbar : all_configs(n, sites)) {
        auto chains = dual_inner_states(xbar, sites, z_symbols(n), l_variant::five_vertex, params);
        ctx.check("chain count M=" + std::to_string(sites) + " xbar=" + config_str(xbar),
                  static_cast<long>(chains.size()) == factorial(n));
      }
  }
}

void run_c15(group_ctx& ctx) {
  std::vector<bench_row> rows = run_bench(8, 3);
  std::vector<std::string> expected{"sweep", "mp-trace", "gt-sum"};
  bool names_ok = rows.size() == expected.size();
  for (std::size_t i = 0; names_ok && i < rows.size(); ++i)
    names_ok = rows[i].strategy == expected[i];
  ctx.check("enabled strategies", names_ok);
  for (const auto& row : rows) {
    ctx.check("agreement " + row.strategy, row.agree);
    ctx.note(R"({"strategy":")" + row.strategy + R"(","terms":)" + std::to_string(row.terms) +
             "}");
  }
}

struct group_def {
  const char* id;
  const char* title;
  double budget;
  void (*fn)(group_ctx&);
};

const std::vector<group_def>& registry() {
  static const std::vector<group_def> defs{
      {"c01", "worked example on four sites", 1, run_c01},
      {"c02", "wavefunction factors through Schur polynomials", 30, run_c02},
      {"c03", "dual wavefunction factors through Schur polynomials", 30, run_c03},
      {"c04", "row matrix element closed form", 60, run_c04},
      {"c05", "dual pattern sum and its factorized form", 30, run_c05},
      {"c06", "pattern sum equals the wavefunction", 30, run_c06},
      {"c07", "domain wall partition functions", 10, run_c07},
      {"c08", "consecutive holes reduce to a domain wall", 10, run_c08},
      {"c09", "transfer trace route", 60, run_c09},
      {"c10", "operator algebra and prefactor at sample points", 60, run_c10},
      {"c11", "exchange relations", 10, run_c11},
      {"c12", "inverse parameter polynomial structure", 30, run_c12},
      {"c13", "factorial correspondence with site shifts", 60, run_c13},
      {"c14", "five vertex degeneration", 10, run_c14},
      {"c15", "strategy benchmark agreement", 300, run_c15},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& verify_group_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& def : registry()) out.push_back(def.id);
    return out;
  }();
  return ids;
}

double verify_group_budget(const std::string& id) {
  for (const auto& def : registry())
    if (id == def.id) return def.budget;
  fail(errc::invalid_config, "unknown verification group " + id);
}

verify_report run_verify(const std::string& suite, std::uint64_t seed) {
  verify_report report;
  report.suite = suite;
  report.seed = seed;
  bool matched = false;
  for (const auto& def : registry()) {
    if (suite != "all" && suite != def.id) continue;
    matched = true;
    verify_group group;
    group.id = def.id;
    group.title = def.title;
    group.budget_seconds = def.budget;
    group_ctx ctx{group, seed};
    def.fn(ctx);
    report.cases += group.cases;
    report.passed += group.passed;
    report.results.push_back(std::move(group));
  }
  if (!matched) fail(errc::invalid_config, "unknown verification suite " + suite);
  report.groups = static_cast<int>(report.results.size());
  report.all_passed = report.cases == report.passed;
  return report;
}

std::string verify_report_to_json(const verify_report& report) {
  json out;
  out["suite"] = report.suite;
  out["seed"] = report.seed;
  out["groups"] = report.groups;
  out["cases"] = report.cases;
  out["passed"] = report.passed;
  out["all_passed"] = report.all_passed;
  json results = json::array();
  for (const auto& g : report.results) {
    json jg;
    jg["id"] = g.id;
    jg["title"] = g.title;
    jg["cases"] = g.cases;
    jg["passed"] = g.passed;
    jg["ok"] = g.ok();
    json failures = json::array();
    for (const auto& f : g.failures) {
      json jf;
      jf["name"] = f.name;
      jf["detail"] = f.detail;
      failures.push_back(jf);
    }
    jg["failures"] = failures;
    json notes = json::array();
    for (const auto& n : g.notes) notes.push_back(json::parse(n));
    jg["notes"] = notes;
    results.push_back(jg);
  }
  out["results"] = results;
  return out.dump(2);
}

}  // namespace feld
