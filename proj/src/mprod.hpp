#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "poly.hpp"
#include "schur.hpp"

namespace feld {

// Quotient of Laurent polynomials. Never reduced by a gcd; equality is
// checked by cross multiplication.
struct rational_fn {
  laurent_poly num;
  laurent_poly den = laurent_poly(1);

  rational_fn() = default;
  rational_fn(laurent_poly n);  // NOLINT(google-explicit-constructor)
  rational_fn(laurent_poly n, laurent_poly d);

  bool is_zero() const { return num.is_zero(); }

  rational_fn operator+(const rational_fn& o) const;
  rational_fn operator-() const;
  rational_fn operator*(const rational_fn& o) const;
  bool equals(const rational_fn& o) const;
};

using ratfn_matrix = std::vector<std::vector<rational_fn>>;

// The 2^n-dimensional row-to-row transfer operators, built by appending one
// auxiliary space at a time (the newest space is the least significant bit
// of the matrix index).
struct mp_operators {
  int n = 0;
  poly_matrix C, D;
};

mp_operators build_CD(int n, const std::vector<laurent_poly>& zs);

// Dual wavefunction through the transfer-operator trace: the <0...0| row
// vector pushed through D and C factors ordered by the hole positions.
laurent_poly mp_dual_wavefunction(const std::vector<int>& xbar, int sites,
                                  const std::vector<laurent_poly>& zs);

// Gauge data diagonalizing D: D_diag with monomial diagonal entries, the
// component decomposition of C in the gauge frame, and the unipotent G with
// its inverse.
struct gauge_objects {
  int n = 0;
  poly_matrix D_diag;
  std::vector<ratfn_matrix> C;  // components j = 1..n
  ratfn_matrix G, G_inv;
};

gauge_objects build_gauge(int n, const std::vector<laurent_poly>& zs, int cap = 4);

struct relation_report {
  std::string relation;
  int n = 0;
  int samples = 0;
  bool passed = true;
  std::string counterexample;  // JSON object text, empty when passed
};

std::string relation_report_to_json(const relation_report& r);

// Exchange, nilpotency and anticommutation of the component operators plus
// gauge consistency, each checked at `samples` rational points.
std::vector<relation_report> verify_algebra(int n, int samples, std::uint64_t seed);

// Trace formula for the configuration-independent prefactor against its
// closed product form, at `samples` rational points.
relation_report prefactor_K_report(int sites, int n, int samples, std::uint64_t seed);

// Deterministic distinct-odd-prime sample for the given variables; `index`
// selects the point within a run.
std::map<var_id, mpq_class> sample_point(std::uint64_t seed, int index,
                                         const std::vector<var_id>& vars);

inline constexpr std::uint64_t default_seed = 0xF31D;

}  // namespace feld
