#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace feld {

// Variables of the coefficient ring, in their fixed global order:
// t < t' < z1 < z2 < ... < a1 < a2 < ... < v1 < v2 < ...
enum class var_kind : std::uint8_t { t = 0, tp = 1, z = 2, alpha = 3, v = 4 };

struct var_id {
  var_kind kind{var_kind::t};
  int index{0};  // 1-based for z/alpha/v, always 0 for t and t'

  friend auto operator<=>(const var_id&, const var_id&) = default;
};

inline var_id tvar() { return {var_kind::t, 0}; }
inline var_id tpvar() { return {var_kind::tp, 0}; }
inline var_id zvar(int j) { return {var_kind::z, j}; }
inline var_id avar(int j) { return {var_kind::alpha, j}; }
inline var_id vvar(int j) { return {var_kind::v, j}; }

std::string var_name(var_id v);

// A Laurent monomial: sparse exponent vector, entries sorted by variable,
// no zero exponents stored.
class monomial {
public:
  monomial() = default;
  explicit monomial(std::vector<std::pair<var_id, long>> exps);
  static monomial unit(var_id v, long e = 1);

  long exponent(var_id v) const;
  long total_degree() const;
  bool is_empty() const { return exps_.empty(); }
  const std::vector<std::pair<var_id, long>>& entries() const { return exps_; }

  monomial operator*(const monomial& o) const;
  monomial pow(long k) const;

  bool operator==(const monomial&) const = default;

private:
  std::vector<std::pair<var_id, long>> exps_;
};

// Graded-lexicographic term order, leading term first: higher total degree
// wins; ties broken by the first variable (in the global order) whose
// exponents differ, larger exponent first.
bool term_precedes(const monomial& a, const monomial& b);

struct term_order {
  bool operator()(const monomial& a, const monomial& b) const { return term_precedes(a, b); }
};

using term_map = std::map<monomial, mpz_class, term_order>;

// Multivariate Laurent polynomial with integer coefficients. Always kept in
// canonical form: no zero coefficients stored.
class laurent_poly {
public:
  laurent_poly() = default;
  laurent_poly(long c);                                 // NOLINT(google-explicit-constructor)
  laurent_poly(const mpz_class& c);                     // NOLINT(google-explicit-constructor)
  explicit laurent_poly(var_id v);
  laurent_poly(const mpz_class& c, const monomial& m);  // single term c*m

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_single_term() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const term_map& terms() const { return terms_; }

  // The constant term's coefficient (0 if absent).
  mpz_class constant_coeff() const;

  laurent_poly operator-() const;
  laurent_poly& operator+=(const laurent_poly& o);
  laurent_poly& operator-=(const laurent_poly& o);
  laurent_poly& operator*=(const laurent_poly& o);

  friend laurent_poly operator+(laurent_poly a, const laurent_poly& b) { return a += b; }
  friend laurent_poly operator-(laurent_poly a, const laurent_poly& b) { return a -= b; }
  friend laurent_poly operator*(const laurent_poly& a, const laurent_poly& b);

  bool operator==(const laurent_poly&) const = default;

  // p^k. Negative k is allowed only for single-term polynomials with
  // coefficient +1 or -1 (units of the Laurent ring).
  laurent_poly pow(long k) const;

  void add_term(const mpz_class& c, const monomial& m);

  // Every variable occurring with nonzero exponent, in global order.
  std::vector<var_id> variables() const;

private:
  term_map terms_;
};

inline laurent_poly lp(var_id v) { return laurent_poly(v); }
inline laurent_poly lp(var_id v, long e) { return laurent_poly(1, monomial::unit(v, e)); }

// Exact division in the Laurent ring. Throws errc::not_divisible when d does
// not divide p, errc::division_by_zero when d is zero.
laurent_poly exact_div(const laurent_poly& p, const laurent_poly& d);

// Substitute v -> c*m simultaneously in every term (m may itself contain v;
// no re-substitution happens). Negative exponents of v require c = +/-1.
laurent_poly substitute_scale(const laurent_poly& p, var_id v, const mpz_class& c,
                              const monomial& m);

// Evaluate at a rational point. Every variable of p must be assigned.
// A zero value on a negative exponent throws errc::division_by_zero.
mpq_class eval_rational(const laurent_poly& p, const std::map<var_id, mpq_class>& point);

// (min, max) exponent of v over the terms of p; terms not containing v count
// as exponent 0. Throws errc::zero_polynomial on the zero polynomial.
std::pair<long, long> degree_range(const laurent_poly& p, var_id v);

std::string to_pretty(const laurent_poly& p);

}  // namespace feld
