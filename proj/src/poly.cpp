#include "poly.hpp"

#include <algorithm>
#include <cstdlib>

#include "errors.hpp"

namespace feld {

std::string var_name(var_id v) {
  switch (v.kind) {
    case var_kind::t:
      return "t";
    case var_kind::tp:
      return "tp";
    case var_kind::z:
      return "z" + std::to_string(v.index);
    case var_kind::alpha:
      return "a" + std::to_string(v.index);
    case var_kind::v:
      return "v" + std::to_string(v.index);
  }
  return "?";
}

monomial::monomial(std::vector<std::pair<var_id, long>> exps) : exps_(std::move(exps)) {
  std::sort(exps_.begin(), exps_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<var_id, long>> merged;
  for (const auto& [v, e] : exps_) {
    if (!merged.empty() && merged.back().first == v)
      merged.back().second += e;
    else
      merged.emplace_back(v, e);
  }
  std::erase_if(merged, [](const auto& p) { return p.second == 0; });
  exps_ = std::move(merged);
}

monomial monomial::unit(var_id v, long e) {
  monomial m;
  if (e != 0) m.exps_.emplace_back(v, e);
  return m;
}

long monomial::exponent(var_id v) const {
  for (const auto& [w, e] : exps_)
    if (w == v) return e;
  return 0;
}

long monomial::total_degree() const {
  long d = 0;
  for (const auto& [v, e] : exps_) d += e;
  return d;
}

monomial monomial::operator*(const monomial& o) const {
  monomial r;
  r.exps_.reserve(exps_.size() + o.exps_.size());
  std::size_t i = 0, j = 0;
  while (i < exps_.size() || j < o.exps_.size()) {
    if (j == o.exps_.size() || (i < exps_.size() && exps_[i].first < o.exps_[j].first)) {
      r.exps_.push_back(exps_[i++]);
    } else if (i == exps_.size() || o.exps_[j].first < exps_[i].first) {
      r.exps_.push_back(o.exps_[j++]);
    } else {
      long e = exps_[i].second + o.exps_[j].second;
      if (e != 0) r.exps_.emplace_back(exps_[i].first, e);
      ++i, ++j;
    }
  }
  return r;
}

monomial monomial::pow(long k) const {
  monomial r;
  if (k == 0) return r;
  r.exps_ = exps_;
  for (auto& [v, e] : r.exps_) e *= k;
  return r;
}

bool term_precedes(const monomial& a, const monomial& b) {
  long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  const auto& ae = a.entries();
  const auto& be = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ae.size() || j < be.size()) {
    if (j == be.size() || (i < ae.size() && ae[i].first < be[j].first))
      return ae[i].second > 0;
    if (i == ae.size() || be[j].first < ae[i].first) return be[j].second < 0;
    if (ae[i].second != be[j].second) return ae[i].second > be[j].second;
    ++i, ++j;
  }
  return false;
}

laurent_poly::laurent_poly(long c) {
  if (c != 0) terms_.emplace(monomial(), mpz_class(c));
}

laurent_poly::laurent_poly(const mpz_class& c) {
  if (c != 0) terms_.emplace(monomial(), c);
}

laurent_poly::laurent_poly(var_id v) { terms_.emplace(monomial::unit(v), mpz_class(1)); }

laurent_poly::laurent_poly(const mpz_class& c, const monomial& m) {
  if (c != 0) terms_.emplace(m, c);
}

bool laurent_poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_empty());
}

mpz_class laurent_poly::constant_coeff() const {
  auto it = terms_.find(monomial());
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void laurent_poly::add_term(const mpz_class& c, const monomial& m) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

laurent_poly laurent_poly::operator-() const {
  laurent_poly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

laurent_poly& laurent_poly::operator+=(const laurent_poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(c, m);
  return *this;
}

laurent_poly& laurent_poly::operator-=(const laurent_poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(-c, m);
  return *this;
}

laurent_poly operator*(const laurent_poly& a, const laurent_poly& b) {
  laurent_poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ca * cb, ma * mb);
  return r;
}

laurent_poly& laurent_poly::operator*=(const laurent_poly& o) { return *this = *this * o; }

laurent_poly laurent_poly::pow(long k) const {
  if (k < 0) {
    if (terms_.size() != 1) fail(errc::invalid_config, "negative power of a non-monomial");
    const auto& [m, c] = *terms_.begin();
    if (c != 1 && c != -1) fail(errc::invalid_config, "negative power of a non-unit");
    mpz_class rc = (c == -1 && (k % 2) != 0) ? mpz_class(-1) : mpz_class(1);
    return laurent_poly(rc, m.pow(k));
  }
  laurent_poly r(1);
  for (long i = 0; i < k; ++i) r *= *this;
  return r;
}

std::vector<var_id> laurent_poly::variables() const {
  std::vector<var_id> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.entries()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

namespace {

monomial without_var(const monomial& m, var_id x) {
  std::vector<std::pair<var_id, long>> es;
  for (const auto& [v, e] : m.entries())
    if (!(v == x)) es.emplace_back(v, e);
  return monomial(std::move(es));
}

// Per-variable minimum exponent over all terms: the largest monomial m such
// that p * m^-1 still has nonnegative exponents in every listed variable.
monomial content_floor(const laurent_poly& p) {
  std::map<var_id, long> mins;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first) {
      for (const auto& [v, e] : m.entries()) mins[v] = e;
      first = false;
      continue;
    }
    for (auto& [v, mn] : mins) mn = std::min(mn, m.exponent(v));
    for (const auto& [v, e] : m.entries())
      if (!mins.count(v)) mins[v] = std::min(0L, e);
  }
  std::vector<std::pair<var_id, long>> es(mins.begin(), mins.end());
  return monomial(std::move(es));
}

laurent_poly times_monomial(const laurent_poly& p, const monomial& m) {
  laurent_poly r;
  for (const auto& [mm, c] : p.terms()) r.add_term(c, mm * m);
  return r;
}

// Coefficients of p viewed as a polynomial in x.
std::map<long, laurent_poly> collect_var(const laurent_poly& p, var_id x) {
  std::map<long, laurent_poly> out;
  for (const auto& [m, c] : p.terms()) out[m.exponent(x)].add_term(c, without_var(m, x));
  return out;
}

// Exact division of genuine polynomials (all exponents nonnegative), by long
// division in the lexicographically largest variable of the divisor.
laurent_poly poly_div_exact(const laurent_poly& P, const laurent_poly& D) {
  if (D.is_constant()) {
    mpz_class c = D.constant_coeff();
    laurent_poly q;
    for (const auto& [m, pc] : P.terms()) {
      if (!mpz_divisible_p(pc.get_mpz_t(), c.get_mpz_t()))
        fail(errc::not_divisible, "coefficient not divisible");
      mpz_class qc;
      mpz_divexact(qc.get_mpz_t(), pc.get_mpz_t(), c.get_mpz_t());
      q.add_term(qc, m);
    }
    return q;
  }
  var_id x = D.variables().back();
  auto dcoeffs = collect_var(D, x);
  long dx = dcoeffs.rbegin()->first;
  const laurent_poly& dlead = dcoeffs.rbegin()->second;

  laurent_poly rem = P, quot;
  while (!rem.is_zero()) {
    auto rcoeffs = collect_var(rem, x);
    long px = rcoeffs.rbegin()->first;
    if (px < dx) fail(errc::not_divisible, "remainder of lower degree than divisor");
    laurent_poly qc = poly_div_exact(rcoeffs.rbegin()->second, dlead);
    laurent_poly qterm = times_monomial(qc, monomial::unit(x, px - dx));
    quot += qterm;
    rem -= qterm * D;
    if (!rem.is_zero()) {
      auto check = collect_var(rem, x);
      if (check.rbegin()->first >= px)
        fail(errc::not_divisible, "long division made no progress");
    }
  }
  return quot;
}

}  // namespace

laurent_poly exact_div(const laurent_poly& p, const laurent_poly& d) {
  if (d.is_zero()) fail(errc::division_by_zero, "division by the zero polynomial");
  if (p.is_zero()) return {};
  monomial fp = content_floor(p);
  monomial fd = content_floor(d);
  laurent_poly P = times_monomial(p, fp.pow(-1));
  laurent_poly D = times_monomial(d, fd.pow(-1));
  laurent_poly Q = poly_div_exact(P, D);
  return times_monomial(Q, fp * fd.pow(-1));
}

laurent_poly substitute_scale(const laurent_poly& p, var_id v, const mpz_class& c,
                              const monomial& m) {
  laurent_poly r;
  for (const auto& [mono, coeff] : p.terms()) {
    long k = mono.exponent(v);
    mpz_class factor;
    if (k >= 0) {
      mpz_pow_ui(factor.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k));
    } else {
      if (c != 1 && c != -1)
        fail(errc::invalid_config, "negative exponent under non-unit substitution");
      factor = (c == -1 && (k % 2) != 0) ? -1 : 1;
    }
    r.add_term(coeff * factor, without_var(mono, v) * m.pow(k));
  }
  return r;
}

namespace {

mpq_class mpq_pow(const mpq_class& q, long e) {
  if (e == 0) return {1};
  bool neg = e < 0;
  auto ue = static_cast<unsigned long>(neg ? -e : e);
  mpq_class r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), q.get_num_mpz_t(), ue);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), q.get_den_mpz_t(), ue);
  if (neg) {
    if (r == 0) fail(errc::division_by_zero, "zero raised to a negative power");
    mpq_class inv;
    mpq_inv(inv.get_mpq_t(), r.get_mpq_t());
    return inv;
  }
  return r;
}

}  // namespace

mpq_class eval_rational(const laurent_poly& p, const std::map<var_id, mpq_class>& point) {
  mpq_class total(0);
  for (const auto& [m, c] : p.terms()) {
    mpq_class term(c);
    for (const auto& [v, e] : m.entries()) {
      auto it = point.find(v);
      if (it == point.end()) fail(errc::invalid_config, "unassigned variable " + var_name(v));
      term *= mpq_pow(it->second, e);
    }
    total += term;
  }
  return total;
}

std::pair<long, long> degree_range(const laurent_poly& p, var_id v) {
  if (p.is_zero()) fail(errc::zero_polynomial, "degree_range of the zero polynomial");
  long lo = 0, hi = 0;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    long e = m.exponent(v);
    if (first) {
      lo = hi = e;
      first = false;
    } else {
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
  }
  return {lo, hi};
}

std::string to_pretty(const laurent_poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    std::string vars;
    for (const auto& [v, e] : m.entries()) {
      if (!vars.empty()) vars += "*";
      vars += var_name(v);
      if (e != 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += vars;
    }
  }
  return out;
}

}  // namespace feld
