#include "io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace feld {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json poly_to_json(const laurent_poly& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    ordered_json exps = ordered_json::object();
    for (const auto& [v, e] : m.entries()) exps[var_name(v)] = e;
    arr.push_back({{"coeff", c.get_str()}, {"exps", std::move(exps)}});
  }
  return arr;
}

}  // namespace

std::string poly_to_json_string(const laurent_poly& p) { return poly_to_json(p).dump(); }

std::string poly_to_csv(const laurent_poly& p) {
  std::ostringstream out;
  out << "coeff,monomial\n";
  for (const auto& [m, c] : p.terms()) {
    std::string vars;
    for (const auto& [v, e] : m.entries()) {
      if (!vars.empty()) vars += "*";
      vars += var_name(v);
      if (e != 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) vars = "1";
    out << c.get_str() << "," << vars << "\n";
  }
  return out.str();
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1 && parts[0].empty()) parts.clear();
  return parts;
}

var_id parse_var(const std::string& name) {
  if (name == "t") return tvar();
  if (name == "tp") return tpvar();
  if (name.size() >= 2 && (name[0] == 'z' || name[0] == 'a' || name[0] == 'v')) {
    int idx = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i])))
        fail(errc::parse_error, "bad variable name: " + name);
      idx = idx * 10 + (name[i] - '0');
    }
    if (idx < 1) fail(errc::parse_error, "variable index must be >= 1: " + name);
    if (name[0] == 'z') return zvar(idx);
    if (name[0] == 'a') return avar(idx);
    return vvar(idx);
  }
  fail(errc::parse_error, "bad variable name: " + name);
}

long parse_long(const std::string& text) {
  try {
    std::size_t pos = 0;
    long value = std::stol(text, &pos);
    if (pos != text.size()) fail(errc::parse_error, "bad integer: " + text);
    return value;
  } catch (const error&) {
    throw;
  } catch (const std::exception&) {
    fail(errc::parse_error, "bad integer: " + text);
  }
}

}  // namespace

std::map<var_id, mpq_class> parse_assignment(const std::string& text) {
  std::map<var_id, mpq_class> point;
  for (const std::string& item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) fail(errc::parse_error, "expected name=value: " + item);
    var_id v = parse_var(item.substr(0, eq));
    std::string value = item.substr(eq + 1);
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), value.c_str(), 10) != 0)
      fail(errc::parse_error, "bad rational: " + value);
    if (q.get_den() == 0) fail(errc::parse_error, "zero denominator: " + value);
    q.canonicalize();
    if (point.count(v)) fail(errc::parse_error, "duplicate assignment: " + item);
    point.emplace(v, q);
  }
  return point;
}

std::vector<int> parse_positions(const std::string& text, int sites) {
  std::vector<int> out;
  for (const std::string& item : split(text, ',')) {
    long x = parse_long(item);
    if (x < 1 || x > sites) fail(errc::invalid_config, "position out of range: " + item);
    if (!out.empty() && x <= out.back())
      fail(errc::invalid_config, "positions must be strictly increasing");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

std::vector<int> parse_partition(const std::string& text) {
  std::vector<int> out;
  for (const std::string& item : split(text, ',')) {
    long x = parse_long(item);
    if (x < 0) fail(errc::invalid_config, "partition parts must be nonnegative");
    if (!out.empty() && x > out.back())
      fail(errc::invalid_config, "partition parts must be weakly decreasing");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace feld
