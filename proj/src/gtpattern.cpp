#include "gtpattern.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace feld {

namespace {

partition checked_partition(const partition& lambda, int n) {
  partition padded = lambda;
  while (static_cast<int>(padded.size()) > n) {
    if (padded.back() != 0) fail(errc::invalid_config, "partition has too many parts");
    padded.pop_back();
  }
  for (std::size_t i = 0; i < padded.size(); ++i) {
    if (padded[i] < 0) fail(errc::invalid_config, "negative partition part");
    if (i > 0 && padded[i] > padded[i - 1])
      fail(errc::invalid_config, "partition parts must be weakly decreasing");
  }
  padded.resize(n, 0);
  return padded;
}

std::vector<gt_pattern> enumerate_patterns(const partition& lambda, int n) {
  gt_pattern base;
  base.size = n;
  base.rows.resize(n);
  for (int j = 0; j < n; ++j) base.rows[0].push_back(lambda[j] + n - j - 1);
  for (int i = 1; i < n; ++i) base.rows[i].assign(n - i, 0);

  std::vector<gt_pattern> out;
  if (n == 0) {
    out.push_back(base);
    return out;
  }
  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i == n) {
      out.push_back(base);
      return;
    }
    auto [ni, nj] = (j == n - 1) ? std::pair{i + 1, i + 1} : std::pair{i, j + 1};
    int lo = base.entry(i - 1, j);
    int hi = base.entry(i - 1, j - 1);
    if (j > i) hi = std::min(hi, base.entry(i, j - 1) - 1);
    for (int a = lo; a <= hi; ++a) {
      base.rows[i][j - i] = a;
      rec(ni, nj);
    }
  };
  rec(1, 1);
  return out;
}

}  // namespace

std::vector<gt_pattern> enumerate_top_fixed(const partition& lambda, int n) {
  return enumerate_patterns(checked_partition(lambda, n), n);
}

std::vector<gt_pattern> enumerate_bottom_fixed(const partition& lambda_bar, int n, int sites) {
  partition padded = checked_partition(lambda_bar, n);
  if (n > 0 && padded[0] > sites - n)
    fail(errc::invalid_config, "largest part exceeds the hole budget");
  auto out = enumerate_patterns(padded, n);
  for (auto& p : out) {
    p.bottom_fixed = true;
    p.sites = sites;
  }
  return out;
}

std::vector<int> pattern_row_holes(const gt_pattern& p, int i) {
  std::vector<int> holes;
  for (auto it = p.rows[i].rbegin(); it != p.rows[i].rend(); ++it) holes.push_back(*it + 1);
  return holes;
}

namespace {

std::vector<long> row_sums(const gt_pattern& p) {
  std::vector<long> d(p.size + 1, 0);
  for (int i = 0; i < p.size; ++i)
    d[i] = std::accumulate(p.rows[i].begin(), p.rows[i].end(), 0L);
  return d;
}

}  // namespace

laurent_poly weight_G(const gt_pattern& p, const std::vector<laurent_poly>& zs) {
  int n = p.size;
  if (static_cast<int>(zs.size()) != n) fail(errc::config_mismatch, "need n variables");
  laurent_poly t = lp(tvar());
  long t_power = 0;
  int guard_count = 0;
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int a = p.entry(i, j);
      int up_left = p.entry(i - 1, j - 1);
      int up_right = p.entry(i - 1, j);
      if (a == up_left)
        ++t_power;
      else if (a != up_right)
        ++guard_count;
    }
  laurent_poly w = lp(tvar(), t_power) * (t + 1).pow(guard_count);
  auto d = row_sums(p);
  for (int i = 1; i <= n; ++i) w *= zs[i - 1].pow(d[i - 1] - d[i]);
  return w;
}

laurent_poly weight_G_dual(const gt_pattern& p, const std::vector<laurent_poly>& zs) {
  int n = p.size;
  if (static_cast<int>(zs.size()) != n) fail(errc::config_mismatch, "need n variables");
  if (!p.bottom_fixed) fail(errc::invalid_config, "dual weight needs a bottom-fixed pattern");
  laurent_poly t = lp(tvar());
  long t_power = 0;
  int guard_count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int below = (j == i) ? p.sites : p.entry(i + 1, j);
      t_power += std::max(below - p.entry(i, j) - 1, 0);
      if (i > 0) {
        int a = p.entry(i, j);
        if (a != p.entry(i - 1, j) && a != p.entry(i - 1, j - 1)) ++guard_count;
      }
    }
  laurent_poly w = lp(tvar(), t_power) * (t + 1).pow(guard_count);
  auto d = row_sums(p);
  for (int i = 1; i <= n; ++i) w *= zs[n - i].pow(d[i - 1] - d[i]);
  return w;
}

laurent_poly tokuyama_sum(const partition& lambda, int n, const std::vector<laurent_poly>& zs) {
  laurent_poly total;
  for (const auto& p : enumerate_top_fixed(lambda, n)) total += weight_G(p, zs);
  return total;
}

laurent_poly dual_tokuyama_sum(const partition& lambda_bar, int n, int sites,
                               const std::vector<laurent_poly>& zs) {
  laurent_poly total;
  for (const auto& p : enumerate_bottom_fixed(lambda_bar, n, sites))
    total += weight_G_dual(p, zs);
  return total;
}

std::string pattern_to_json_string(const gt_pattern& p) {
  std::ostringstream out;
  out << R"({"orientation":")" << (p.bottom_fixed ? "bottom" : "top") << R"(","M":)" << p.sites
      << R"(,"rows":[)";
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    if (i) out << ",";
    out << "[";
    for (std::size_t j = 0; j < p.rows[i].size(); ++j) {
      if (j) out << ",";
      out << p.rows[i][j];
    }
    out << "]";
  }
  out << "]}";
  return out.str();
}

}  // namespace feld
