#pragma once

#include <string>
#include <vector>

namespace feld {

struct bench_row {
  std::string strategy;
  int sites = 0;
  int holes = 0;
  long long micros = 0;
  std::size_t terms = 0;
  bool agree = true;
};

// The canonical hole configuration timed by the benchmark: holes at 2, 4,
// 6, ... pushed right when the chain is too short.
std::vector<int> bench_config(int sites, int n);

// Times every applicable strategy computing the same dual wavefunction and
// compares each result with the transfer sweep. The sweep needs sites <= 12;
// the enumeration strategy joins only when sites * n < 20, the trace one
// when n <= 8.
std::vector<bench_row> run_bench(int sites, int n);

std::string bench_rows_to_csv(const std::vector<bench_row>& rows);

}  // namespace feld
