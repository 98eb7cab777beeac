#pragma once

#include <string>
#include <vector>

#include "poly.hpp"
#include "schur.hpp"

namespace feld {

// Triangular array with N rows; rows[i] holds the N-i entries a_{i,j},
// j = i..N-1. Row 0 is the fixed row; every row strictly decreases and
// consecutive rows interlace: a_{i-1,j-1} >= a_{i,j} >= a_{i-1,j}.
struct gt_pattern {
  int size = 0;
  bool bottom_fixed = false;
  int sites = 0;  // M, carried by bottom-fixed patterns
  std::vector<std::vector<int>> rows;

  int entry(int i, int j) const { return rows[i][j - i]; }
};

// All strict patterns with row 0 pinned to lambda + delta, emitted in
// lexicographic order of the free entries (row by row, left to right).
std::vector<gt_pattern> enumerate_top_fixed(const partition& lambda, int n);

// Same triangles with the dual reading attached: entries bounded by the
// site count, row i giving the hole configuration {a_{i,j} + 1}.
std::vector<gt_pattern> enumerate_bottom_fixed(const partition& lambda_bar, int n, int sites);

// Hole positions carried by row i of a bottom-fixed pattern, ascending.
std::vector<int> pattern_row_holes(const gt_pattern& p, int i);

laurent_poly weight_G(const gt_pattern& p, const std::vector<laurent_poly>& zs);
laurent_poly weight_G_dual(const gt_pattern& p, const std::vector<laurent_poly>& zs);

laurent_poly tokuyama_sum(const partition& lambda, int n, const std::vector<laurent_poly>& zs);
laurent_poly dual_tokuyama_sum(const partition& lambda_bar, int n, int sites,
                               const std::vector<laurent_poly>& zs);

std::string pattern_to_json_string(const gt_pattern& p);

}  // namespace feld
