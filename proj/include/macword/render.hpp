#pragma once

#include <string>
#include <vector>

#include "macword/permutation.hpp"
#include "macword/word.hpp"

namespace macword {

/// Product of the first t crossings of the word (the wire-trace prefix).
Permutation partial_permutation(const Word& w, int t, int n = 0);

/// Row occupied by the wire after each of 0..|w| crossings.
std::vector<int> trajectory(const Word& w, int wire, int n = 0);

/// Crossing counts binned over positions 1..|w| and heights 1..n-1.  The
/// total over all bins equals |w|.
std::vector<std::vector<long long>> crossing_histogram(const Word& w, int pos_bins,
                                                       int height_bins, int n = 0);

/// One "position,height" record per crossing.
std::string crossings_csv(const Word& w);

/// Text diagram of the selected wires (all wires when `wires` is empty);
/// refuses ambient sizes above 40.
std::string render_wiring_ascii(const Word& w, const std::vector<int>& wires, int n = 0);

/// SVG: a polyline per selected wire plus a dot per crossing.
std::string render_wiring_svg(const Word& w, const std::vector<int>& wires, int n = 0);

/// One mark per (p(i), i) in matrix coordinates.
std::string render_matrix_scatter_svg(const Permutation& p);
std::string render_matrix_scatter_csv(const Permutation& p);

}  // namespace macword
