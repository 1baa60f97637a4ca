#pragma once

#include <string>
#include <utility>
#include <vector>

#include "macword/permutation.hpp"

namespace macword {

/// A word is a sequence of crossing heights.  The crossing at position t
/// swaps rows a_t and a_t+1 of the wiring diagram between columns t-1 and t.
/// Height 0 swaps the auxiliary zeroth wire with row 1; it only arises
/// transiently inside bumps.
using Word = std::vector<int>;

/// Smallest ambient size n for which every crossing fits (max height + 1).
int min_ambient(const Word& w);

/// Wire labels (= starting rows, 0..n) occupying rows 0..n after the first
/// `upto` crossings.
std::vector<int> row_occupancy(const Word& w, int n, int upto);

/// The permutation of the wiring diagram: row r at the right end holds wire
/// p(r).  Throws if the word moves the zeroth wire.  n = 0 infers the
/// minimal ambient.
Permutation permutation_of(const Word& w, int n = 0);

/// True iff |w| equals the inversion count of its permutation over rows
/// 0..n; equivalently no wire pair crosses twice.
bool is_reduced(const Word& w, int n = 0);

/// Height and wire pair of the crossing at position t (1-based).
std::pair<int, std::pair<int, int>> crossing_at(const Word& w, int t, int n = 0);

/// Wire pair per crossing position, in position order.
std::vector<std::pair<int, int>> crossing_wires(const Word& w, int n = 0);

/// True iff deleting position t yields a reduced word.
bool is_nearly_reduced(const Word& w, int t, int n = 0);

/// Position of the second crossing of the wire pair that crosses at t, or 0
/// if that pair crosses only once.  Cost proportional to the distance to the
/// partner when one exists.
int partner_crossing(const Word& w, int t);

/// For w non-reduced and nearly reduced at t: the unique other position at
/// which w is nearly reduced.
int defect(const Word& w, int t, int n = 0);

/// The unique position where the given wire pair crosses in a reduced word.
int find_crossing(const Word& w, std::pair<int, int> wires, int n = 0);

/// Row occupied by `wire` in the gap before position `gap` (gaps run
/// 1..|w|+1).
int wire_row_at_gap(const Word& w, int wire, int gap);

/// Text form "3 1 2 1"; the empty word is "".
std::string to_text(const Word& w);
Word word_from_text(const std::string& text);

}  // namespace macword
