#include "macword/word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace macword {

namespace {

int effective_ambient(const Word& w, int n) {
  const int needed = min_ambient(w);
  if (n == 0) return needed;
  if (n < needed) throw std::invalid_argument("ambient size too small for word");
  return n;
}

void check_position(const Word& w, int t) {
  if (t < 1 || t > static_cast<int>(w.size())) {
    throw std::out_of_range("word position out of range");
  }
}

int inversions(const std::vector<int>& values) {
  int count = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] > values[j]) ++count;
    }
  }
  return count;
}

}  // namespace

int min_ambient(const Word& w) {
  int max_height = 0;
  for (int h : w) {
    if (h < 0) throw std::invalid_argument("negative crossing height");
    max_height = std::max(max_height, h);
  }
  return max_height + 1;
}

std::vector<int> row_occupancy(const Word& w, int n, int upto) {
  if (upto < 0 || upto > static_cast<int>(w.size())) {
    throw std::out_of_range("occupancy prefix out of range");
  }
  std::vector<int> occ(n + 1);
  std::iota(occ.begin(), occ.end(), 0);
  for (int t = 0; t < upto; ++t) {
    const int h = w[t];
    if (h + 1 > n) throw std::invalid_argument("crossing height exceeds ambient");
    std::swap(occ[h], occ[h + 1]);
  }
  return occ;
}

Permutation permutation_of(const Word& w, int n) {
  const int amb = effective_ambient(w, n);
  const std::vector<int> occ = row_occupancy(w, amb, static_cast<int>(w.size()));
  if (occ[0] != 0) throw std::invalid_argument("word moves the zeroth wire");
  return Permutation(std::vector<int>(occ.begin() + 1, occ.end()));
}

bool is_reduced(const Word& w, int n) {
  const int amb = effective_ambient(w, n);
  const std::vector<int> occ = row_occupancy(w, amb, static_cast<int>(w.size()));
  return inversions(occ) == static_cast<int>(w.size());
}

std::pair<int, std::pair<int, int>> crossing_at(const Word& w, int t, int n) {
  check_position(w, t);
  const int amb = effective_ambient(w, n);
  const std::vector<int> occ = row_occupancy(w, amb, t - 1);
  const int h = w[t - 1];
  const int a = occ[h];
  const int b = occ[h + 1];
  return {h, {std::min(a, b), std::max(a, b)}};
}

std::vector<std::pair<int, int>> crossing_wires(const Word& w, int n) {
  const int amb = effective_ambient(w, n);
  std::vector<int> occ(amb + 1);
  std::iota(occ.begin(), occ.end(), 0);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(w.size());
  for (int h : w) {
    const int a = occ[h];
    const int b = occ[h + 1];
    pairs.emplace_back(std::min(a, b), std::max(a, b));
    std::swap(occ[h], occ[h + 1]);
  }
  return pairs;
}

bool is_nearly_reduced(const Word& w, int t, int n) {
  check_position(w, t);
  Word deleted = w;
  deleted.erase(deleted.begin() + (t - 1));
  return is_reduced(deleted, n == 0 ? 0 : n);
}

int partner_crossing(const Word& w, int t) {
  check_position(w, t);
  const int k = static_cast<int>(w.size());
  const int h = w[t - 1];
  // Track the rows of the two wires of the crossing at t on each side of
  // column t; a later/earlier crossing is theirs exactly when it swaps both
  // tracked rows.  The walks are interleaved so the cost is proportional to
  // the distance to the partner.
  int ru = h, rv = h + 1;      // rightward walk
  int lu = h, lv = h + 1;      // leftward walk
  int right = t + 1, left = t - 1;
  while (right <= k || left >= 1) {
    if (right <= k) {
      const int c = w[right - 1];
      if ((c == ru && c + 1 == rv) || (c == rv && c + 1 == ru)) return right;
      if (c == ru) ru = c + 1;
      else if (c + 1 == ru) ru = c;
      if (c == rv) rv = c + 1;
      else if (c + 1 == rv) rv = c;
      ++right;
    }
    if (left >= 1) {
      const int c = w[left - 1];
      if ((c == lu && c + 1 == lv) || (c == lv && c + 1 == lu)) return left;
      if (c == lu) lu = c + 1;
      else if (c + 1 == lu) lu = c;
      if (c == lv) lv = c + 1;
      else if (c + 1 == lv) lv = c;
      --left;
    }
  }
  return 0;
}

int defect(const Word& w, int t, int n) {
  if (is_reduced(w, n)) throw std::invalid_argument("word is reduced; no defect");
  if (!is_nearly_reduced(w, t, n)) throw std::invalid_argument("word is not nearly reduced at t");
  const int partner = partner_crossing(w, t);
  if (partner == 0) throw std::logic_error("nearly reduced position has no partner crossing");
  return partner;
}

int find_crossing(const Word& w, std::pair<int, int> wires, int n) {
  const int amb = effective_ambient(w, n);
  const int r = wires.first;
  const int s = wires.second;
  if (r < 0 || s < 0 || r > amb || s > amb || r == s) {
    throw std::invalid_argument("bad wire pair");
  }
  int row_r = r, row_s = s;
  for (int t = 1; t <= static_cast<int>(w.size()); ++t) {
    const int h = w[t - 1];
    if ((row_r == h && row_s == h + 1) || (row_s == h && row_r == h + 1)) return t;
    if (row_r == h) row_r = h + 1;
    else if (row_r == h + 1) row_r = h;
    if (row_s == h) row_s = h + 1;
    else if (row_s == h + 1) row_s = h;
  }
  throw std::invalid_argument("wire pair does not cross");
}

int wire_row_at_gap(const Word& w, int wire, int gap) {
  if (gap < 1 || gap > static_cast<int>(w.size()) + 1) {
    throw std::out_of_range("gap out of range");
  }
  if (wire < 0) throw std::invalid_argument("bad wire label");
  int row = wire;
  for (int t = 0; t < gap - 1; ++t) {
    const int h = w[t];
    if (row == h) row = h + 1;
    else if (row == h + 1) row = h;
  }
  return row;
}

std::string to_text(const Word& w) {
  std::string text;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) text += ' ';
    text += std::to_string(w[i]);
  }
  return text;
}

Word word_from_text(const std::string& text) {
  Word w;
  std::stringstream in(text);
  int h = 0;
  while (in >> h) {
    if (h < 0) throw std::invalid_argument("negative crossing height");
    w.push_back(h);
  }
  if (!in.eof()) throw std::invalid_argument("bad word text: " + text);
  return w;
}

}  // namespace macword
