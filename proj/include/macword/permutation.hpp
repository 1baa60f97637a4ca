#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "macword/partition.hpp"

namespace macword {

/// A permutation of {1..n} in one-line form.  Immutable after construction.
class Permutation {
 public:
  Permutation() = default;
  /// Identity of size n.
  explicit Permutation(int n);
  /// One-line form: position i holds the image of i.  Must be a bijection
  /// of {1..n}.
  explicit Permutation(std::vector<int> one_line);

  int size() const { return static_cast<int>(line_.size()); }
  /// Image of i, 1-based.
  int operator()(int i) const;
  const std::vector<int>& one_line() const { return line_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> line_;
};

/// The elementary transposition s_i = (i, i+1) in S_n.
Permutation adjacent_transposition(int n, int i);

/// (p ∘ q)(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);

/// Inversion count.
int length(const Permutation& p);

/// Matrix coordinates: (row, column), 1-based.
using Cell = std::pair<int, int>;

/// Cells {(p(j), i) : i < j, p(i) > p(j)}, one per inversion.
std::set<Cell> rothe_diagram(const Permutation& p);

/// 132-avoidance; equivalent to the Rothe diagram being a Young diagram.
bool is_dominant(const Permutation& p);

/// Row lengths of the Rothe diagram of a dominant permutation.
Partition rothe_shape(const Permutation& p);

/// The unique dominant permutation in S_n whose Rothe diagram has the given
/// shape.  Requires n >= conj[i] + i for every column i of the shape.
Permutation dominant_from_partition(const Partition& shape, int n);

/// Wire-label pairs {r < s} that cross in any reduced word of p, i.e. pairs
/// with p^{-1}(r) > p^{-1}(s).
std::set<std::pair<int, int>> crossing_pairs(const Permutation& p);

std::string to_string(const Permutation& p);

}  // namespace macword
