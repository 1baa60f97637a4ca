#pragma once

#include <vector>

#include <json.hpp>

#include "macword/formal_sum.hpp"
#include "macword/partition.hpp"
#include "macword/permutation.hpp"
#include "macword/word.hpp"

namespace macword {

/// k! with an overflow guard (k <= 20).
long long factorial(int k);

/// Complete, duplicate-free, lexicographically sorted list of the reduced
/// words of p.  Depth-first over left descents, independent of the bump
/// machinery.
std::vector<Word> enumerate_reduced(const Permutation& p, int bound = 12);

/// Product of the heights; 1 for the empty word, 0 if any height is 0.
long long macdonald_weight(const Word& w);
long long macdonald_weight(const FormalSum& sum);

/// Product of (x + a_t); equals the Macdonald weight of the word shifted by
/// x new wires above.
long long fk_weight(const Word& w, int x);
long long fk_weight(const FormalSum& sum, int x);

/// Heights increased by x (the diagram gains x untouched wires on top).
Word shift_word(const Word& w, int x);
/// Heights decreased by x; every height must stay positive.
Word unshift_word(const Word& w, int x);

/// Reverse plane partitions of the shape with entries in [0, x], counted by
/// brute force.
long long rpp_count(const Partition& shape, int x, int bound = 12);

struct VerifyReport {
  Partition shape;
  int x = 0;  // -1 for the plain Macdonald check
  long long lhs = 0;
  long long rhs = 0;
  bool pass = false;
  double elapsed_seconds = 0.0;
};

/// lhs = sum of Macdonald weights over the reduced words of the dominant
/// permutation of the shape; rhs = |shape|!.
VerifyReport verify_macdonald(const Partition& shape);

/// lhs = sum of x-shifted weights; rhs = |shape|! * rpp(shape, x).
VerifyReport verify_fk(const Partition& shape, int x);

nlohmann::json report_to_json(const VerifyReport& report);

}  // namespace macword
