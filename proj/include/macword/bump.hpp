#pragma once

#include <utility>
#include <vector>

#include "macword/formal_sum.hpp"
#include "macword/permutation.hpp"
#include "macword/word.hpp"

namespace macword {

enum class BumpDirection { up, down };

/// Height at t decremented by one.  Requires a_t >= 1.
Word push_up(Word w, int t);
/// Height at t incremented by one.
Word push_down(Word w, int t);
/// Position t removed.
Word delete_at(Word w, int t);

struct BumpTrace {
  std::vector<int> pushed;   // positions in push order; no position repeats
  Word terminal;             // reduced
  std::vector<Word> stages;  // word after each push; filled when requested
};

/// Little bump: push at t, relocate to the defect, repeat until reduced.
/// Requires w nearly reduced at t.
BumpTrace little_bump(const Word& w, int t, BumpDirection direction,
                      bool keep_stages = false);

/// Push-up plus deletion as a formal sum; preserves the Macdonald weight.
FormalSum push_delete(const Word& w, int t);

struct BumpDeleteTrace {
  FormalSum sum;
  std::vector<int> positions;  // push position per stage
  std::vector<Word> summands;  // deletion snapshot per stage, in stage order
  Word terminal;               // reduced word holding the fully pushed crossing
  int last_position = 0;       // where the final push landed
};

/// Upward bump collecting the deletion before each push.  Requires w reduced
/// and nearly reduced at t.
BumpDeleteTrace bump_delete_traced(const Word& w, int t);
FormalSum bump_delete(const Word& w, int t);

struct InsertBumpTrace {
  Word inserted;            // the word right after insertion, before any push
  Word word;                // reduced result
  std::vector<int> pushed;  // downward push positions in order
};

/// Insert a crossing at position `gap` at the row of `wire` (crossing it
/// with the wire directly below), then push down at the defect of the last
/// touched position until reduced.  This is the exact time-reversal of
/// bump_delete.  Transient heights above ambient-1 are an error.
InsertBumpTrace insert_bump_traced(const Word& w, int wire, int gap, int ambient);
Word insert_bump_at(const Word& w, int wire, int gap, int ambient);

/// I(p,r) = {0 <= i < r : l(p t_{i,r}) = l(p)+1} and
/// S(p,r) = {s > r : l(p t_{r,s}) = l(p)+1}, over the points {0..n}.
std::pair<std::vector<int>, std::vector<int>> index_sets(const Permutation& p, int r);

namespace detail {

/// In-place down-bump from an already inserted crossing at `last`.  No
/// validation; used by the sampler hot path.
void bump_down_from(Word& w, int last, int ambient, std::vector<int>* pushed);

}  // namespace detail

}  // namespace macword
