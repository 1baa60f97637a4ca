#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "macword/bump.hpp"
#include "macword/tableau.hpp"
#include "macword/word.hpp"

namespace macword {

/// Seeded 64-bit generator with a fixed bounded-draw mapping, so equal seeds
/// give byte-identical runs on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  /// Uniform on {1..m} by the multiply-high reduction (no rejection loop;
  /// bias is below m / 2^64).
  int uniform_1_to(int m) {
    return static_cast<int>((static_cast<unsigned __int128>(next()) *
                             static_cast<std::uint64_t>(m)) >> 64) + 1;
  }

 private:
  std::mt19937_64 gen_;
};

/// Precomputed data for growing reduced words along the chain of a tableau.
struct GrowthChain {
  StandardTableau tableau;
  Partition shape;
  int cells = 0;            // k
  int ambient = 0;          // fixed ambient size for the whole chain
  std::vector<int> wires;   // wires[m-1] = insertion wire of step m
};

GrowthChain make_chain(const StandardTableau& t);

/// The dominant permutations of the chain's shapes, all in the chain
/// ambient.  Index m holds the permutation after m insertions.
std::vector<Permutation> chain_permutations(const GrowthChain& chain);

/// One run of the growth process: insertion gaps, visited reduced words, and
/// the pre-bump word of each step (the record that makes the run reversible).
struct GrowthPath {
  std::vector<int> insertions;  // t_m, with t_m in 1..m
  std::vector<Word> words;      // w_0 = empty .. w_k
  std::vector<Word> inserted;   // word of step m right after insertion
};

/// Deterministic replay of an insertion sequence.
GrowthPath grow(const GrowthChain& chain, const std::vector<int>& seq);

/// Recover the insertion sequence from a path's records.  Inverse of grow:
/// ungrow(chain, grow(chain, seq)) == seq.
std::vector<int> ungrow(const GrowthChain& chain, const std::vector<Word>& words,
                        const std::vector<Word>& inserted);
std::vector<int> ungrow(const GrowthChain& chain, const GrowthPath& path);

enum class StepValidation { none, full };

/// Draw a reduced word for the chain's final permutation with probability
/// proportional to its Macdonald weight.  Keeps only the current word.
Word sample(const GrowthChain& chain, Rng& rng, StepValidation validation = StepValidation::none);
Word sample(const GrowthChain& chain, std::uint64_t seed,
            StepValidation validation = StepValidation::none);

}  // namespace macword
