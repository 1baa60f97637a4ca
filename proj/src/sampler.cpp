#include "macword/sampler.hpp"

#include <stdexcept>

namespace macword {

GrowthChain make_chain(const StandardTableau& t) {
  GrowthChain chain;
  chain.tableau = t;
  chain.shape = t.shape();
  chain.cells = t.size();
  chain.ambient = chain_ambient(chain.shape);
  chain.wires.reserve(chain.cells);
  for (int m = 1; m <= chain.cells; ++m) chain.wires.push_back(insertion_wire(t, m));
  return chain;
}

std::vector<Permutation> chain_permutations(const GrowthChain& chain) {
  std::vector<Permutation> perms;
  perms.reserve(chain.cells + 1);
  for (const Partition& shape : chain_from_tableau(chain.tableau)) {
    perms.push_back(dominant_from_partition(shape, chain.ambient));
  }
  return perms;
}

namespace {

void check_sequence(const GrowthChain& chain, const std::vector<int>& seq) {
  if (static_cast<int>(seq.size()) != chain.cells) {
    throw std::invalid_argument("insertion sequence length must equal the cell count");
  }
  for (int m = 1; m <= chain.cells; ++m) {
    if (seq[m - 1] < 1 || seq[m - 1] > m) {
      throw std::invalid_argument("insertion t_m must lie in 1..m");
    }
  }
}

}  // namespace

GrowthPath grow(const GrowthChain& chain, const std::vector<int>& seq) {
  check_sequence(chain, seq);
  GrowthPath path;
  path.insertions = seq;
  path.words.reserve(chain.cells + 1);
  path.inserted.reserve(chain.cells);
  Word w;
  path.words.push_back(w);
  for (int m = 1; m <= chain.cells; ++m) {
    const int gap = seq[m - 1];
    const int row = wire_row_at_gap(w, chain.wires[m - 1], gap);
    if (row + 1 > chain.ambient) throw std::logic_error("no wire below the insertion row");
    w.insert(w.begin() + (gap - 1), row);
    path.inserted.push_back(w);
    detail::bump_down_from(w, gap, chain.ambient, nullptr);
    path.words.push_back(w);
  }
  return path;
}

std::vector<int> ungrow(const GrowthChain& chain, const std::vector<Word>& words,
                        const std::vector<Word>& inserted) {
  const int k = chain.cells;
  if (static_cast<int>(words.size()) != k + 1 || static_cast<int>(inserted.size()) != k ||
      !words[0].empty()) {
    throw std::invalid_argument("inconsistent word sequence");
  }
  std::vector<int> seq;
  seq.reserve(k);
  for (int m = 1; m <= k; ++m) {
    const Word& prev = words[m - 1];
    const Word& ins = inserted[m - 1];
    if (static_cast<int>(prev.size()) != m - 1 || static_cast<int>(ins.size()) != m) {
      throw std::invalid_argument("inconsistent word sequence");
    }
    // Deletable gaps form the interval [m - suffix, prefix + 1]; the actual
    // insertion gap is the one whose height matches the insertion wire's row.
    int prefix = 0;
    while (prefix < m - 1 && ins[prefix] == prev[prefix]) ++prefix;
    int suffix = 0;
    while (suffix < m - 1 && ins[m - 1 - suffix] == prev[m - 2 - suffix]) ++suffix;
    int found = 0;
    for (int gap = std::max(1, m - suffix); gap <= std::min(m, prefix + 1); ++gap) {
      if (wire_row_at_gap(prev, chain.wires[m - 1], gap) != ins[gap - 1]) continue;
      if (found != 0) throw std::invalid_argument("inconsistent word sequence");
      found = gap;
    }
    if (found == 0) throw std::invalid_argument("inconsistent word sequence");
    Word replay = ins;
    detail::bump_down_from(replay, found, chain.ambient, nullptr);
    if (replay != words[m]) throw std::invalid_argument("inconsistent word sequence");
    seq.push_back(found);
  }
  return seq;
}

std::vector<int> ungrow(const GrowthChain& chain, const GrowthPath& path) {
  return ungrow(chain, path.words, path.inserted);
}

Word sample(const GrowthChain& chain, Rng& rng, StepValidation validation) {
  Word w;
  w.reserve(chain.cells);
  for (int m = 1; m <= chain.cells; ++m) {
    const int gap = rng.uniform_1_to(m);
    const int row = wire_row_at_gap(w, chain.wires[m - 1], gap);
    if (row + 1 > chain.ambient) throw std::logic_error("no wire below the insertion row");
    w.insert(w.begin() + (gap - 1), row);
    detail::bump_down_from(w, gap, chain.ambient, nullptr);
    if (validation == StepValidation::full && !is_reduced(w, chain.ambient)) {
      throw std::logic_error("growth step produced a non-reduced word");
    }
  }
  return w;
}

Word sample(const GrowthChain& chain, std::uint64_t seed, StepValidation validation) {
  Rng rng(seed);
  return sample(chain, rng, validation);
}

}  // namespace macword
