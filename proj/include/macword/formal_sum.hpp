#pragma once

#include <map>
#include <stdexcept>

#include "macword/word.hpp"

namespace macword {

/// Finitely supported map from words to non-negative integer multiplicities.
struct FormalSum {
  std::map<Word, long long> terms;

  void add(const Word& w, long long mult = 1) {
    if (mult == 0) return;
    auto [it, inserted] = terms.try_emplace(w, 0);
    it->second += mult;
    if (it->second < 0) throw std::invalid_argument("negative multiplicity");
    if (it->second == 0) terms.erase(it);
  }

  /// Inner product <w, S> with words orthonormal: the multiplicity of w.
  long long inner(const Word& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? 0 : it->second;
  }

  long long total() const {
    long long sum = 0;
    for (const auto& [word, mult] : terms) sum += mult;
    return sum;
  }

  FormalSum& operator+=(const FormalSum& other) {
    for (const auto& [word, mult] : other.terms) add(word, mult);
    return *this;
  }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;
};

}  // namespace macword
