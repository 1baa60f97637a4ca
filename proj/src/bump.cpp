#include "macword/bump.hpp"

#include <stdexcept>

namespace macword {

namespace {

void check_position(const Word& w, int t) {
  if (t < 1 || t > static_cast<int>(w.size())) {
    throw std::out_of_range("word position out of range");
  }
}

}  // namespace

Word push_up(Word w, int t) {
  check_position(w, t);
  if (w[t - 1] < 1) throw std::invalid_argument("cannot push up a crossing at height 0");
  --w[t - 1];
  return w;
}

Word push_down(Word w, int t) {
  check_position(w, t);
  ++w[t - 1];
  return w;
}

Word delete_at(Word w, int t) {
  check_position(w, t);
  w.erase(w.begin() + (t - 1));
  return w;
}

BumpTrace little_bump(const Word& w, int t, BumpDirection direction, bool keep_stages) {
  if (!is_nearly_reduced(w, t)) {
    throw std::invalid_argument("little_bump requires a word nearly reduced at t");
  }
  BumpTrace trace;
  Word current = w;
  const int max_pushes = static_cast<int>(w.size());
  while (true) {
    if (direction == BumpDirection::up) {
      if (current[t - 1] < 1) throw std::invalid_argument("cannot push up a crossing at height 0");
      --current[t - 1];
    } else {
      ++current[t - 1];
    }
    trace.pushed.push_back(t);
    if (keep_stages) trace.stages.push_back(current);
    if (static_cast<int>(trace.pushed.size()) > max_pushes) {
      throw std::logic_error("bump exceeded the push bound");
    }
    const int partner = partner_crossing(current, t);
    if (partner == 0) {  // the moved pair crosses once: current is reduced
      trace.terminal = std::move(current);
      return trace;
    }
    t = partner;
  }
}

FormalSum push_delete(const Word& w, int t) {
  FormalSum sum;
  sum.add(push_up(w, t));
  sum.add(delete_at(w, t));
  return sum;
}

BumpDeleteTrace bump_delete_traced(const Word& w, int t) {
  if (!is_reduced(w)) throw std::invalid_argument("bump_delete requires a reduced word");
  if (!is_nearly_reduced(w, t)) {
    throw std::invalid_argument("bump_delete requires a word nearly reduced at t");
  }
  BumpDeleteTrace trace;
  Word current = w;
  const int max_pushes = static_cast<int>(w.size());
  while (true) {
    Word snapshot = delete_at(current, t);
    trace.sum.add(snapshot);
    trace.positions.push_back(t);
    trace.summands.push_back(std::move(snapshot));
    if (current[t - 1] < 1) throw std::logic_error("bump tried to push a height-0 crossing");
    --current[t - 1];
    if (static_cast<int>(trace.positions.size()) > max_pushes) {
      throw std::logic_error("bump exceeded the push bound");
    }
    const int partner = partner_crossing(current, t);
    if (partner == 0) {
      trace.last_position = t;
      trace.terminal = std::move(current);
      return trace;
    }
    t = partner;
  }
}

FormalSum bump_delete(const Word& w, int t) { return bump_delete_traced(w, t).sum; }

namespace detail {

void bump_down_from(Word& w, int last, int ambient, std::vector<int>* pushed) {
  const int max_pushes = static_cast<int>(w.size());
  int count = 0;
  while (true) {
    const int partner = partner_crossing(w, last);
    if (partner == 0) return;
    if (w[partner - 1] + 1 > ambient - 1) {
      throw std::logic_error("downward push left the ambient wiring diagram");
    }
    ++w[partner - 1];
    if (pushed != nullptr) pushed->push_back(partner);
    last = partner;
    if (++count > max_pushes) throw std::logic_error("bump exceeded the push bound");
  }
}

}  // namespace detail

InsertBumpTrace insert_bump_traced(const Word& w, int wire, int gap, int ambient) {
  if (ambient < 1) throw std::invalid_argument("ambient must be positive");
  if (wire < 1 || wire > ambient) throw std::invalid_argument("wire label out of ambient");
  if (gap < 1 || gap > static_cast<int>(w.size()) + 1) throw std::out_of_range("gap out of range");
  for (int h : w) {
    if (h < 1 || h > ambient - 1) throw std::invalid_argument("word heights out of ambient");
  }
  if (!is_reduced(w, ambient)) throw std::invalid_argument("insert_bump requires a reduced word");

  const int row = wire_row_at_gap(w, wire, gap);
  if (row + 1 > ambient) throw std::invalid_argument("no wire below the insertion row");

  InsertBumpTrace trace;
  trace.word = w;
  trace.word.insert(trace.word.begin() + (gap - 1), row);
  trace.inserted = trace.word;
  detail::bump_down_from(trace.word, gap, ambient, &trace.pushed);
  return trace;
}

Word insert_bump_at(const Word& w, int wire, int gap, int ambient) {
  return insert_bump_traced(w, wire, gap, ambient).word;
}

namespace {

int vector_inversions(const std::vector<int>& values) {
  int count = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] > values[j]) ++count;
    }
  }
  return count;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> index_sets(const Permutation& p, int r) {
  const int n = p.size();
  if (r < 1 || r > n) throw std::out_of_range("wire out of range");
  // Extended one-line over the points {0..n}; right multiplication by a
  // transposition swaps the corresponding positions.
  std::vector<int> line(n + 1);
  line[0] = 0;
  for (int i = 1; i <= n; ++i) line[i] = p(i);
  const int base = vector_inversions(line);

  std::vector<int> lower, upper;
  for (int i = 0; i < r; ++i) {
    std::swap(line[i], line[r]);
    if (vector_inversions(line) == base + 1) lower.push_back(i);
    std::swap(line[i], line[r]);
  }
  for (int s = r + 1; s <= n; ++s) {
    std::swap(line[r], line[s]);
    if (vector_inversions(line) == base + 1) upper.push_back(s);
    std::swap(line[r], line[s]);
  }
  return {lower, upper};
}

}  // namespace macword
