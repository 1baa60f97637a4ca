#include "macword/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace macword {

Permutation::Permutation(int n) : line_(n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::iota(line_.begin(), line_.end(), 1);
}

Permutation::Permutation(std::vector<int> one_line) : line_(std::move(one_line)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int v : line_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a bijection of 1..n");
    seen[v] = 1;
  }
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("permutation argument out of range");
  return line_[i - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(line_.size());
  for (int i = 1; i <= size(); ++i) inv[line_[i - 1] - 1] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i) {
    if (line_[i - 1] != i) return false;
  }
  return true;
}

Permutation adjacent_transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("adjacent transposition index out of range");
  Permutation p(n);
  std::vector<int> line = p.one_line();
  std::swap(line[i - 1], line[i]);
  return Permutation(std::move(line));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> line(p.size());
  for (int i = 1; i <= p.size(); ++i) line[i - 1] = p(q(i));
  return Permutation(std::move(line));
}

int length(const Permutation& p) {
  int count = 0;
  const auto& line = p.one_line();
  for (std::size_t i = 0; i < line.size(); ++i) {
    for (std::size_t j = i + 1; j < line.size(); ++j) {
      if (line[i] > line[j]) ++count;
    }
  }
  return count;
}

std::set<Cell> rothe_diagram(const Permutation& p) {
  std::set<Cell> cells;
  const auto& line = p.one_line();
  for (std::size_t i = 0; i < line.size(); ++i) {
    for (std::size_t j = i + 1; j < line.size(); ++j) {
      if (line[i] > line[j]) cells.insert({line[j], static_cast<int>(i) + 1});
    }
  }
  return cells;
}

bool is_dominant(const Permutation& p) {
  // 132 pattern: i < j < k with p(i) < p(k) < p(j).
  const auto& line = p.one_line();
  const int n = p.size();
  int prefix_min = n + 1;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      if (line[k] < line[j] && prefix_min < line[k]) return false;
    }
    prefix_min = std::min(prefix_min, line[j]);
  }
  return true;
}

Partition rothe_shape(const Permutation& p) {
  if (!is_dominant(p)) throw std::invalid_argument("permutation is not dominant");
  std::vector<int> row_counts(p.size() + 1, 0);
  for (const Cell& cell : rothe_diagram(p)) ++row_counts[cell.first];
  Partition shape;
  for (int r = 1; r <= p.size(); ++r) {
    if (row_counts[r] == 0) break;
    shape.push_back(row_counts[r]);
  }
  return shape;
}

Permutation dominant_from_partition(const Partition& shape, int n) {
  if (!is_partition(shape)) throw std::invalid_argument("not a partition");
  const Partition conj = conjugate_partition(shape);
  for (std::size_t i = 0; i < conj.size(); ++i) {
    if (conj[i] + static_cast<int>(i) + 1 > n) {
      throw std::invalid_argument("ambient size too small for shape");
    }
  }
  // Lehmer code c_i = conj_i; pick the (c_i+1)-th smallest unused value.
  std::vector<int> unused(n);
  std::iota(unused.begin(), unused.end(), 1);
  std::vector<int> line;
  line.reserve(n);
  for (int i = 0; i < n; ++i) {
    const int code = i < static_cast<int>(conj.size()) ? conj[i] : 0;
    line.push_back(unused[code]);
    unused.erase(unused.begin() + code);
  }
  return Permutation(std::move(line));
}

std::set<std::pair<int, int>> crossing_pairs(const Permutation& p) {
  std::set<std::pair<int, int>> pairs;
  const Permutation inv = p.inverse();
  for (int r = 1; r <= p.size(); ++r) {
    for (int s = r + 1; s <= p.size(); ++s) {
      if (inv(r) > inv(s)) pairs.insert({r, s});
    }
  }
  return pairs;
}

std::string to_string(const Permutation& p) {
  std::string text;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) text += ' ';
    text += std::to_string(p(i));
  }
  return text;
}

}  // namespace macword
