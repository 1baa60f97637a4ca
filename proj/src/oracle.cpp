#include "macword/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace macword {

long long factorial(int k) {
  if (k < 0 || k > 20) throw std::invalid_argument("factorial argument out of range");
  long long result = 1;
  for (int i = 2; i <= k; ++i) result *= i;
  return result;
}

namespace {

// Peel the leftmost letter: a_1 = h is admissible iff h sits after h+1 in the
// one-line form, i.e. the inverse has inv[h] > inv[h+1].  Prepending s_h
// swaps the values h and h+1.
void enumerate_from(std::vector<int>& line, std::vector<int>& inv, int remaining, Word& prefix,
                    std::vector<Word>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  const int n = static_cast<int>(line.size());
  for (int h = 1; h < n; ++h) {
    if (inv[h] <= inv[h + 1]) continue;
    const int pos_h = inv[h];
    const int pos_h1 = inv[h + 1];
    line[pos_h - 1] = h + 1;
    line[pos_h1 - 1] = h;
    std::swap(inv[h], inv[h + 1]);
    prefix.push_back(h);
    enumerate_from(line, inv, remaining - 1, prefix, out);
    prefix.pop_back();
    std::swap(inv[h], inv[h + 1]);
    line[pos_h - 1] = h;
    line[pos_h1 - 1] = h + 1;
  }
}

}  // namespace

std::vector<Word> enumerate_reduced(const Permutation& p, int bound) {
  const int len = length(p);
  if (len > bound) throw std::invalid_argument("permutation length exceeds the enumeration bound");
  std::vector<int> line = p.one_line();
  std::vector<int> inv(p.size() + 1, 0);
  for (int i = 1; i <= p.size(); ++i) inv[line[i - 1]] = i;
  std::vector<Word> out;
  Word prefix;
  enumerate_from(line, inv, len, prefix, out);
  return out;
}

long long macdonald_weight(const Word& w) {
  long long product = 1;
  for (int h : w) {
    if (h == 0) return 0;
    product *= h;
  }
  return product;
}

long long macdonald_weight(const FormalSum& sum) {
  long long total = 0;
  for (const auto& [word, mult] : sum.terms) total += mult * macdonald_weight(word);
  return total;
}

long long fk_weight(const Word& w, int x) {
  if (x < 0) throw std::invalid_argument("negative shift");
  long long product = 1;
  for (int h : w) product *= (x + h);
  return product;
}

long long fk_weight(const FormalSum& sum, int x) {
  long long total = 0;
  for (const auto& [word, mult] : sum.terms) total += mult * fk_weight(word, x);
  return total;
}

Word shift_word(const Word& w, int x) {
  if (x < 0) throw std::invalid_argument("negative shift");
  Word shifted = w;
  for (int& h : shifted) h += x;
  return shifted;
}

Word unshift_word(const Word& w, int x) {
  if (x < 0) throw std::invalid_argument("negative shift");
  Word unshifted = w;
  for (int& h : unshifted) {
    h -= x;
    if (h < 1) throw std::invalid_argument("unshift drove a height below 1");
  }
  return unshifted;
}

namespace {

long long rpp_extend(const Partition& shape, std::vector<std::vector<int>>& filling, int r, int c,
                     int x) {
  if (r == static_cast<int>(shape.size())) return 1;
  const auto [next_r, next_c] =
      (c + 1 < shape[r]) ? std::pair<int, int>{r, c + 1} : std::pair<int, int>{r + 1, 0};
  const int left = c > 0 ? filling[r][c - 1] : 0;
  const int up = (r > 0 && c < shape[r - 1]) ? filling[r - 1][c] : 0;
  long long count = 0;
  for (int v = std::max(left, up); v <= x; ++v) {
    filling[r][c] = v;
    count += rpp_extend(shape, filling, next_r, next_c, x);
  }
  return count;
}

}  // namespace

long long rpp_count(const Partition& shape, int x, int bound) {
  if (!is_partition(shape)) throw std::invalid_argument("not a partition");
  if (x < 0) throw std::invalid_argument("negative entry bound");
  if (partition_cells(shape) > bound || x > bound) {
    throw std::invalid_argument("rpp arguments exceed the brute-force bound");
  }
  if (shape.empty()) return 1;
  std::vector<std::vector<int>> filling;
  for (int part : shape) filling.emplace_back(part, 0);
  return rpp_extend(shape, filling, 0, 0, x);
}

namespace {

int minimal_ambient(const Partition& shape) {
  const Partition conj = conjugate_partition(shape);
  int n = 1;
  for (std::size_t i = 0; i < conj.size(); ++i) {
    n = std::max(n, conj[i] + static_cast<int>(i) + 1);
  }
  return n;
}

}  // namespace

VerifyReport verify_macdonald(const Partition& shape) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.shape = shape;
  report.x = -1;
  const Permutation p = dominant_from_partition(shape, minimal_ambient(shape));
  for (const Word& w : enumerate_reduced(p)) report.lhs += macdonald_weight(w);
  report.rhs = factorial(partition_cells(shape));
  report.pass = report.lhs == report.rhs;
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerifyReport verify_fk(const Partition& shape, int x) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.shape = shape;
  report.x = x;
  const Permutation p = dominant_from_partition(shape, minimal_ambient(shape));
  for (const Word& w : enumerate_reduced(p)) report.lhs += fk_weight(w, x);
  report.rhs = factorial(partition_cells(shape)) * rpp_count(shape, x);
  report.pass = report.lhs == report.rhs;
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json report_to_json(const VerifyReport& report) {
  nlohmann::json j;
  j["shape"] = report.shape;
  if (report.x >= 0) j["x"] = report.x;
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  j["pass"] = report.pass;
  j["elapsed"] = report.elapsed_seconds;
  return j;
}

}  // namespace macword
