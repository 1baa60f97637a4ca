#include "macword/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace macword {

bool is_partition(const Partition& shape) {
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] <= 0) return false;
    if (i > 0 && shape[i] > shape[i - 1]) return false;
  }
  return true;
}

int partition_cells(const Partition& shape) {
  return std::accumulate(shape.begin(), shape.end(), 0);
}

Partition conjugate_partition(const Partition& shape) {
  if (!is_partition(shape)) throw std::invalid_argument("not a partition");
  Partition conj;
  if (shape.empty()) return conj;
  conj.resize(shape[0], 0);
  for (int part : shape) {
    for (int c = 0; c < part; ++c) ++conj[c];
  }
  return conj;
}

Partition staircase(int n) {
  if (n < 1) throw std::invalid_argument("staircase needs n >= 1");
  Partition shape;
  for (int part = n - 1; part >= 1; --part) shape.push_back(part);
  return shape;
}

Partition parse_partition(const std::string& text) {
  Partition shape;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    shape.push_back(std::stoi(item));
  }
  if (!is_partition(shape)) throw std::invalid_argument("not a partition: " + text);
  return shape;
}

namespace {

void extend_partitions(Partition& prefix, int remaining, int max_part,
                       std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    extend_partitions(prefix, remaining - part, part, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_with_cells(int cells) {
  if (cells < 0) throw std::invalid_argument("negative cell count");
  std::vector<Partition> out;
  Partition prefix;
  extend_partitions(prefix, cells, cells == 0 ? 1 : cells, out);
  return out;
}

std::string to_string(const Partition& shape) {
  std::string text;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i > 0) text += ',';
    text += std::to_string(shape[i]);
  }
  return text;
}

}  // namespace macword
