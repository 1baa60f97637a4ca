#include "macword/tableau.hpp"

#include <stdexcept>

namespace macword {

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  int cells = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) throw std::invalid_argument("empty tableau row");
    if (r > 0 && rows_[r].size() > rows_[r - 1].size()) {
      throw std::invalid_argument("tableau rows must weakly decrease in length");
    }
    cells += static_cast<int>(rows_[r].size());
  }
  std::vector<char> seen(cells + 1, 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > cells || seen[v]) throw std::invalid_argument("tableau entries must be 1..k");
      seen[v] = 1;
      if (c > 0 && rows_[r][c - 1] >= v) throw std::invalid_argument("tableau rows must increase");
      if (r > 0 && rows_[r - 1][c] >= v) throw std::invalid_argument("tableau columns must increase");
    }
  }
}

Partition StandardTableau::shape() const {
  Partition shape;
  for (const auto& row : rows_) shape.push_back(static_cast<int>(row.size()));
  return shape;
}

int StandardTableau::size() const {
  int cells = 0;
  for (const auto& row : rows_) cells += static_cast<int>(row.size());
  return cells;
}

std::pair<int, int> StandardTableau::position_of(int m) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (rows_[r][c] == m) return {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
    }
  }
  throw std::out_of_range("entry not in tableau");
}

std::vector<Partition> chain_from_tableau(const StandardTableau& t) {
  const int k = t.size();
  std::vector<Partition> chain;
  chain.reserve(k + 1);
  chain.emplace_back();
  std::vector<int> row_counts(t.rows().size(), 0);
  for (int m = 1; m <= k; ++m) {
    const auto [row, col] = t.position_of(m);
    (void)col;
    ++row_counts[row - 1];
    Partition shape;
    for (int count : row_counts) {
      if (count == 0) break;
      shape.push_back(count);
    }
    if (!is_partition(shape) || partition_cells(shape) != m) {
      throw std::invalid_argument("tableau chain left Young's lattice");
    }
    chain.push_back(std::move(shape));
  }
  return chain;
}

int insertion_wire(const StandardTableau& t, int m) {
  if (m < 1 || m > t.size()) throw std::out_of_range("tableau entry out of range");
  return t.position_of(m).first;
}

std::pair<int, int> wire_pair(const Permutation& prev, const Permutation& next) {
  const Permutation q = compose(next, prev.inverse());
  int r = 0, s = 0;
  for (int i = 1; i <= q.size(); ++i) {
    if (q(i) == i) continue;
    if (r == 0) r = i;
    else if (s == 0) s = i;
    else throw std::invalid_argument("composition moves more than two points");
  }
  if (s == 0 || q(r) != s || q(s) != r) {
    throw std::invalid_argument("composition is not a transposition");
  }
  return {r, s};
}

StandardTableau row_major_tableau(const Partition& shape) {
  if (!is_partition(shape)) throw std::invalid_argument("not a partition");
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int part : shape) {
    std::vector<int> row(part);
    for (int c = 0; c < part; ++c) row[c] = next++;
    rows.push_back(std::move(row));
  }
  return StandardTableau(std::move(rows));
}

namespace {

void extend_syt(const Partition& shape, std::vector<int>& row_counts, int placed, int cells,
                std::vector<std::vector<int>>& rows, std::vector<StandardTableau>& out) {
  if (placed == cells) {
    out.emplace_back(rows);
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (row_counts[r] >= shape[r]) continue;
    if (r > 0 && row_counts[r] >= row_counts[r - 1]) continue;
    rows[r].push_back(placed + 1);
    ++row_counts[r];
    extend_syt(shape, row_counts, placed + 1, cells, rows, out);
    --row_counts[r];
    rows[r].pop_back();
  }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape, int bound) {
  if (!is_partition(shape)) throw std::invalid_argument("not a partition");
  const int cells = partition_cells(shape);
  if (cells > bound) throw std::invalid_argument("shape exceeds the enumeration bound");
  std::vector<StandardTableau> out;
  if (cells == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> row_counts(shape.size(), 0);
  std::vector<std::vector<int>> rows(shape.size());
  extend_syt(shape, row_counts, 0, cells, rows, out);
  return out;
}

int chain_ambient(const Partition& shape) {
  if (!is_partition(shape)) throw std::invalid_argument("not a partition");
  if (shape.empty()) return 1;
  return shape[0] + static_cast<int>(shape.size());
}

StandardTableau tableau_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("tableau JSON must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("tableau row must be an array");
    rows.push_back(row.get<std::vector<int>>());
  }
  return StandardTableau(std::move(rows));
}

nlohmann::json tableau_to_json(const StandardTableau& t) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : t.rows()) j.push_back(row);
  return j;
}

}  // namespace macword
