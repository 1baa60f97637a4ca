#pragma once

#include <utility>
#include <vector>

#include <json.hpp>

#include "macword/partition.hpp"
#include "macword/permutation.hpp"

namespace macword {

/// Standard Young tableau: the cells of a partition filled by 1..k, rows and
/// columns strictly increasing.
class StandardTableau {
 public:
  StandardTableau() = default;
  explicit StandardTableau(std::vector<std::vector<int>> rows);
  StandardTableau(std::initializer_list<std::vector<int>> rows)
      : StandardTableau(std::vector<std::vector<int>>(rows)) {}

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  /// (row, column) of entry m, 1-based.
  std::pair<int, int> position_of(int m) const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Shapes of the subtableaux with entries <= m, for m = 0..k.
std::vector<Partition> chain_from_tableau(const StandardTableau& t);

/// Row of entry m: the wire on which the m-th crossing is inserted.
int insertion_wire(const StandardTableau& t, int m);

/// The wire labels {r < s} such that next o prev^{-1} is the transposition
/// (r s).  Throws when the composition is not a transposition.
std::pair<int, int> wire_pair(const Permutation& prev, const Permutation& next);

/// Cells filled left-to-right, top-to-bottom with 1..k.
StandardTableau row_major_tableau(const Partition& shape);

/// All standard tableaux of the given shape.
std::vector<StandardTableau> enumerate_syt(const Partition& shape, int bound = 12);

/// Ambient size shared by every permutation of a chain over `shape`:
/// shape_1 + number of rows.
int chain_ambient(const Partition& shape);

StandardTableau tableau_from_json(const nlohmann::json& j);
nlohmann::json tableau_to_json(const StandardTableau& t);

}  // namespace macword
