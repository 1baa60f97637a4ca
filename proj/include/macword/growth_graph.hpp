#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "macword/formal_sum.hpp"
#include "macword/sampler.hpp"
#include "macword/tableau.hpp"
#include "macword/word.hpp"

namespace macword {

/// Ranked directed multigraph of the growth process: rank m holds the
/// reduced words of the m-th chain permutation, and the edge multiplicity
/// from a word at rank m-1 to one at rank m is the bump-delete inner
/// product.  Vertices are sorted lexicographically within each rank; edges
/// are sorted by (rank, source, target).
struct RankedMultigraph {
  Partition shape;
  StandardTableau tableau;
  int x = 0;

  std::vector<std::vector<Word>> ranks;

  struct Edge {
    int rank = 0;    // target rank m; source lives at rank m-1
    int source = 0;  // index within rank m-1
    int target = 0;  // index within rank m
    long long multiplicity = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
  };
  std::vector<Edge> edges;

  int vertex_index(int rank, const Word& w) const;  // -1 when absent
  /// Total multiplicity leaving vertex `index` of `rank`.
  long long out_multiplicity(int rank, int index) const;
};

/// Desk-scale materialization; throws above `bound` cells.
RankedMultigraph build_growth_graph(const StandardTableau& t, int bound = 8);

/// Per-rank, per-vertex count of directed paths from the empty word, with
/// edge multiplicities.
std::vector<std::vector<long long>> path_counts(const RankedMultigraph& g);

/// Bump-delete on an x-shifted word plus x copies of the terminal word with
/// its fully pushed crossing deleted.  x = 0 is plain bump_delete.
FormalSum bd_x(const Word& shifted_w, int t, int x);

/// The x-shifted graph: same support as the plain graph, with the edge
/// produced by inserting at a gap where the insertion wire occupies row 1
/// incremented by x.  The result is checked edge-by-edge against direct bd_x
/// computation; any mismatch throws.
RankedMultigraph build_growth_graph_x(const StandardTableau& t, int x, int bound = 8);

struct AdjointnessReport {
  bool pass = true;
  long long entries_checked = 0;
  std::vector<std::string> violations;
};

/// Verify that the bump-delete incidence matrix of every step equals the
/// transpose of the insert-bump gap-count matrix.
AdjointnessReport adjointness_matrix_check(const StandardTableau& t, int bound = 8);

std::string to_dot(const RankedMultigraph& g);
nlohmann::json graph_to_json(const RankedMultigraph& g);
RankedMultigraph graph_from_json(const nlohmann::json& j);

}  // namespace macword
