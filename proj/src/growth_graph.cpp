#include "macword/growth_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "macword/bump.hpp"
#include "macword/oracle.hpp"

namespace macword {

int RankedMultigraph::vertex_index(int rank, const Word& w) const {
  const auto& words = ranks.at(rank);
  const auto it = std::lower_bound(words.begin(), words.end(), w);
  if (it == words.end() || *it != w) return -1;
  return static_cast<int>(it - words.begin());
}

long long RankedMultigraph::out_multiplicity(int rank, int index) const {
  long long total = 0;
  for (const Edge& e : edges) {
    if (e.rank == rank + 1 && e.source == index) total += e.multiplicity;
  }
  return total;
}

namespace {

using EdgeKey = std::tuple<int, int, int>;  // (rank, source, target)

std::vector<RankedMultigraph::Edge> sorted_edges(const std::map<EdgeKey, long long>& mults) {
  std::vector<RankedMultigraph::Edge> edges;
  edges.reserve(mults.size());
  for (const auto& [key, mult] : mults) {
    edges.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), mult});
  }
  return edges;
}

// Crossing position of the step-m wire pair in a word of rank m.
int step_crossing(const std::vector<Permutation>& perms, int m, const Word& w) {
  const auto pair = wire_pair(perms[m - 1], perms[m]);
  return find_crossing(w, pair, perms[m].size());
}

std::map<EdgeKey, long long> bump_delete_edges(const RankedMultigraph& g,
                                               const std::vector<Permutation>& perms) {
  std::map<EdgeKey, long long> mults;
  for (int m = 1; m < static_cast<int>(g.ranks.size()); ++m) {
    for (int j = 0; j < static_cast<int>(g.ranks[m].size()); ++j) {
      const Word& target = g.ranks[m][j];
      const FormalSum sum = bump_delete(target, step_crossing(perms, m, target));
      for (const auto& [source, mult] : sum.terms) {
        const int i = g.vertex_index(m - 1, source);
        if (i < 0) throw std::logic_error("bump-delete summand is not a vertex of the previous rank");
        mults[{m, i, j}] += mult;
      }
    }
  }
  return mults;
}

}  // namespace

RankedMultigraph build_growth_graph(const StandardTableau& t, int bound) {
  if (t.size() > bound) throw std::invalid_argument("shape exceeds the graph bound");
  RankedMultigraph g;
  g.shape = t.shape();
  g.tableau = t;
  const GrowthChain chain = make_chain(t);
  const std::vector<Permutation> perms = chain_permutations(chain);
  g.ranks.reserve(perms.size());
  for (const Permutation& p : perms) g.ranks.push_back(enumerate_reduced(p));
  g.edges = sorted_edges(bump_delete_edges(g, perms));
  return g;
}

std::vector<std::vector<long long>> path_counts(const RankedMultigraph& g) {
  std::vector<std::vector<long long>> counts;
  counts.reserve(g.ranks.size());
  for (const auto& rank : g.ranks) counts.emplace_back(rank.size(), 0);
  if (!counts.empty()) counts[0].assign(g.ranks[0].size(), 1);
  for (const RankedMultigraph::Edge& e : g.edges) {
    counts[e.rank][e.target] += e.multiplicity * counts[e.rank - 1][e.source];
  }
  return counts;
}

FormalSum bd_x(const Word& shifted_w, int t, int x) {
  if (x < 0) throw std::invalid_argument("negative shift");
  BumpDeleteTrace trace = bump_delete_traced(shifted_w, t);
  FormalSum sum = std::move(trace.sum);
  if (x > 0) sum.add(delete_at(trace.terminal, trace.last_position), x);
  return sum;
}

RankedMultigraph build_growth_graph_x(const StandardTableau& t, int x, int bound) {
  if (x < 0) throw std::invalid_argument("negative shift");
  RankedMultigraph g = build_growth_graph(t, bound);
  g.x = x;
  if (x == 0) return g;

  const GrowthChain chain = make_chain(t);
  const std::vector<Permutation> perms = chain_permutations(chain);

  std::map<EdgeKey, long long> rule;
  for (const RankedMultigraph::Edge& e : g.edges) {
    rule[{e.rank, e.source, e.target}] = e.multiplicity;
  }
  // Top-gap rule: a gap where the insertion wire occupies row 1 contributes
  // x extra parallel edges.
  for (int m = 1; m <= chain.cells; ++m) {
    const int wire = chain.wires[m - 1];
    for (int i = 0; i < static_cast<int>(g.ranks[m - 1].size()); ++i) {
      const Word& source = g.ranks[m - 1][i];
      for (int gap = 1; gap <= m; ++gap) {
        if (wire_row_at_gap(source, wire, gap) != 1) continue;
        const Word target = insert_bump_at(source, wire, gap, chain.ambient);
        const int j = g.vertex_index(m, target);
        if (j < 0) throw std::logic_error("insert-bump result is not a vertex of the next rank");
        rule[{m, i, j}] += x;
      }
    }
  }

  // Ground truth: adjointness of bd_x in the shifted diagram.
  std::map<EdgeKey, long long> direct;
  for (int m = 1; m <= chain.cells; ++m) {
    for (int j = 0; j < static_cast<int>(g.ranks[m].size()); ++j) {
      const Word& target = g.ranks[m][j];
      const FormalSum sum = bd_x(shift_word(target, x), step_crossing(perms, m, target), x);
      for (const auto& [shifted_source, mult] : sum.terms) {
        const Word source = unshift_word(shifted_source, x);
        const int i = g.vertex_index(m - 1, source);
        if (i < 0) throw std::logic_error("bd_x summand is not a vertex of the previous rank");
        direct[{m, i, j}] += mult;
      }
    }
  }
  if (rule != direct) {
    std::ostringstream message;
    message << "top-gap rule disagrees with direct bd_x computation for shape "
            << to_string(g.shape) << ", x = " << x;
    throw std::runtime_error(message.str());
  }
  g.edges = sorted_edges(rule);
  return g;
}

AdjointnessReport adjointness_matrix_check(const StandardTableau& t, int bound) {
  AdjointnessReport report;
  const RankedMultigraph g = build_growth_graph(t, bound);
  const GrowthChain chain = make_chain(t);

  std::map<EdgeKey, long long> bd_matrix;
  for (const RankedMultigraph::Edge& e : g.edges) {
    bd_matrix[{e.rank, e.source, e.target}] = e.multiplicity;
  }
  std::map<EdgeKey, long long> ib_matrix;
  for (int m = 1; m <= chain.cells; ++m) {
    for (int i = 0; i < static_cast<int>(g.ranks[m - 1].size()); ++i) {
      const Word& source = g.ranks[m - 1][i];
      for (int gap = 1; gap <= m; ++gap) {
        const Word target = insert_bump_at(source, chain.wires[m - 1], gap, chain.ambient);
        const int j = g.vertex_index(m, target);
        if (j < 0) throw std::logic_error("insert-bump result is not a vertex of the next rank");
        ib_matrix[{m, i, j}] += 1;
      }
    }
  }

  for (int m = 1; m <= chain.cells; ++m) {
    for (int i = 0; i < static_cast<int>(g.ranks[m - 1].size()); ++i) {
      for (int j = 0; j < static_cast<int>(g.ranks[m].size()); ++j) {
        const auto bd_it = bd_matrix.find({m, i, j});
        const auto ib_it = ib_matrix.find({m, i, j});
        const long long bd = bd_it == bd_matrix.end() ? 0 : bd_it->second;
        const long long ib = ib_it == ib_matrix.end() ? 0 : ib_it->second;
        ++report.entries_checked;
        if (bd != ib) {
          std::ostringstream message;
          message << "step " << m << ": <" << to_text(g.ranks[m - 1][i]) << ", BD("
                  << to_text(g.ranks[m][j]) << ")> = " << bd << " but insert-bump count is " << ib;
          report.violations.push_back(message.str());
          report.pass = false;
        }
      }
    }
  }
  return report;
}

std::string to_dot(const RankedMultigraph& g) {
  const auto counts = path_counts(g);
  std::ostringstream out;
  out << "digraph growth {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box];\n";
  for (int m = 0; m < static_cast<int>(g.ranks.size()); ++m) {
    out << "  { rank=same;";
    for (int i = 0; i < static_cast<int>(g.ranks[m].size()); ++i) {
      const std::string label = g.ranks[m][i].empty() ? "()" : to_text(g.ranks[m][i]);
      out << " v" << m << "_" << i << " [label=\"" << label << "\\npaths " << counts[m][i]
          << "\"];";
    }
    out << " }\n";
  }
  for (const RankedMultigraph::Edge& e : g.edges) {
    out << "  v" << e.rank - 1 << "_" << e.source << " -> v" << e.rank << "_" << e.target
        << " [label=\"" << e.multiplicity << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json graph_to_json(const RankedMultigraph& g) {
  nlohmann::json j;
  j["shape"] = g.shape;
  j["tableau"] = tableau_to_json(g.tableau);
  j["x"] = g.x;
  j["ranks"] = nlohmann::json::array();
  for (const auto& rank : g.ranks) {
    nlohmann::json jr = nlohmann::json::array();
    for (const Word& w : rank) jr.push_back(w);
    j["ranks"].push_back(std::move(jr));
  }
  const auto counts = path_counts(g);
  j["path_counts"] = counts;
  j["edges"] = nlohmann::json::array();
  for (const RankedMultigraph::Edge& e : g.edges) {
    j["edges"].push_back({{"rank", e.rank},
                          {"source", e.source},
                          {"target", e.target},
                          {"multiplicity", e.multiplicity}});
  }
  return j;
}

RankedMultigraph graph_from_json(const nlohmann::json& j) {
  RankedMultigraph g;
  g.shape = j.at("shape").get<Partition>();
  g.tableau = tableau_from_json(j.at("tableau"));
  g.x = j.at("x").get<int>();
  for (const auto& jr : j.at("ranks")) {
    std::vector<Word> rank;
    for (const auto& jw : jr) rank.push_back(jw.get<Word>());
    g.ranks.push_back(std::move(rank));
  }
  for (const auto& je : j.at("edges")) {
    RankedMultigraph::Edge e;
    e.rank = je.at("rank").get<int>();
    e.source = je.at("source").get<int>();
    e.target = je.at("target").get<int>();
    e.multiplicity = je.at("multiplicity").get<long long>();
    if (e.rank < 1 || e.rank >= static_cast<int>(g.ranks.size()) ||
        e.source < 0 || e.source >= static_cast<int>(g.ranks[e.rank - 1].size()) ||
        e.target < 0 || e.target >= static_cast<int>(g.ranks[e.rank].size())) {
      throw std::invalid_argument("graph edge references a missing vertex");
    }
    g.edges.push_back(e);
  }
  return g;
}

}  // namespace macword
