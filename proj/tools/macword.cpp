// macword: sample Macdonald-distributed reduced words, verify the weighted
// counting identities at desk scale, and export growth graphs.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "macword/growth_graph.hpp"
#include "macword/oracle.hpp"
#include "macword/partition.hpp"
#include "macword/render.hpp"
#include "macword/sampler.hpp"
#include "macword/tableau.hpp"

namespace {

using namespace macword;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open " + path);
  out << content;
}

StandardTableau load_tableau(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return tableau_from_json(j);
}

struct ShapeOptions {
  std::string shape_text;
  int reverse_n = 0;
  std::string tableau_file;

  StandardTableau tableau() const {
    if (!tableau_file.empty()) {
      const StandardTableau t = load_tableau(tableau_file);
      if (!shape_text.empty() && parse_partition(shape_text) != t.shape()) {
        throw std::invalid_argument("--shape disagrees with the tableau file");
      }
      return t;
    }
    Partition shape;
    if (reverse_n > 0) shape = staircase(reverse_n);
    else if (!shape_text.empty()) shape = parse_partition(shape_text);
    else throw std::invalid_argument("one of --shape, --reverse or --tableau is required");
    return row_major_tableau(shape);
  }
};

void add_shape_options(CLI::App* cmd, ShapeOptions& opts, bool with_reverse) {
  cmd->add_option("--shape", opts.shape_text, "partition as comma-separated parts, e.g. 2,2,1");
  if (with_reverse) {
    cmd->add_option("--reverse", opts.reverse_n,
                    "staircase shape of the reverse permutation in S_N");
  }
  cmd->add_option("--tableau", opts.tableau_file,
                  "standard tableau as a JSON array of rows, e.g. [[1,3],[2,5],[4]]");
}

std::vector<int> parse_wire_list(const std::string& text) {
  std::vector<int> wires;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) wires.push_back(std::stoi(item));
  }
  return wires;
}

int run_sample(const ShapeOptions& shape_opts, std::optional<std::uint64_t> seed,
               const std::string& out_format, bool validate, const std::string& path_dump,
               const std::string& wiring_svg, const std::string& wiring_ascii,
               const std::string& wire_list, const std::string& scatter_svg,
               const std::string& scatter_csv, const std::string& crossings_file) {
  const StandardTableau t = shape_opts.tableau();
  const GrowthChain chain = make_chain(t);

  std::uint64_t seed_value;
  if (seed.has_value()) {
    seed_value = *seed;
  } else {
    seed_value = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^
                 std::random_device{}();
    std::cerr << "seed: " << seed_value << "\n";
  }

  Word w;
  if (path_dump.empty()) {
    w = sample(chain, seed_value, validate ? StepValidation::full : StepValidation::none);
  } else {
    if (chain.cells > 1000) {
      throw std::invalid_argument("path dumps are limited to shapes with at most 1000 cells");
    }
    Rng rng(seed_value);
    std::vector<int> seq;
    for (int m = 1; m <= chain.cells; ++m) seq.push_back(rng.uniform_1_to(m));
    const GrowthPath path = grow(chain, seq);
    w = path.words.back();
    nlohmann::json jp = nlohmann::json::array();
    for (const Word& word : path.words) jp.push_back(word);
    write_file(path_dump, jp.dump(2) + "\n");
  }
  if (validate && !is_reduced(w, chain.ambient)) {
    throw std::runtime_error("sampled word failed the reducedness check");
  }

  if (out_format == "json") {
    std::cout << nlohmann::json(w).dump() << "\n";
  } else {
    std::cout << to_text(w) << "\n";
  }

  const std::vector<int> wires = wire_list.empty() ? std::vector<int>{} : parse_wire_list(wire_list);
  if (!wiring_svg.empty()) write_file(wiring_svg, render_wiring_svg(w, wires));
  if (!wiring_ascii.empty()) write_file(wiring_ascii, render_wiring_ascii(w, wires));
  if (!scatter_svg.empty() || !scatter_csv.empty()) {
    const Permutation halfway = partial_permutation(w, static_cast<int>(w.size()) / 2);
    if (!scatter_svg.empty()) write_file(scatter_svg, render_matrix_scatter_svg(halfway));
    if (!scatter_csv.empty()) write_file(scatter_csv, render_matrix_scatter_csv(halfway));
  }
  if (!crossings_file.empty()) write_file(crossings_file, crossings_csv(w));
  return 0;
}

int run_verify(bool macdonald, int fk_x, int max_cells) {
  bool all_pass = true;
  for (int cells = 1; cells <= max_cells; ++cells) {
    for (const Partition& shape : partitions_with_cells(cells)) {
      const VerifyReport report = macdonald ? verify_macdonald(shape) : verify_fk(shape, fk_x);
      std::cout << report_to_json(report).dump() << "\n";
      all_pass = all_pass && report.pass;
    }
  }
  return all_pass ? 0 : 1;
}

int run_graph(const ShapeOptions& shape_opts, int x, const std::string& format,
              const std::string& out_file) {
  const StandardTableau t = shape_opts.tableau();
  const RankedMultigraph g = x == 0 ? build_growth_graph(t) : build_growth_graph_x(t, x);
  std::string content;
  if (format == "json") {
    content = graph_to_json(g).dump(2) + "\n";
  } else if (format == "dot") {
    content = to_dot(g);
  } else {
    throw std::invalid_argument("unknown graph format: " + format);
  }
  if (out_file.empty()) std::cout << content;
  else write_file(out_file, content);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Macdonald-distributed reduced words: growth sampling, identity checks, graphs"};
  app.require_subcommand(1);

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "draw a reduced word from the growth process");
  ShapeOptions sample_shape;
  add_shape_options(sample_cmd, sample_shape, true);
  std::optional<std::uint64_t> seed;
  sample_cmd->add_option("--seed", seed, "64-bit seed; chosen and echoed when omitted");
  std::string out_format = "text";
  sample_cmd->add_option("--out", out_format, "stdout format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
  bool validate = false;
  sample_cmd->add_flag("--validate", validate, "re-check reducedness at every growth step");
  std::string path_dump, wiring_svg, wiring_ascii, wire_list, scatter_svg, scatter_csv,
      crossings_file;
  sample_cmd->add_option("--dump-path", path_dump, "write the visited words as a JSON list");
  sample_cmd->add_option("--wiring-svg", wiring_svg, "write an SVG wiring diagram");
  sample_cmd->add_option("--wiring-ascii", wiring_ascii, "write a text wiring diagram (n <= 40)");
  sample_cmd->add_option("--wires", wire_list, "wires to draw, e.g. 1,100,200 (default: all)");
  sample_cmd->add_option("--scatter-svg", scatter_svg,
                         "write the halfway partial-permutation matrix as SVG dots");
  sample_cmd->add_option("--scatter-csv", scatter_csv,
                         "write the halfway partial-permutation matrix as row,col records");
  sample_cmd->add_option("--crossings-csv", crossings_file,
                         "write position,height records, one per crossing");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check the weighted counting identities");
  bool macdonald = false;
  int fk_x = -1;
  int max_cells = 6;
  verify_cmd->add_flag("--macdonald", macdonald, "check the k! identity");
  verify_cmd->add_option("--fk", fk_x, "check the shifted identity at this x");
  verify_cmd->add_option("--max-cells", max_cells, "largest cell count to sweep");

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "export the growth graph");
  ShapeOptions graph_shape;
  add_shape_options(graph_cmd, graph_shape, false);
  int graph_x = 0;
  graph_cmd->add_option("--x", graph_x, "shift parameter (default 0)");
  std::string graph_format = "dot";
  graph_cmd->add_option("--format", graph_format, "dot | json")
      ->check(CLI::IsMember({"dot", "json"}));
  std::string graph_out;
  graph_cmd->add_option("--out", graph_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sample_cmd->parsed()) {
      return run_sample(sample_shape, seed, out_format, validate, path_dump, wiring_svg,
                        wiring_ascii, wire_list, scatter_svg, scatter_csv, crossings_file);
    }
    if (verify_cmd->parsed()) {
      if (macdonald == (fk_x >= 0)) {
        throw std::invalid_argument("pass exactly one of --macdonald or --fk X");
      }
      if (max_cells > 10) throw std::invalid_argument("--max-cells is limited to 10");
      return run_verify(macdonald, fk_x, max_cells);
    }
    if (graph_cmd->parsed()) {
      return run_graph(graph_shape, graph_x, graph_format, graph_out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
