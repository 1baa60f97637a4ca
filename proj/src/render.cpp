#include "macword/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace macword {

namespace {

int effective_ambient(const Word& w, int n) {
  const int needed = min_ambient(w);
  if (n == 0) return needed;
  if (n < needed) throw std::invalid_argument("ambient size too small for word");
  return n;
}

}  // namespace

Permutation partial_permutation(const Word& w, int t, int n) {
  if (t < 0 || t > static_cast<int>(w.size())) throw std::out_of_range("prefix length out of range");
  const int amb = effective_ambient(w, n);
  const std::vector<int> occ = row_occupancy(w, amb, t);
  if (occ[0] != 0) throw std::invalid_argument("word prefix moves the zeroth wire");
  return Permutation(std::vector<int>(occ.begin() + 1, occ.end()));
}

std::vector<int> trajectory(const Word& w, int wire, int n) {
  const int amb = effective_ambient(w, n);
  if (wire < 0 || wire > amb) throw std::invalid_argument("wire label out of ambient");
  std::vector<int> rows;
  rows.reserve(w.size() + 1);
  int row = wire;
  rows.push_back(row);
  for (int h : w) {
    if (row == h) row = h + 1;
    else if (row == h + 1) row = h;
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::vector<long long>> crossing_histogram(const Word& w, int pos_bins,
                                                       int height_bins, int n) {
  if (pos_bins < 1 || height_bins < 1) throw std::invalid_argument("bins must be positive");
  const int amb = effective_ambient(w, n);
  const int k = static_cast<int>(w.size());
  const int height_range = std::max(1, amb - 1);
  std::vector<std::vector<long long>> counts(pos_bins, std::vector<long long>(height_bins, 0));
  for (int t = 1; t <= k; ++t) {
    const int pb = std::min(pos_bins - 1, (t - 1) * pos_bins / std::max(1, k));
    const int clamped = std::clamp(w[t - 1], 1, height_range);
    const int hb = std::min(height_bins - 1, (clamped - 1) * height_bins / height_range);
    ++counts[pb][hb];
  }
  return counts;
}

std::string crossings_csv(const Word& w) {
  std::ostringstream out;
  out << "position,height\n";
  for (std::size_t t = 0; t < w.size(); ++t) {
    out << (t + 1) << ',' << w[t] << '\n';
  }
  return out.str();
}

namespace {

std::set<int> selected_wires(const std::vector<int>& wires, int amb) {
  std::set<int> selected;
  if (wires.empty()) {
    for (int r = 1; r <= amb; ++r) selected.insert(r);
    return selected;
  }
  for (int wire : wires) {
    if (wire < 1 || wire > amb) throw std::invalid_argument("selected wire out of ambient");
    selected.insert(wire);
  }
  return selected;
}

}  // namespace

std::string render_wiring_ascii(const Word& w, const std::vector<int>& wires, int n) {
  const int amb = effective_ambient(w, n);
  if (amb > 40) throw std::invalid_argument("ascii rendering is capped at 40 wires");
  const std::set<int> selected = selected_wires(wires, amb);
  const int k = static_cast<int>(w.size());

  // One text line per row; a crossing at height h renders the top half of an
  // X on row h and the bottom half on row h+1.
  std::vector<std::string> lines(amb + 1);
  for (int r = 1; r <= amb; ++r) {
    std::ostringstream prefix;
    prefix.width(3);
    prefix << r;
    lines[r] = prefix.str() + " ";
  }
  std::vector<int> occ(amb + 1);
  for (int r = 0; r <= amb; ++r) occ[r] = r;
  for (int t = 0; t < k; ++t) {
    const int h = w[t];
    if (h < 1 || h + 1 > amb) throw std::invalid_argument("word heights out of ambient");
    const bool upper_shown = selected.count(occ[h]) > 0;
    const bool lower_shown = selected.count(occ[h + 1]) > 0;
    for (int r = 1; r <= amb; ++r) {
      if (r == h && (upper_shown || lower_shown)) lines[r] += "\\/";
      else if (r == h + 1 && (upper_shown || lower_shown)) lines[r] += "/\\";
      else if (selected.count(occ[r]) > 0) lines[r] += "--";
      else lines[r] += "  ";
    }
    std::swap(occ[h], occ[h + 1]);
  }
  std::ostringstream out;
  for (int r = 1; r <= amb; ++r) out << lines[r] << '\n';
  return out.str();
}

std::string render_wiring_svg(const Word& w, const std::vector<int>& wires, int n) {
  const int amb = effective_ambient(w, n);
  const std::set<int> selected = selected_wires(wires, amb);
  const int k = static_cast<int>(w.size());
  const int unit = 10;
  const int width = (k + 2) * unit;
  const int height = (amb + 1) * unit;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << height
      << "\" width=\"" << width << "\" height=\"" << height << "\">\n";
  for (int wire : selected) {
    out << "<polyline fill=\"none\" stroke=\"red\" stroke-width=\"1\" points=\"";
    const std::vector<int> rows = trajectory(w, wire, amb);
    for (int t = 0; t <= k; ++t) {
      if (t > 0) out << ' ';
      out << (t + 1) * unit << ',' << rows[t] * unit;
    }
    out << "\"/>\n";
  }
  for (int t = 1; t <= k; ++t) {
    // Dot at the midpoint of the crossing.
    const int cx = t * unit + unit / 2;
    const int cy = w[t - 1] * unit + unit / 2;
    out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"1\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_matrix_scatter_svg(const Permutation& p) {
  const int n = p.size();
  const int unit = 10;
  const int side = (n + 1) * unit;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << side << ' ' << side
      << "\" width=\"" << side << "\" height=\"" << side << "\">\n";
  for (int i = 1; i <= n; ++i) {
    out << "<circle cx=\"" << i * unit << "\" cy=\"" << p(i) * unit << "\" r=\"2\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_matrix_scatter_csv(const Permutation& p) {
  std::ostringstream out;
  out << "row,col\n";
  for (int i = 1; i <= p.size(); ++i) out << p(i) << ',' << i << '\n';
  return out.str();
}

}  // namespace macword
