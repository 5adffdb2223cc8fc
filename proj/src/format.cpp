#include "purebetti/format.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace purebetti {

std::string render_betti_diagram(const BettiTable& t) {
  if (t.empty()) return "(empty table)\n";
  const int columns = t.pdim() + 1;
  int row_lo = t.entries().begin()->first.second - t.entries().begin()->first.first;
  int row_hi = row_lo;
  for (const auto& [key, value] : t.entries()) {
    row_lo = std::min(row_lo, key.second - key.first);
    row_hi = std::max(row_hi, key.second - key.first);
  }

  std::vector<std::string> labels = {"", "total:"};
  for (int r = row_lo; r <= row_hi; ++r) labels.push_back(std::to_string(r) + ":");

  // cells[row][col], row 0 = header, row 1 = totals
  std::vector<std::vector<std::string>> cells(labels.size(), std::vector<std::string>(static_cast<std::size_t>(columns)));
  for (int i = 0; i < columns; ++i) {
    const auto col = static_cast<std::size_t>(i);
    cells[0][col] = std::to_string(i);
    cells[1][col] = t.column_total(i).to_string();
    for (int r = row_lo; r <= row_hi; ++r) {
      const Rational v = t.at(i, i + r);
      cells[static_cast<std::size_t>(r - row_lo + 2)][col] = v.is_zero() ? "-" : v.to_string();
    }
  }

  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> widths(static_cast<std::size_t>(columns), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());

  std::ostringstream os;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    os << std::string(label_width - labels[r].size(), ' ') << labels[r];
    for (std::size_t c = 0; c < cells[r].size(); ++c)
      os << ' ' << std::string(widths[c] - cells[r][c].size(), ' ') << cells[r][c];
    os << '\n';
  }
  return os.str();
}

}  // namespace purebetti
