#include "bridgelab/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "bridgelab/errors.hpp"

namespace bridgelab {

std::string format_double(double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw InvalidArgument("cannot format double");
  return {buf, end};
}

namespace {

void write_row(std::ostream& out, std::span<const double> row) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j > 0) out << ',';
    out << format_double(row[j]);
  }
  out << "\r\n";
}

std::vector<double> parse_row(const std::string& line) {
  std::vector<double> row;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string::npos) comma = line.size();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + comma, v);
    if (ec != std::errc() || ptr != line.data() + comma)
      throw InvalidArgument("malformed CSV field: '" + line.substr(pos, comma - pos) + "'");
    row.push_back(v);
    pos = comma + 1;
  }
  return row;
}

}  // namespace

void write_ensemble_csv(std::ostream& out, const PathEnsemble& ens) {
  write_row(out, ens.grid());
  for (std::size_t r = 0; r < ens.replicates(); ++r) write_row(out, ens.row(r));
}

PathEnsemble read_ensemble_csv(std::istream& in) {
  std::string line;
  std::vector<double> grid;
  std::vector<double> values;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto row = parse_row(line);
    if (grid.empty()) {
      grid = std::move(row);
      continue;
    }
    if (row.size() != grid.size()) throw InvalidArgument("CSV row width differs from header");
    values.insert(values.end(), row.begin(), row.end());
    ++rows;
  }
  return {std::move(grid), rows, std::move(values)};
}

}  // namespace bridgelab
