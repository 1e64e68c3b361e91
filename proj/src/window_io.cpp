#include "sltiles/window_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sltiles {

std::string window_to_json(const Window& w) {
  nlohmann::json j;
  if (w.k()) j["k"] = *w.k();
  j["origin"] = {w.origin().i, w.origin().j};
  j["rows"] = w.rows();
  j["cols"] = w.cols();
  auto rows = nlohmann::json::array();
  for (long i = w.origin().i; i < w.origin().i + static_cast<long>(w.rows()); ++i) {
    auto row = nlohmann::json::array();
    for (long c = w.origin().j; c < w.origin().j + static_cast<long>(w.cols()); ++c)
      row.push_back(to_string(w.entry(i, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump(2) + "\n";
}

Window window_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Point origin{j.at("origin").at(0).get<long>(), j.at("origin").at(1).get<long>()};
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  Window w(origin, rows, cols);
  if (j.contains("k") && !j["k"].is_null()) w.set_k(j["k"].get<int>());
  const auto& entries = j.at("entries");
  if (entries.size() != rows) throw std::invalid_argument("entry row count mismatch");
  for (std::size_t a = 0; a < rows; ++a) {
    if (entries[a].size() != cols) throw std::invalid_argument("entry column count mismatch");
    for (std::size_t b = 0; b < cols; ++b)
      w.entry(origin.i + static_cast<long>(a), origin.j + static_cast<long>(b)) =
          entries[a][b].is_string() ? parse_scalar(entries[a][b].get<std::string>())
                                    : Scalar(entries[a][b].get<long>());
  }
  return w;
}

std::string window_to_csv(const Window& w) {
  std::ostringstream out;
  out << "# origin " << w.origin().i << " " << w.origin().j << "\n";
  for (long i = w.origin().i; i < w.origin().i + static_cast<long>(w.rows()); ++i) {
    for (long c = w.origin().j; c < w.origin().j + static_cast<long>(w.cols()); ++c) {
      if (c != w.origin().j) out << ",";
      out << to_string(w.entry(i, c));
    }
    out << "\n";
  }
  return out.str();
}

Window window_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Point origin{0, 0};
  std::vector<std::vector<Scalar>> grid;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream h(line.substr(1));
      std::string word;
      h >> word;
      if (word == "origin") h >> origin.i >> origin.j;
      continue;
    }
    std::vector<Scalar> row;
    std::stringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_scalar(cell));
    if (!grid.empty() && row.size() != grid.front().size())
      throw std::invalid_argument("ragged CSV grid");
    grid.push_back(std::move(row));
  }
  if (grid.empty()) throw std::invalid_argument("empty CSV window");
  Window w(origin, grid.size(), grid.front().size());
  for (std::size_t a = 0; a < grid.size(); ++a)
    for (std::size_t b = 0; b < grid[a].size(); ++b)
      w.entry(origin.i + static_cast<long>(a), origin.j + static_cast<long>(b)) = grid[a][b];
  return w;
}

std::string window_to_text(const Window& w) {
  std::vector<std::size_t> widths(w.cols(), 0);
  std::vector<std::vector<std::string>> cells(w.rows(), std::vector<std::string>(w.cols()));
  for (std::size_t a = 0; a < w.rows(); ++a)
    for (std::size_t b = 0; b < w.cols(); ++b) {
      cells[a][b] = to_string(w.entry(w.origin().i + static_cast<long>(a),
                                      w.origin().j + static_cast<long>(b)));
      widths[b] = std::max(widths[b], cells[a][b].size());
    }
  std::ostringstream out;
  for (std::size_t a = 0; a < w.rows(); ++a) {
    for (std::size_t b = 0; b < w.cols(); ++b) {
      if (b) out << " ";
      out << std::string(widths[b] - cells[a][b].size(), ' ') << cells[a][b];
    }
    out << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string window_to_format(const Window& w, const std::string& format) {
  if (format == "json") return window_to_json(w);
  if (format == "csv") return window_to_csv(w);
  if (format == "text") return window_to_text(w);
  throw std::invalid_argument("unknown format '" + format + "'");
}

Window window_from_file(const std::string& path) {
  std::string text = read_file(path);
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return window_from_json(text);
  return window_from_csv(text);
}

}  // namespace sltiles
