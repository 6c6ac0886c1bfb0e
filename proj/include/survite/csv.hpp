#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace survite::csv {

// In-memory CSV: header row plus string cells. Parsing is RFC 4180 with the
// usual relaxations (LF or CRLF line ends, final newline optional). Lines
// starting with '#' before the header are treated as metadata comments and
// preserved, matching the format this tool writes.
struct Table {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::size_t> column_index(const std::string& name) const;
};

Table read_file(const std::string& path);
Table parse(const std::string& text);

// One RFC 4180 line; quotes only when a cell needs them.
std::string format_row(const std::vector<std::string>& cells);

std::string format_double(double v);

}  // namespace survite::csv
