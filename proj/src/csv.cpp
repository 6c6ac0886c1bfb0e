#include "survite/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "survite/common.hpp"

namespace survite::csv {

std::optional<std::size_t> Table::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::nullopt;
}

Table read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Table parse(const std::string& text) {
  Table table;
  std::vector<std::string> record;
  std::string cell;
  bool in_quotes = false;
  bool record_has_data = false;
  std::size_t line = 1;

  auto end_cell = [&] {
    record.push_back(std::move(cell));
    cell.clear();
  };
  auto end_record = [&] {
    end_cell();
    if (table.header.empty()) {
      if (record.size() == 1 && !record[0].empty() && record[0][0] == '#') {
        table.comments.push_back(std::move(record[0]));
      } else {
        table.header = std::move(record);
      }
    } else {
      table.rows.push_back(std::move(record));
    }
    record.clear();
    record_has_data = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        cell.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!cell.empty()) {
          throw InputError("csv: stray quote at line " + std::to_string(line));
        }
        in_quotes = true;
        record_has_data = true;
        break;
      case ',':
        end_cell();
        record_has_data = true;
        break;
      case '\r':
        break;
      case '\n':
        if (record_has_data || !cell.empty() || !record.empty()) end_record();
        ++line;
        break;
      default:
        cell.push_back(c);
        record_has_data = true;
        break;
    }
  }
  if (in_quotes) {
    throw InputError("csv: unterminated quoted cell at end of input");
  }
  if (record_has_data || !cell.empty() || !record.empty()) end_record();

  if (table.header.empty()) {
    throw InputError("csv: no header row found");
  }
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (table.rows[r].size() != table.header.size()) {
      throw InputError("csv: row " + std::to_string(r + 2) + " has " +
                       std::to_string(table.rows[r].size()) +
                       " cells, header has " +
                       std::to_string(table.header.size()));
    }
  }
  return table;
}

std::string format_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out.push_back(',');
    const std::string& c = cells[i];
    const bool quote = c.find_first_of(",\"\n\r") != std::string::npos;
    if (!quote) {
      out += c;
    } else {
      out.push_back('"');
      for (char ch : c) {
        if (ch == '"') out.push_back('"');
        out.push_back(ch);
      }
      out.push_back('"');
    }
  }
  return out;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace survite::csv
