#include "ardlboot/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ardlboot {

CellError::CellError(Errc code, std::size_t row, std::size_t column, const std::string& what)
    : Error(code, what + " at row " + std::to_string(row) + ", column " + std::to_string(column)),
      row_(row),
      column_(column) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool blank(const std::vector<std::string>& record) {
  return record.size() == 1 && trim(record[0]).empty();
}

}  // namespace

CsvTable parse_csv(std::istream& in) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool any = false;
  char ch;
  while (in.get(ch)) {
    any = true;
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    switch (ch) {
      case '"': quoted = true; break;
      case ',':
        record.push_back(std::move(field));
        field.clear();
        break;
      case '\r': break;
      case '\n':
        record.push_back(std::move(field));
        field.clear();
        if (!blank(record)) records.push_back(std::move(record));
        record.clear();
        break;
      default: field += ch;
    }
  }
  if (quoted) throw Error(Errc::Io, "unterminated quoted field");
  if (any && (!field.empty() || !record.empty())) {
    record.push_back(std::move(field));
    if (!blank(record)) records.push_back(std::move(record));
  }
  if (records.empty()) throw Error(Errc::Io, "missing header row");

  CsvTable table;
  table.header = std::move(records.front());
  if (!table.header.empty() && table.header[0].rfind("\xEF\xBB\xBF", 0) == 0) {
    table.header[0].erase(0, 3);
  }
  for (auto& h : table.header) h = std::string(trim(h));
  table.rows.assign(std::make_move_iterator(records.begin() + 1),
                    std::make_move_iterator(records.end()));
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  return parse_csv(in);
}

Eigen::VectorXd numeric_column(const CsvTable& table, const std::string& name,
                               bool log_transform) {
  std::size_t col = 0;
  while (col < table.header.size() && table.header[col] != name) ++col;
  if (col == table.header.size()) {
    throw Error(Errc::MissingColumn, "column '" + name + "' not in header");
  }

  Eigen::VectorXd out(static_cast<Eigen::Index>(table.rows.size()));
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& rec = table.rows[r];
    const std::size_t row = r + 1;
    const std::string_view cell = col < rec.size() ? trim(rec[col]) : std::string_view{};
    if (cell.empty()) throw CellError(Errc::MissingValue, row, col, "missing value");
    double v = 0.0;
    const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc{} || end != cell.data() + cell.size() || !std::isfinite(v)) {
      throw CellError(Errc::NonNumericCell, row, col,
                      "non-numeric cell '" + std::string(cell) + "'");
    }
    if (log_transform) {
      if (!(v > 0.0)) throw CellError(Errc::NonPositiveForLog, row, col, "log of non-positive value");
      v = std::log(v);
    }
    out(static_cast<Eigen::Index>(r)) = v;
  }
  return out;
}

TimeSeriesFrame frame_from_table(const CsvTable& table, const std::string& dependent,
                                 const std::vector<std::string>& columns, bool log_transform) {
  std::vector<std::string> names{dependent};
  if (columns.empty()) {
    for (const auto& h : table.header) {
      if (h != dependent) names.push_back(h);
    }
  } else {
    names.insert(names.end(), columns.begin(), columns.end());
  }

  Eigen::MatrixXd values(static_cast<Eigen::Index>(table.rows.size()),
                         static_cast<Eigen::Index>(names.size()));
  for (std::size_t j = 0; j < names.size(); ++j) {
    values.col(static_cast<Eigen::Index>(j)) = numeric_column(table, names[j], log_transform);
  }
  return TimeSeriesFrame(std::move(values), std::move(names), 0);
}

TimeSeriesFrame load_csv(const std::filesystem::path& path, const std::string& dependent,
                         const std::vector<std::string>& columns, bool log_transform) {
  return frame_from_table(read_csv(path), dependent, columns, log_transform);
}

std::string format_double(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_escape(fields[i]);
  }
  out << '\n';
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const Eigen::MatrixXd& values) {
  if (static_cast<Eigen::Index>(header.size()) != values.cols()) {
    throw Error(Errc::DimensionMismatch, "header does not match column count");
  }
  write_csv_row(out, header);
  std::vector<std::string> fields(header.size());
  for (Eigen::Index r = 0; r < values.rows(); ++r) {
    for (Eigen::Index c = 0; c < values.cols(); ++c) fields[static_cast<std::size_t>(c)] = format_double(values(r, c));
    write_csv_row(out, fields);
  }
}

}  // namespace ardlboot
