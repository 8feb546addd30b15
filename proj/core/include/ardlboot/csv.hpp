#pragma once

// RFC-4180 style CSV ingestion and full-precision export.

#include "ardlboot/error.hpp"
#include "ardlboot/frame.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace ardlboot {

/// Error tied to a data cell. Rows count data lines from 1 (header excluded),
/// columns from 0.
class CellError : public Error {
 public:
  CellError(Errc code, std::size_t row, std::size_t column, const std::string& what);
  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable parse_csv(std::istream& in);
CsvTable read_csv(const std::filesystem::path& path);

/// One named column as numbers, optionally log-transformed.
Eigen::VectorXd numeric_column(const CsvTable& table, const std::string& name, bool log_transform);

/// Builds a frame with `dependent` first followed by `columns` (or every other
/// column, in file order, when `columns` is empty).
TimeSeriesFrame frame_from_table(const CsvTable& table, const std::string& dependent,
                                 const std::vector<std::string>& columns, bool log_transform);
TimeSeriesFrame load_csv(const std::filesystem::path& path, const std::string& dependent,
                         const std::vector<std::string>& columns = {}, bool log_transform = false);

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double v);
std::string csv_escape(const std::string& field);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const Eigen::MatrixXd& values);

}  // namespace ardlboot
