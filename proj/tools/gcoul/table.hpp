#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gcoul::cli {

using Cell = std::variant<double, long long, std::string>;

/// Rows of a command's output plus the metadata echoed in the header.
struct Table {
  std::vector<std::pair<std::string, Cell>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// 15 significant digits, shortest of fixed/scientific, "." decimal point,
/// independent of the global locale. Non-finite values print as nan/inf/-inf.
std::string format_number(double v);

/// '#'-prefixed "key: value" metadata lines, a header row and RFC-4180 rows.
std::string render_csv(const Table& t);

/// {"metadata": {...}, "rows": [{column: value, ...}, ...]}; non-finite
/// numbers become null.
std::string render_json(const Table& t);

/// Writes to a temporary sibling and renames it over `path`.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace gcoul::cli
