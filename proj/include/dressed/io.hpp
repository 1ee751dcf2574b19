#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

// Deterministic, locale-independent serialization for the CLI artifacts:
// CSV with '#'-prefixed metadata lines, plus a JSON mirror of the same
// content. Floats are formatted with up to 12 significant digits via
// std::to_chars, so identical inputs give byte-identical files.

namespace dressed::io {

std::string format_double(double x);

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::pair<std::string, std::string>> metadata;  // echoed inputs
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_meta(const std::string& key, const std::string& value);
  void add_meta(const std::string& key, double value);
  void add_meta(const std::string& key, std::int64_t value);
};

std::string to_csv(const Table& table);
std::string to_json(const Table& table);

// Writes the whole payload, throwing std::ios_base::failure on any error.
void write_file(const std::string& path, const std::string& payload);

}  // namespace dressed::io
