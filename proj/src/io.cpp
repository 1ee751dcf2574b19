#include "dressed/io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace dressed::io {

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x,
                                 std::chars_format::general, 12);
  if (res.ec != std::errc())
    throw std::runtime_error("float formatting failed");
  return std::string(buf, res.ptr);
}

void Table::add_meta(const std::string& key, const std::string& value) {
  metadata.emplace_back(key, value);
}

void Table::add_meta(const std::string& key, double value) {
  metadata.emplace_back(key, format_double(value));
}

void Table::add_meta(const std::string& key, std::int64_t value) {
  metadata.emplace_back(key, std::to_string(value));
}

namespace {

std::string cell_text(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (const auto& [key, value] : table.metadata)
    out += "# " + key + "=" + value + "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw std::invalid_argument("row width does not match the header");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += cell_text(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::ordered_json doc;
  doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.metadata) doc["metadata"][key] = value;
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
    for (const Cell& cell : row) {
      // floats carried as their 12-digit strings keeps the two formats
      // byte-consistent; integers and labels stay native
      if (const auto* d = std::get_if<double>(&cell))
        jrow.push_back(format_double(*d));
      else if (const auto* i = std::get_if<std::int64_t>(&cell))
        jrow.push_back(*i);
      else
        jrow.push_back(std::get<std::string>(cell));
    }
    doc["rows"].push_back(std::move(jrow));
  }
  return doc.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& payload) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::ios_base::failure("cannot open output file: " + path);
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  out.flush();
  if (!out) throw std::ios_base::failure("failed writing output file: " + path);
}

}  // namespace dressed::io
