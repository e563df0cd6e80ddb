#include "qg/csv.hpp"

#include <cstdio>
#include <sstream>

namespace qg {

std::string g17(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string encode_support(const SupportSet& set) {
  std::ostringstream out;
  bool first = true;
  for (int j : set) {
    if (!first) out << ' ';
    out << j;
    first = false;
  }
  return out.str();
}

SupportSet decode_support(const std::string& text, int dim) {
  std::istringstream in(text);
  std::vector<int> indices;
  int value;
  while (in >> value) indices.push_back(value);
  return SupportSet::from_indices(std::move(indices), dim);
}

std::string encode_vector(const CoeffVec& v) {
  std::ostringstream out;
  for (int j = 0; j < v.size(); ++j) {
    if (j) out << ' ';
    out << g17(v[j].real()) << ':' << g17(v[j].imag());
  }
  return out.str();
}

CoeffVec decode_vector(const std::string& text) {
  std::istringstream in(text);
  std::vector<Complex> entries;
  std::string token;
  while (in >> token) {
    const std::size_t colon = token.find(':');
    require(colon != std::string::npos, "decode_vector: malformed entry");
    entries.emplace_back(std::stod(token.substr(0, colon)), std::stod(token.substr(colon + 1)));
  }
  CoeffVec v(static_cast<long>(entries.size()));
  for (std::size_t j = 0; j < entries.size(); ++j) v[static_cast<long>(j)] = entries[j];
  return v;
}

CsvWriter::CsvWriter(const std::string& path) : path_(path), out_(path, std::ios::binary) {
  require(out_.good(), "cannot open output file: " + path);
}

void CsvWriter::header(const std::vector<std::string>& names) { row(names); }

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    out_ << csv_quote(fields[i]);
  }
  out_ << '\n';
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(current);
  return fields;
}

} // namespace

int CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  throw validation_error("csv column not found: " + name);
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot open csv file: " + path);
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      table.header = split_csv_line(line);
      first = false;
    } else {
      table.rows.push_back(split_csv_line(line));
    }
  }
  return table;
}

} // namespace qg
