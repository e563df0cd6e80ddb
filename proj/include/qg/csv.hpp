#ifndef QG_CSV_HPP
#define QG_CSV_HPP

#include <fstream>
#include <string>
#include <vector>

#include "qg/coeffs.hpp"

namespace qg {

// Full-precision round-trippable formatting (17 significant digits, period
// decimal separator, locale-independent).
std::string g17(double value);

std::string csv_quote(const std::string& field);

// "i1 i2 i3" encoding of a support set.
std::string encode_support(const SupportSet& set);
SupportSet decode_support(const std::string& text, int dim);

// "re:im re:im ..." encoding of a coefficient vector.
std::string encode_vector(const CoeffVec& v);
CoeffVec decode_vector(const std::string& text);

class CsvWriter {
public:
  explicit CsvWriter(const std::string& path);
  void header(const std::vector<std::string>& names);
  void row(const std::vector<std::string>& fields);
  const std::string& path() const { return path_; }

private:
  std::string path_;
  std::ofstream out_;
};

// Parsed CSV with a header row (commas inside quoted fields respected).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);

} // namespace qg

#endif
