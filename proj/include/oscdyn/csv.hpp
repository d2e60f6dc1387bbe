#pragma once

#include <string>
#include <vector>

namespace oscdyn {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// Full-precision decimal rendering (17 significant digits); values written
// this way round-trip to the same bits.
std::string format_full(double value);

// Writes header + rows, comma separated, LF line endings, no trailing
// whitespace.  Byte-deterministic for identical inputs.
void write_csv(const std::string& path, const CsvTable& table);

CsvTable read_csv(const std::string& path);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace oscdyn
