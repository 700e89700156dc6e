// CSV helpers and deterministic number formatting shared by every artifact
// writer. All outputs go through format_double so identical runs produce
// byte-identical files.
#pragma once

#include <string>
#include <vector>

namespace locodyn::io {

// Shortest representation that round-trips a double (printf %.17g trimmed).
std::string format_double(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const std::string& path);
void write_csv(const std::string& path, const CsvTable& table);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace locodyn::io
