#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace homsim {

// CSV writer with a fixed header layout:
//   # schema=<name>
//   # <provenance>
//   col1,col2,...
// Values are formatted with %.12g so files are byte-identical across runs.
class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::string& schema,
              const std::string& provenance, const std::vector<std::string>& columns);
    ~CsvWriter();

    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& values);

    static std::string format(double v);

  private:
    std::ofstream out_;
};

// Parsed CSV: leading '#' lines (metadata comments) plus a header line and
// numeric rows. Throws with the line number on malformed rows.
struct CsvFile {
    std::vector<std::pair<std::string, std::string>> metadata;  // key=value comments
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

CsvFile read_csv(const std::string& path);

}  // namespace homsim
