#pragma once

#include <string>
#include <vector>

namespace credcheck {

// RFC-4180 style CSV: header row required by the callers in corpus.cpp,
// double-quote quoting, quoted fields may contain the delimiter, quotes
// (doubled) and newlines. Accepts \n and \r\n row endings; skips blank lines.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable parse_csv(std::string_view content, char delimiter = ',');
CsvTable read_csv_file(const std::string& path, char delimiter = ',');

std::string csv_field(std::string_view value, char delimiter = ',');
std::string csv_line(const std::vector<std::string>& fields, char delimiter = ',');

// Header + rows, '\n' endings, atomic replace of the target file.
void write_csv_file(const std::string& path, const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows, char delimiter = ',');

}  // namespace credcheck
