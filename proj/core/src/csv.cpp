#include "credcheck/csv.hpp"

#include <sstream>

#include "credcheck/errors.hpp"
#include "credcheck/util.hpp"

namespace credcheck {
namespace {

bool blank(const std::vector<std::string>& fields) {
  return fields.empty() || (fields.size() == 1 && fields[0].empty());
}

}  // namespace

CsvTable parse_csv(std::string_view content, char delimiter) {
  // strip a UTF-8 BOM if present
  if (content.size() >= 3 && content.substr(0, 3) == "\xef\xbb\xbf") {
    content.remove_prefix(3);
  }

  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool any_char_in_record = false;

  std::size_t i = 0;
  const std::size_t n = content.size();
  auto end_field = [&] {
    fields.push_back(std::move(field));
    field.clear();
  };
  auto end_record = [&] {
    end_field();
    if (!blank(fields)) records.push_back(std::move(fields));
    fields.clear();
    any_char_in_record = false;
  };

  while (i < n) {
    const char c = content[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < n && content[i + 1] == '"') {
          field += '"';
          i += 2;
        } else {
          quoted = false;
          ++i;
        }
      } else {
        field += c;
        ++i;
      }
      continue;
    }
    if (c == '"' && field.empty()) {
      quoted = true;
      any_char_in_record = true;
      ++i;
    } else if (c == delimiter) {
      end_field();
      any_char_in_record = true;
      ++i;
    } else if (c == '\n') {
      end_record();
      ++i;
    } else if (c == '\r' && i + 1 < n && content[i + 1] == '\n') {
      end_record();
      i += 2;
    } else {
      field += c;
      any_char_in_record = true;
      ++i;
    }
  }
  if (quoted) raise(ErrorCode::CsvFormat, "unterminated quoted field at end of input");
  if (any_char_in_record || !field.empty() || !fields.empty()) end_record();

  CsvTable table;
  if (records.empty()) raise(ErrorCode::CsvFormat, "input has no header row");
  table.header = std::move(records.front());
  table.rows.assign(std::make_move_iterator(records.begin() + 1),
                    std::make_move_iterator(records.end()));
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (table.rows[r].size() != table.header.size()) {
      raise(ErrorCode::CsvFormat,
            "data row " + std::to_string(r) + " has " + std::to_string(table.rows[r].size()) +
                " fields, header has " + std::to_string(table.header.size()));
    }
  }
  return table;
}

CsvTable read_csv_file(const std::string& path, char delimiter) {
  return parse_csv(read_file(path), delimiter);
}

std::string csv_field(std::string_view value, char delimiter) {
  const bool needs_quotes =
      value.find_first_of(std::string{delimiter, '"', '\n', '\r'}) != std::string_view::npos;
  if (!needs_quotes) return std::string(value);
  std::string out;
  out.reserve(value.size() + 2);
  out += '"';
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_line(const std::vector<std::string>& fields, char delimiter) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += delimiter;
    out += csv_field(fields[i], delimiter);
  }
  out += '\n';
  return out;
}

void write_csv_file(const std::string& path, const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows, char delimiter) {
  std::string content = csv_line(header, delimiter);
  for (const auto& row : rows) content += csv_line(row, delimiter);
  write_file_atomic(path, content);
}

}  // namespace credcheck
