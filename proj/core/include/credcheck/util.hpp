#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace credcheck {

// ASCII-only case folding and whitespace handling. Multi-byte UTF-8
// sequences pass through untouched.
bool ascii_space(char c);
char ascii_lower(char c);
std::string ascii_lower_copy(std::string_view s);
std::string_view trim(std::string_view s);

// FNV-1a, 64 bit. Used for content digests of training splits.
class Fnv1a64 {
 public:
  void update(std::string_view bytes);
  void update(char byte);
  std::uint64_t value() const { return state_; }
  std::string hex() const;

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ull;
};

std::string read_file(const std::string& path);
// Writes to "<path>.tmp" in the same directory, then renames; the target is
// never left half-written.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace credcheck
