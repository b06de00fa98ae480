#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace naijavar::text {

// Decodes UTF-8 into Unicode scalar values. Throws ValidationError naming the
// byte offset of the first invalid sequence.
std::u32string decode_utf8(std::string_view s);

// Byte offset of the first invalid UTF-8 sequence, if any.
std::optional<std::size_t> find_invalid_utf8(std::string_view s);

std::string encode_utf8(char32_t cp);
std::string encode_utf8(std::u32string_view s);

// Case folding is ASCII-only; other code points pass through unchanged.
std::string to_lower(std::string_view s);
bool starts_upper(std::string_view s);
std::string capitalize_first(std::string_view s);

// Letters are ASCII letters plus the Latin-1, Latin Extended (including
// Extended Additional) and IPA letter blocks, and combining diacritics.
bool is_letter(char32_t cp);

std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::vector<std::string> split_whitespace(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// One line of a tab-separated data file with its 1-based line number.
struct Line {
  std::size_t number;
  std::string content;
};

// Reads a UTF-8 data file, dropping blank lines and lines whose first
// non-space character is '#'. Trailing '\r' is stripped.
std::vector<Line> read_data_lines(const std::filesystem::path& path);
std::vector<Line> data_lines_from(std::string_view contents);

std::string read_file(const std::filesystem::path& path);

// "path:line: message"
std::string located(const std::filesystem::path& path, std::size_t line, std::string_view message);

}  // namespace naijavar::text
