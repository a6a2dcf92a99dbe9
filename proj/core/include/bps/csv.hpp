#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bps::csv {

// Splits one line on commas. No quoting: every format in this project is
// plain numeric CSV.
std::vector<std::string> split(std::string_view line, char delim = ',');

std::string_view trim(std::string_view s);

// Strict double parse; throws ParseError naming the line on failure.
double to_double(std::string_view field, long line = -1);
long to_long(std::string_view field, long line = -1);

// Splits file content into lines, dropping a trailing empty line and
// tolerating CRLF endings.
std::vector<std::string> lines(std::string_view content);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace bps::csv
