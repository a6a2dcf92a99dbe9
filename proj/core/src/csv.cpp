#include "bps/csv.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bps/common.hpp"

namespace bps::csv {

std::vector<std::string> split(std::string_view line, char delim) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delim, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(trim(line.substr(start)));
      break;
    }
    out.emplace_back(trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double to_double(std::string_view field, long line) {
  const std::string tmp{trim(field)};
  if (tmp.empty()) throw ParseError("empty numeric field", line);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(tmp.c_str(), &end);
  if (errno != 0 || end == tmp.c_str() || *end != '\0')
    throw ParseError("cannot parse number '" + tmp + "'", line);
  return v;
}

long to_long(std::string_view field, long line) {
  const std::string tmp{trim(field)};
  if (tmp.empty()) throw ParseError("empty integer field", line);
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(tmp.c_str(), &end, 10);
  if (errno != 0 || end == tmp.c_str() || *end != '\0')
    throw ParseError("cannot parse integer '" + tmp + "'", line);
  return v;
}

std::vector<std::string> lines(std::string_view content) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= content.size()) {
    const auto pos = content.find('\n', start);
    if (pos == std::string_view::npos) {
      if (start < content.size()) out.emplace_back(content.substr(start));
      break;
    }
    auto l = content.substr(start, pos - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    out.emplace_back(l);
    start = pos + 1;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace bps::csv
