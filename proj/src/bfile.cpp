#include "bfile.hpp"

#include <fstream>
#include <sstream>

namespace unref {

BFile parse_bfile(const std::string& text) {
  BFile out;
  std::istringstream in(text);
  std::string line;
  Part line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream ls(line);
    Part index = 0, value = 0;
    std::string extra;
    if (!(ls >> index >> value) || (ls >> extra))
      fail(Status::MalformedLine,
           "line " + std::to_string(line_no) + ": expected 'index value'");
    if (!out.entries.empty() && index <= out.entries.back().first)
      fail(Status::MalformedLine,
           "line " + std::to_string(line_no) + ": indices must be strictly increasing");
    if (value < 0)
      fail(Status::MalformedLine,
           "line " + std::to_string(line_no) + ": values must be non-negative");
    out.entries.emplace_back(index, value);
  }
  return out;
}

BFile load_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Status::IoFailure, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_bfile(buffer.str());
}

}  // namespace unref
