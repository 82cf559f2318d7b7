#pragma once

#include <string>
#include <utility>
#include <vector>

#include "partition.hpp"

namespace unref {

/// Parsed OEIS b-file: "index value" lines, '#' comments skipped.
struct BFile {
  std::vector<std::pair<Part, Part>> entries;  // strictly increasing indices
};

/// MalformedLine (with the 1-based line number in the message) on anything
/// that is not a comment, a blank line or an "index value" pair.
BFile parse_bfile(const std::string& text);

BFile load_bfile(const std::string& path);  // IoFailure on unreadable files

}  // namespace unref
