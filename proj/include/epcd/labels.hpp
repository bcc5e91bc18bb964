#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace epcd {

/// Two-community assignment: entry i is +1 (community 1) or -1 (community 2).
using Labels = std::vector<int>;

/// Throws unless every entry is +1 or -1 and, when expected_size is nonzero, the
/// length matches.
void validate_labels(std::span<const int> labels, std::size_t expected_size = 0);

/// One integer per line, line k labels node k. Accepts {1, 2} or {+1, -1};
/// 1 maps to +1 and 2 to -1. Blank lines and '#' comments are skipped.
Labels load_labels(std::istream& in);
Labels load_labels_file(const std::string& path);

/// Writes one "+1"/"-1" per line.
void write_labels(std::ostream& out, std::span<const int> labels);

/// -labels
Labels negated(std::span<const int> labels);

}  // namespace epcd
