#pragma once

#include <iosfwd>
#include <string>

#include "cdiag/diagram.hpp"

namespace cdiag {

// Diagram text format:
//   # comment and blank lines are skipped
//   vertices N
//   edge TAIL HEAD WEIGHT     (one per edge; WEIGHT optional, default 1)
// Parse errors throw FormatError naming the line; semantic problems
// (bad weights, non-square cycles) propagate from new_diagram.
Diagram parse_diagram_text(const std::string& text);
Diagram read_diagram_file(const std::string& path); // IoError when unreadable

// Prints vertices then edges sorted by (tail, head), one per line, always
// with the weight; parse(print(d)) == d.
std::string print_diagram_text(const Diagram& d);
void write_diagram_file(const std::string& path, const Diagram& d);

// Graphviz digraph; weight labels are omitted on weight-1 edges.
std::string to_dot(const Diagram& d);

} // namespace cdiag
