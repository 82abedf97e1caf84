#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "treedepth/decomposition.hpp"
#include "treedepth/graph.hpp"

namespace treedepth {

/// Malformed .gr input. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

struct PaceInstance {
  int n = 0;
  long long m = 0;  // as declared in the header
  std::vector<Edge> edges;  // 0-based, duplicates and loops dropped
  long long duplicates = 0;
  long long self_loops = 0;
  Graph graph() const { return Graph(n, edges); }
};

/// Reads "p tdp n m" followed by 1-based edge lines; "c" lines are comments.
PaceInstance parse_gr(std::istream& in);
PaceInstance parse_gr_string(const std::string& text);
PaceInstance read_gr_file(const std::string& path);

/// Depth on the first line, then the 1-based parent of each vertex (0 for a
/// root), one per line.
std::string emit_tree(const TreedepthDecomposition& dec);

/// Inverse of emit_tree. Throws ParseError.
TreedepthDecomposition parse_tree(std::istream& in, int n);

}  // namespace treedepth
