#include "treedepth/pace_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace treedepth {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

long long to_integer(const std::string& token, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, "expected an integer, got '" + token + "'");
  return value;
}

}  // namespace

PaceInstance parse_gr(std::istream& in) {
  PaceInstance inst;
  bool header = false;
  int lineno = 0;
  std::vector<Edge> raw;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto tok = tokens_of(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (header) throw ParseError(lineno, "duplicate header");
      if (tok.size() != 4 || tok[1] != "tdp") throw ParseError(lineno, "expected 'p tdp n m'");
      long long n = to_integer(tok[2], lineno);
      inst.m = to_integer(tok[3], lineno);
      if (n < 0 || n > 1'000'000'000 || inst.m < 0) throw ParseError(lineno, "bad header counts");
      inst.n = static_cast<int>(n);
      header = true;
      continue;
    }
    if (!header) throw ParseError(lineno, "edge before header");
    if (tok.size() != 2) throw ParseError(lineno, "expected two endpoints");
    long long u = to_integer(tok[0], lineno);
    long long v = to_integer(tok[1], lineno);
    if (u < 1 || v < 1 || u > inst.n || v > inst.n) throw ParseError(lineno, "vertex out of range");
    raw.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  if (!header) throw ParseError(lineno, "missing header");
  Graph g(inst.n);
  for (auto [u, v] : raw) {
    if (u == v) {
      ++inst.self_loops;
    } else if (g.add_edge(u, v)) {
      inst.edges.emplace_back(u, v);
    } else {
      ++inst.duplicates;
    }
  }
  return inst;
}

PaceInstance parse_gr_string(const std::string& text) {
  std::istringstream in(text);
  return parse_gr(in);
}

PaceInstance read_gr_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_gr(in);
}

std::string emit_tree(const TreedepthDecomposition& dec) {
  std::string out = std::to_string(dec.depth) + "\n";
  for (int p : dec.parent) {
    out += std::to_string(p == kRoot ? 0 : p + 1);
    out += '\n';
  }
  return out;
}

TreedepthDecomposition parse_tree(std::istream& in, int n) {
  TreedepthDecomposition dec;
  int lineno = 0;
  bool have_depth = false;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok.size() != 1) throw ParseError(lineno, "expected one integer");
    long long value = to_integer(tok[0], lineno);
    if (!have_depth) {
      dec.depth = static_cast<int>(value);
      have_depth = true;
      continue;
    }
    if (value < 0 || value > n) throw ParseError(lineno, "parent out of range");
    dec.parent.push_back(value == 0 ? kRoot : static_cast<int>(value - 1));
  }
  if (!have_depth) throw ParseError(lineno, "missing depth line");
  if (static_cast<int>(dec.parent.size()) != n) throw ParseError(lineno, "wrong number of parent lines");
  return dec;
}

}  // namespace treedepth
