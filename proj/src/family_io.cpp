#include "lekr/family_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lekr {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Family parse_family(std::istream& in) {
  std::string line;
  int lineno = 0;
  GroundParams params;
  bool have_header = false;
  std::vector<SetMask> members;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank_or_comment(line)) continue;

    if (!have_header) {
      int n = 0, k = 0;
      char trailing = 0;
      if (std::sscanf(line.c_str(), "n=%d k=%d %c", &n, &k, &trailing) != 2)
        throw ParseError(lineno, "malformed header, expected 'n=<int> k=<int>'");
      if (k < 1 || k > n || n > 64)
        throw ParseError(lineno, "require 1 <= k <= n <= 64, got n=" +
                                     std::to_string(n) +
                                     " k=" + std::to_string(k));
      params = {n, k};
      have_header = true;
      continue;
    }

    std::istringstream ls(line);
    std::vector<int> elements;
    int e;
    while (ls >> e) {
      if (e < 1 || e > params.n)
        throw ParseError(lineno, "element " + std::to_string(e) +
                                     " out of range 1.." +
                                     std::to_string(params.n));
      if (!elements.empty() && e <= elements.back())
        throw ParseError(lineno, "elements must be strictly increasing");
      elements.push_back(e);
    }
    if (!ls.eof())
      throw ParseError(lineno, "invalid token in member line");
    if (static_cast<int>(elements.size()) != params.k)
      throw ParseError(lineno, "expected " + std::to_string(params.k) +
                                   " elements, got " +
                                   std::to_string(elements.size()));
    SetMask m = mask_from_elements(elements, params.n);
    if (std::find(members.begin(), members.end(), m) != members.end())
      throw ParseError(lineno, "duplicate set " + mask_braced(m));
    members.push_back(m);
  }
  if (!have_header) throw ParseError(lineno, "missing 'n=<int> k=<int>' header");
  return Family(params, std::move(members));
}

Family parse_family(const std::string& text) {
  std::istringstream in(text);
  return parse_family(in);
}

Family read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open family file: " + path);
  return parse_family(in);
}

std::string serialize_family(const Family& f) {
  std::string out = "n=" + std::to_string(f.params().n) +
                    " k=" + std::to_string(f.params().k) + "\n";
  for (SetMask m : f.members()) {
    out += mask_line(m);
    out += '\n';
  }
  return out;
}

}  // namespace lekr
