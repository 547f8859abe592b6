// Family file format: first line "n=<int> k=<int>", then one member per
// nonblank line as k space-separated 1-based elements in increasing order.
// '#' starts a comment line. Serialization emits members in colex order.
#pragma once

#include "lekr/family.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace lekr {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

Family parse_family(std::istream& in);
Family parse_family(const std::string& text);
Family read_family_file(const std::string& path);

std::string serialize_family(const Family& f);

}  // namespace lekr
