#ifndef CHUNKTX_ERROR_HPP
#define CHUNKTX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace chunktx {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file (bad column count, bad integer field, ...).
struct ParseError : Error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// Structurally invalid sentence or tree (cycles, multiple roots, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Bad config file, bad rule file, bad command usage.
struct ConfigError : Error {
  using Error::Error;
};

// Model files, version mismatches, inconsistent data passed between stages.
struct DataError : Error {
  using Error::Error;
};

}  // namespace chunktx

#endif
