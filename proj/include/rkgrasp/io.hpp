#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rkgrasp/problems/ncgpp.hpp"
#include "rkgrasp/problems/ssp.hpp"
#include "rkgrasp/problems/stcp.hpp"
#include "rkgrasp/problems/thlp.hpp"
#include "rkgrasp/problems/tsp.hpp"

namespace rkgrasp {

/// Malformed instance file. what() reads "<source>:<line>: <message>".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, int line, const std::string& message);
  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

// Readers take a source name used in error messages. parse_* open a file and
// name the instance after its stem.

TspInstance read_tsplib(std::istream& in, std::string_view source = "<tsplib>");
StcpInstance read_stcp(std::istream& in, std::string_view source = "<stcp>");
SspInstance read_ssp(std::istream& in, std::string_view source = "<ssp>");
NcgppInstance read_ncgpp(std::istream& in, std::string_view source = "<ncgpp>");
ThlpInstance read_thlp(std::istream& in, std::string_view source = "<thlp>");

TspInstance parse_tsplib(const std::filesystem::path& path);
StcpInstance parse_stcp(const std::filesystem::path& path);
SspInstance parse_ssp(const std::filesystem::path& path);
NcgppInstance parse_ncgpp(const std::filesystem::path& path);
ThlpInstance parse_thlp(const std::filesystem::path& path);

/// Canonical writers; read_*(write_*(x)) reproduces x.
void write_tsplib(std::ostream& out, const TspInstance& inst);  ///< EXPLICIT FULL_MATRIX
void write_stcp(std::ostream& out, const StcpInstance& inst);
void write_ssp(std::ostream& out, const SspInstance& inst);
void write_ncgpp(std::ostream& out, const NcgppInstance& inst);
void write_thlp(std::ostream& out, const ThlpInstance& inst);  ///< MATRIX body

}  // namespace rkgrasp
