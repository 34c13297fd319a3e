#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "chaincodes/code.hpp"
#include "chaincodes/gray.hpp"
#include "chaincodes/graphs.hpp"

namespace chaincodes {

/// Parses `ring zpm p=.. m=..` or `ring fqum p=.. e=.. m=.. poly=..`.
Ring parse_ring_header(std::string_view line);

/// Matrix file: ring header, `<rows> <cols>`, then rows of element tokens.
/// ParseError messages carry the 1-based line number.
CodeMatrix read_matrix(std::istream& in);
CodeMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const CodeMatrix& matrix);
void write_matrix_file(const std::string& path, const CodeMatrix& matrix);

/// One vector per line, field digits concatenated (0-9a-z).
void write_fq_vectors(std::ostream& out, const std::vector<FqVector>& vectors);

/// `<n>` then one space-separated neighbour list per vertex.
void write_adjacency(std::ostream& out, const Graph& g);

}  // namespace chaincodes
