#include "chaincodes/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "chaincodes/error.hpp"

namespace chaincodes {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

std::uint64_t parse_count(std::string_view text, std::size_t line_no, std::string_view what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::parse_error,
                "line " + std::to_string(line_no) + ": bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

// Next non-blank line; returns false at end of input.
bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Ring parse_ring_header(std::string_view line) {
  const auto tokens = split_ws(std::string(line));
  if (tokens.size() < 2 || tokens[0] != "ring") {
    throw Error(ErrorKind::parse_error, "expected a ring header 'ring zpm ...' or 'ring fqum ...'");
  }
  // The descriptor syntax needs poly= last since its value contains commas.
  std::string descriptor = tokens[1] + ":";
  std::string poly;
  bool first = true;
  for (std::size_t i = 2; i < tokens.size(); ++i) {
    if (tokens[i].rfind("poly=", 0) == 0) {
      poly = tokens[i];
      continue;
    }
    if (!first) descriptor += ',';
    descriptor += tokens[i];
    first = false;
  }
  if (!poly.empty()) descriptor += (first ? "" : ",") + poly;
  return parse_ring_descriptor(descriptor);
}

CodeMatrix read_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(in, line, line_no)) throw Error(ErrorKind::parse_error, "line 1: missing ring header");
  Ring ring = [&] {
    try {
      return parse_ring_header(line);
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(line_no) + ": " + e.detail());
    }
  }();
  if (!next_line(in, line, line_no)) {
    throw Error(ErrorKind::parse_error, "line " + std::to_string(line_no + 1) + ": missing '<rows> <cols>'");
  }
  const auto dims = split_ws(line);
  if (dims.size() != 2) {
    throw Error(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": expected '<rows> <cols>'");
  }
  const auto rows = parse_count(dims[0], line_no, "row count");
  const auto cols = parse_count(dims[1], line_no, "column count");
  if (rows == 0 || cols == 0) {
    throw Error(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": dimensions must be positive");
  }
  std::vector<Elem> entries;
  entries.reserve(rows * cols);
  for (std::uint64_t r = 0; r < rows; ++r) {
    if (!next_line(in, line, line_no)) {
      throw Error(ErrorKind::parse_error, "line " + std::to_string(line_no + 1) + ": expected " +
                                              std::to_string(rows) + " rows, found " + std::to_string(r));
    }
    const auto tokens = split_ws(line);
    if (tokens.size() != cols) {
      throw Error(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": expected " + std::to_string(cols) +
                                              " entries, found " + std::to_string(tokens.size()));
    }
    for (const auto& tok : tokens) {
      try {
        entries.push_back(ring.parse_token(tok));
      } catch (const Error& e) {
        throw Error(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": " + e.detail());
      }
    }
  }
  if (next_line(in, line, line_no)) {
    throw Error(ErrorKind::parse_error, "line " + std::to_string(line_no) + ": unexpected trailing content");
  }
  return CodeMatrix(std::move(ring), rows, cols, std::move(entries));
}

CodeMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io_error, "cannot open '" + path + "'");
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const CodeMatrix& matrix) {
  const Ring& ring = matrix.ring();
  out << ring.header() << '\n' << matrix.rows() << ' ' << matrix.cols() << '\n';
  for (std::size_t r = 0; r < matrix.rows(); ++r) {
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
      if (c) out << ' ';
      out << ring.token(matrix.at(r, c));
    }
    out << '\n';
  }
}

void write_matrix_file(const std::string& path, const CodeMatrix& matrix) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::io_error, "cannot write '" + path + "'");
  write_matrix(out, matrix);
  if (!out) throw Error(ErrorKind::io_error, "write to '" + path + "' failed");
}

void write_fq_vectors(std::ostream& out, const std::vector<FqVector>& vectors) {
  static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  for (const auto& v : vectors) {
    std::string line;
    line.reserve(v.size());
    for (FieldElem a : v) {
      if (index_of(a) >= 36) throw Error(ErrorKind::invalid_parameters, "field too large for digit export");
      line += kDigits[index_of(a)];
    }
    out << line << '\n';
  }
}

void write_adjacency(std::ostream& out, const Graph& g) {
  out << g.size() << '\n';
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (i) out << ' ';
      out << nbrs[i];
    }
    out << '\n';
  }
}

}  // namespace chaincodes
