#include "conedist/matrix_io.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace conedist {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based offset of the first character
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start + 1)});
  }
  return tokens;
}

double parse_real(const Token& tok, int line_no) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(tok.text.c_str(), &end);
  if (end != tok.text.c_str() + tok.text.size() || errno == ERANGE ||
      !std::isfinite(v)) {
    throw ParseError(line_no, tok.column, "expected a finite real, got '" +
                                              tok.text + "'");
  }
  return v;
}

}  // namespace

SymMat read_sym_mat(std::istream& in) {
  std::string line;
  int line_no = 0;

  // Order line.
  if (!std::getline(in, line)) {
    throw ParseError(1, 1, "empty input, expected the matrix order");
  }
  ++line_no;
  auto header = tokenize(line);
  if (header.size() != 1) {
    throw ParseError(line_no, header.empty() ? 1 : header[0].column,
                     "expected exactly one token (the matrix order)");
  }
  errno = 0;
  char* end = nullptr;
  long n_long = std::strtol(header[0].text.c_str(), &end, 10);
  if (end != header[0].text.c_str() + header[0].text.size() ||
      errno == ERANGE || n_long < 1 || n_long > 100000) {
    throw ParseError(line_no, header[0].column,
                     "matrix order must be a positive integer, got '" +
                         header[0].text + "'");
  }
  const Eigen::Index n = static_cast<Eigen::Index>(n_long);

  Eigen::MatrixXd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    if (!std::getline(in, line)) {
      throw ParseError(line_no + 1, 1,
                       "unexpected end of input, expected row " +
                           std::to_string(r + 1) + " of " + std::to_string(n));
    }
    ++line_no;
    auto tokens = tokenize(line);
    if (static_cast<Eigen::Index>(tokens.size()) != n) {
      throw ParseError(line_no, tokens.empty() ? 1 : tokens.back().column,
                       "expected " + std::to_string(n) + " values, found " +
                           std::to_string(tokens.size()));
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      m(r, c) = parse_real(tokens[c], line_no);
    }
  }

  // Anything but whitespace after the matrix is an error.
  while (std::getline(in, line)) {
    ++line_no;
    auto extra = tokenize(line);
    if (!extra.empty()) {
      throw ParseError(line_no, extra[0].column,
                       "unexpected content after the matrix");
    }
  }

  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (!(std::abs(m(i, j) - m(j, i)) <= 1e-12)) {
        throw ParseError(static_cast<int>(i) + 2, 1,
                         "matrix is not symmetric: entries (" +
                             std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ") and (" +
                             std::to_string(j + 1) + "," +
                             std::to_string(i + 1) + ") differ by more than 1e-12");
      }
    }
  }
  return SymMat::FromDense(m, 1e-12);
}

SymMat read_sym_mat_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "' for reading");
  }
  return read_sym_mat(in);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

void write_sym_mat(std::ostream& out, const SymMat& x) {
  const Eigen::Index n = x.order();
  out << n << '\n';
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j > 0) out << ' ';
      out << format_double(x(i, j));
    }
    out << '\n';
  }
}

void write_sym_mat_file(const std::string& path, const SymMat& x) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  write_sym_mat(out, x);
}

std::string to_matrix_text(const SymMat& x) {
  std::ostringstream out;
  write_sym_mat(out, x);
  return out.str();
}

}  // namespace conedist
