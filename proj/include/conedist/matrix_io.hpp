/**
 * Shared matrix text format.
 *
 * First line: the order n. Then n lines, each with n whitespace-separated
 * reals. Readers verify symmetry within 1e-12 absolute and reject
 * otherwise. Writers print 15 significant digits with a locale-independent
 * decimal point.
 */

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "conedist/sym_mat.hpp"

namespace conedist {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

SymMat read_sym_mat(std::istream& in);
SymMat read_sym_mat_file(const std::string& path);

void write_sym_mat(std::ostream& out, const SymMat& x);
void write_sym_mat_file(const std::string& path, const SymMat& x);
std::string to_matrix_text(const SymMat& x);

// snprintf "%.15g" in the C locale.
std::string format_double(double v);

}  // namespace conedist
