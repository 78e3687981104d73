#include "gls/square_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gls/error.hpp"
#include "gls/text_scan.hpp"

namespace gls {

Square parse_square(std::istream& in) {
  detail::LineScanner scan(in);
  if (!scan.next_content_line()) throw ParseError(scan.line_no() + 1, 1, "missing order line");
  auto header = scan.integers();
  if (header.size() != 1) throw ParseError(scan.line_no(), 1, "expected a single integer n");
  const auto [nval, ncol] = header.front();
  if (nval < 1 || nval > 1 << 15) throw ParseError(scan.line_no(), ncol, "order must be a positive integer");
  const int n = static_cast<int>(nval);

  std::vector<Symbol> labels;
  labels.reserve(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (!scan.next_content_line()) {
      throw ParseError(scan.line_no() + 1, 1, "expected " + std::to_string(n) + " rows, got " + std::to_string(r));
    }
    auto row = scan.integers();
    if (static_cast<int>(row.size()) != n) {
      throw ParseError(scan.line_no(), 1,
                       "row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(n));
    }
    for (const auto& [v, col] : row) {
      if (v < 0) throw ParseError(scan.line_no(), col, "negative symbol");
      labels.push_back(v);
    }
  }
  if (scan.next_content_line()) throw ParseError(scan.line_no(), 1, "trailing content after square");
  return Square::from_labels(n, std::move(labels));
}

Square read_square_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_square(in);
}

void write_square(std::ostream& out, const Square& square, const std::string& comment) {
  if (!comment.empty()) {
    std::istringstream lines(comment);
    for (std::string l; std::getline(lines, l);) out << "# " << l << '\n';
  }
  const int n = square.order();
  out << n << '\n';
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) out << (c ? " " : "") << square.id(r, c);
    out << '\n';
  }
}

std::string format_square(const Square& square) {
  std::ostringstream os;
  write_square(os, square);
  return os.str();
}

void write_square_file(const std::string& path, const Square& square, const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_square(out, square, comment);
}

}  // namespace gls
