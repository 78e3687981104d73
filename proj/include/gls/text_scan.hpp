#pragma once

// Line-oriented integer scanner shared by the .sq and .ecg readers.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "gls/error.hpp"

namespace gls::detail {

class LineScanner {
 public:
  explicit LineScanner(std::istream& in) : in_(in) {}

  // Advances to the next line that is neither blank nor a '#' comment.
  bool next_content_line() {
    while (std::getline(in_, line_)) {
      ++line_no_;
      if (!line_.empty() && line_.back() == '\r') line_.pop_back();
      std::size_t p = line_.find_first_not_of(" \t");
      if (p == std::string::npos || line_[p] == '#') continue;
      return true;
    }
    return false;
  }

  // (value, 1-based column) pairs of the current line.
  std::vector<std::pair<std::int64_t, int>> integers() const {
    std::vector<std::pair<std::int64_t, int>> out;
    std::size_t i = 0;
    while (i < line_.size()) {
      if (line_[i] == ' ' || line_[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line_.size() && line_[j] != ' ' && line_[j] != '\t') ++j;
      std::int64_t v = 0;
      const char* b = line_.data() + i;
      const char* e = line_.data() + j;
      auto [ptr, ec] = std::from_chars(b, e, v);
      if (ec != std::errc{} || ptr != e) {
        throw ParseError(line_no_, static_cast<int>(i) + 1, "not an integer: '" + line_.substr(i, j - i) + "'");
      }
      out.emplace_back(v, static_cast<int>(i) + 1);
      i = j;
    }
    return out;
  }

  int line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::string line_;
  int line_no_ = 0;
};

}  // namespace gls::detail
