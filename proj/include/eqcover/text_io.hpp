#pragma once

#include <charconv>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "eqcover/error.hpp"

namespace eqcover::detail {

// Line reader shared by the text formats: skips blank lines and lines whose
// first non-space character is '#', splits the rest on whitespace.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next significant line; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      tokens.clear();
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) tokens.emplace_back(line.substr(i, j - i));
        i = j;
      }
      if (tokens.empty() || tokens.front().front() == '#') continue;
      return true;
    }
    return false;
  }

  std::size_t line() const noexcept { return line_no_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_no_, what); }

  long long integer(const std::string& token) const {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) fail("expected an integer, got '" + token + "'");
    return value;
  }

  int nonnegative(const std::string& token, const char* what) const {
    long long v = integer(token);
    if (v < 0 || v > 100'000'000) fail(std::string(what) + " out of range: " + token);
    return static_cast<int>(v);
  }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

}  // namespace eqcover::detail
