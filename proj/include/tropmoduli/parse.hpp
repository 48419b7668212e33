#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "tropmoduli/errors.hpp"
#include "tropmoduli/laurent.hpp"

namespace tropmoduli {

/// Minimal text grammar for Laurent polynomial inputs, one value per call:
///   value  := term (('+' | '-') term)*
///   term   := coef ['*' 't' ['^' int]] | 't' ['^' int]
///   coef   := rational ['w' | 'w2' | 'w^2']  (w is the cube root of unity)
/// Examples: "1+2*t^3", "w*t^-1", "-1/2", "2w2*t", "t^2".
class LaurentParser {
 public:
  explicit LaurentParser(std::string text, int line = 1)
      : s_(std::move(text)), line_(line) {}

  Val parse() {
    Val v;
    skip_ws();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      v += term(sign);
      skip_ws();
      first = false;
    }
    if (first) fail("empty input");
    return v;
  }

 private:
  std::string s_;
  size_t pos_ = 0;
  int line_;

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("line " + std::to_string(line_) + ", column " +
                     std::to_string(pos_ + 1) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool peek_digit() const { return pos_ < s_.size() && isdigit(s_[pos_]); }

  long integer() {
    int sign = 1;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    if (!peek_digit()) fail("expected an integer");
    long v = 0;
    while (peek_digit()) v = v * 10 + (s_[pos_++] - '0');
    return sign * v;
  }

  Rat rational() {
    long num = integer();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      long den = integer();
      if (den == 0) fail("zero denominator");
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
    return Rat(num);
  }

  Val term(int sign) {
    skip_ws();
    Cyc coef(sign);
    bool have_coef = false;
    if (peek_digit() || (pos_ < s_.size() && s_[pos_] == '/')) {
      coef = Cyc(Rat(sign) * rational());
      have_coef = true;
    }
    if (pos_ < s_.size() && s_[pos_] == 'w') {
      ++pos_;
      Cyc w = Cyc::omega();
      if (pos_ < s_.size() && (s_[pos_] == '2' || s_[pos_] == '^')) {
        if (s_[pos_] == '^') {
          ++pos_;
          long e = integer();
          if (e != 2) fail("only w and w^2 are supported");
        } else {
          ++pos_;
        }
        w = w * w;
      }
      coef = coef * w;
      have_coef = true;
    }
    if (pos_ < s_.size() && s_[pos_] == '*') {
      if (!have_coef) fail("'*' needs a coefficient on its left");
      ++pos_;
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != 't') fail("expected 't' after '*'");
    }
    long expo = 0;
    if (pos_ < s_.size() && s_[pos_] == 't') {
      ++pos_;
      expo = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        expo = integer();
      }
    } else if (!have_coef) {
      fail("expected a coefficient or 't'");
    }
    return Val::monomial(coef, expo);
  }
};

inline Val parse_laurent(const std::string& text, int line = 1) {
  return LaurentParser(text, line).parse();
}

/// Points file: one Laurent value per nonempty non-comment line.
inline std::vector<Val> parse_points(const std::string& text) {
  std::vector<Val> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    bool blank = true;
    for (char ch : line)
      if (!isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) continue;
    out.push_back(parse_laurent(line, lineno));
  }
  return out;
}

}  // namespace tropmoduli
