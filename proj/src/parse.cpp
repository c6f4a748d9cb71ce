// Grammar (whitespace ignored):
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*      juxtaposition only before 'x'
//   factor := (integer | 'x') ['^' integer]

#include <cctype>
#include <string>

#include "valueset/errors.hpp"
#include "valueset/polyarith.hpp"

namespace valueset {

namespace {

constexpr unsigned long kMaxDegree = 1 << 16;

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  IntPoly poly() {
    if (s_.empty()) fail("empty polynomial");
    IntPoly acc;
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = s_[pos_++] == '-';
    for (;;) {
      IntPoly t = term();
      acc = negate ? acc - t : acc + t;
      if (at_end()) break;
      const char c = s_[pos_++];
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      negate = c == '-';
    }
    return acc;
  }

 private:
  IntPoly term() {
    IntPoly acc = factor();
    for (;;) {
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (peek() == 'x' || peek() == 'X') {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  IntPoly factor() {
    IntPoly base;
    if (peek() == 'x' || peek() == 'X') {
      ++pos_;
      base = IntPoly({0, 1});
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      base = IntPoly({integer()});
    } else {
      fail(at_end() ? "unexpected end of input" : std::string("unexpected '") + peek() + "'");
    }
    if (peek() != '^') return base;
    ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent must be a non-negative integer");
    const mpz_class e = integer();
    if (e > kMaxDegree) fail("exponent too large");
    IntPoly r({1});
    for (unsigned long i = 0; i < e.get_ui(); ++i) r = r * base;
    return r;
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(s_.substr(start, pos_ - start), 10);
  }

  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  bool at_end() const { return pos_ >= s_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("cannot parse polynomial at position " + std::to_string(pos_) + ": " + what);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly IntPoly::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  return Parser(std::move(compact)).poly();
}

}  // namespace valueset
