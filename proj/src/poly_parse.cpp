#include "detinv/poly_parse.hpp"

#include <algorithm>
#include <cctype>

namespace detinv {
namespace {

using IntPoly = SparsePoly<IntegerRing>;

class Parser {
 public:
  Parser(std::string_view text, const VariableLayout& layout) : text_(text), layout_(layout) {}

  IntPoly parse() {
    if (layout_.nvars == 0) throw ParseError(0, "variable count must be positive");
    IntPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  IntPoly expr() {
    IntPoly result(IntegerRing{}, layout_.nvars);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    IntPoly t = term();
    result = negate ? result - t : result + t;
    for (;;) {
      if (accept('+')) result = result + term();
      else if (accept('-')) result = result - term();
      else break;
    }
    return result;
  }

  IntPoly term() {
    IntPoly result = factor();
    while (accept('*')) result = result * factor();
    return result;
  }

  IntPoly factor() {
    IntPoly base = atom();
    if (accept('^')) {
      const mpz_class e = integer();
      if (!e.fits_ulong_p() || e > 10000) fail("exponent too large");
      base = base.pow(e.get_ui());
    }
    return base;
  }

  IntPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      IntPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return IntPoly::constant(IntegerRing{}, layout_.nvars, integer());
    if (c == 'x' || c == 'X') return IntPoly::variable(IntegerRing{}, layout_.nvars, variable());
    fail("expected a number, a variable or '('");
  }

  // Reads digits, optionally wrapped in braces.
  long braced_index() {
    const bool braced = pos_ < text_.size() && text_[pos_] == '{';
    if (braced) ++pos_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a variable index");
    if (pos_ - start > 6) fail("variable index too large");
    const long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (braced) {
      if (pos_ >= text_.size() || text_[pos_] != '}') fail("expected '}'");
      ++pos_;
    }
    return v;
  }

  std::size_t variable() {
    const std::size_t start = pos_;
    ++pos_;  // 'x'
    if (pos_ < text_.size() && text_[pos_] == '_') {
      ++pos_;
      const long i = braced_index();
      if (pos_ >= text_.size() || text_[pos_] != '_') fail("expected '_' between matrix indices");
      ++pos_;
      const long j = braced_index();
      if (layout_.cols == 0) throw ParseError(start, "matrix-style variable needs a column count");
      if (i < 1 || j < 1 || std::size_t(j) > layout_.cols) throw ParseError(start, "matrix index out of range");
      const std::size_t index = std::size_t(i - 1) * layout_.cols + std::size_t(j - 1);
      if (index >= layout_.nvars) throw ParseError(start, "matrix index out of range");
      return index;
    }
    const long k = braced_index();
    if (k < 1 || std::size_t(k) > layout_.nvars)
      throw ParseError(start, "variable x" + std::to_string(k) + " out of range 1.." + std::to_string(layout_.nvars));
    return std::size_t(k - 1);
  }

  std::string_view text_;
  VariableLayout layout_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly<IntegerRing> parse_polynomial(std::string_view text, const VariableLayout& layout) {
  return Parser(text, layout).parse();
}

std::vector<SparsePoly<IntegerRing>> parse_polynomial_list(std::string_view text, const VariableLayout& layout) {
  std::vector<SparsePoly<IntegerRing>> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',' || text[i] == ';')) ++i;
    if (i >= text.size()) break;
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    const std::size_t start = i;
    int depth = 0;
    while (i < text.size()) {
      const char c = text[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == '\n' || ((c == ',' || c == ';') && depth <= 0)) break;
      ++i;
    }
    try {
      out.push_back(parse_polynomial(text.substr(start, i - start), layout));
    } catch (const ParseError& e) {
      const std::string what = e.what();
      throw ParseError(start + e.position(), what.substr(what.find(": ") + 2));
    }
  }
  return out;
}

std::size_t infer_variable_count(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x' && text[i] != 'X') continue;
    std::size_t j = i + 1;
    if (j < text.size() && text[j] == '{') ++j;
    std::size_t start = j;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j > start && j - start <= 6) best = std::max<std::size_t>(best, std::stoul(std::string(text.substr(start, j - start))));
  }
  return best;
}

}  // namespace detinv
