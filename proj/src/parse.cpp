#include <cctype>
#include <string>

#include "detring/errors.hpp"
#include "detring/poly.hpp"

namespace detring {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, VariableSpace space) : text_(text), space_(space) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    terms.push_back(term(negative));
    for (skip_ws(); !at_end(); skip_ws()) {
      const char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("expected '+' or '-', found '") + c + "'", pos_);
      take();
      terms.push_back(term(c == '-'));
    }
    return Polynomial::from_terms(space_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    take();
  }

  std::string uint_digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError("expected an unsigned integer", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_uint() {
    const std::size_t start = pos_;
    const std::string digits = uint_digits();
    if (digits.size() > 6) throw ParseError("integer too large", start);
    return std::stoi(digits);
  }

  Term term(bool negative) {
    skip_ws();
    if (at_end()) throw ParseError("expected a term", pos_);
    Rational coeff = 1;
    Monomial mono(space_);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num(uint_digits());
      Integer den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        take();
        const std::size_t at = pos_;
        den = Integer(uint_digits());
        if (den == 0) throw ParseError("zero denominator", at);
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      skip_ws();
      if (at_end() || peek() != '*') return {mono, negative ? Rational(-coeff) : coeff};
      take();
    }
    mono = factor();
    for (skip_ws(); !at_end() && peek() == '*'; skip_ws()) {
      take();
      mono = mono * factor();
    }
    return {mono, negative ? Rational(-coeff) : coeff};
  }

  Monomial factor() {
    skip_ws();
    const std::size_t start = pos_;
    if (at_end()) throw ParseError("expected a variable", pos_);
    const char letter = take();
    if (letter != 'x' && letter != 'y' && letter != 'z')
      throw ParseError(std::string("unexpected character '") + letter + "'", start);
    expect('[');
    const int row = small_uint();
    expect(',');
    const int col = small_uint();
    expect(']');
    std::size_t index = 0;
    try {
      index = space_.index_of({letter, row, col});
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), start);
    }
    int power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      take();
      power = small_uint();
    }
    return Monomial::variable(space_, index, power);
  }

  std::string_view text_;
  VariableSpace space_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, VariableSpace space) {
  return PolyParser(text, space).parse();
}

}  // namespace detring
