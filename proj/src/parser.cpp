#include "purebetti/parser.hpp"

#include <cctype>
#include <string>

#include "purebetti/error.hpp"

namespace purebetti {

namespace {

constexpr std::string_view kLetters = "xyzwuv";

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, int n, std::size_t offset)
      : text_(text), n_(n), offset_(offset) {}

  HomogeneousPolynomial parse() {
    skip_space();
    if (at_end()) throw SyntaxError(position(), "empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = next() == '-';
      skip_space();
    }
    parse_term(negative);
    while (true) {
      skip_space();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-')
        throw SyntaxError(position(), std::string("unexpected '") + op + "'");
      next();
      skip_space();
      parse_term(op == '-');
    }
    return finish();
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char next() { return text_[pos_++]; }
  std::size_t position() const { return offset_ + pos_; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_variable() const { return !at_end() && kLetters.find(peek()) != std::string_view::npos; }
  bool at_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }

  std::string read_digits() {
    std::string digits;
    while (at_digit()) digits.push_back(next());
    return digits;
  }

  unsigned read_exponent() {
    skip_space();
    if (at_end() || peek() != '^') return 1;
    next();
    skip_space();
    const std::size_t start = position();
    const std::string digits = read_digits();
    if (digits.empty()) throw SyntaxError(start, "expected exponent after '^'");
    if (digits.size() > 4) throw SyntaxError(start, "exponent too large");
    return static_cast<unsigned>(std::stoul(digits));
  }

  void parse_term(bool negative) {
    Rational coefficient(negative ? -1 : 1);
    std::vector<int> exponents(static_cast<std::size_t>(n_), 0);
    parse_factor(coefficient, exponents);
    while (true) {
      skip_space();
      if (at_end()) break;
      if (peek() == '*') {
        next();
        skip_space();
        parse_factor(coefficient, exponents);
      } else if (at_variable()) {
        parse_factor(coefficient, exponents);
      } else {
        break;
      }
    }
    if (!coefficient.is_zero()) terms_.emplace_back(Monomial{std::move(exponents)}, coefficient);
  }

  void parse_factor(Rational& coefficient, std::vector<int>& exponents) {
    if (at_end()) throw SyntaxError(position(), "expected a number or variable");
    const std::size_t start = position();
    if (at_digit()) {
      std::string literal = read_digits();
      if (!at_end() && peek() == '/') {
        next();
        std::string den = read_digits();
        if (den.empty()) throw SyntaxError(position(), "expected denominator after '/'");
        literal += "/" + den;
      }
      Rational value;
      try {
        value = Rational::parse(literal);
      } catch (const Error& e) {
        throw SyntaxError(start, e.what());
      }
      coefficient *= value.pow(read_exponent());
      return;
    }
    if (at_variable()) {
      const char letter = next();
      std::string name(1, letter);
      int index = static_cast<int>(kLetters.find(letter));
      if (letter == 'x' && at_digit()) {
        const char digit = next();
        if (digit == '0') throw SyntaxError(start, "variables are numbered from x1");
        name.push_back(digit);
        index = digit - '1';
      }
      if (index >= n_)
        fail(Errc::UnknownVariable, "variable '" + name + "' at position " + std::to_string(start) +
                                        " is not among the " + std::to_string(n_) + " declared variables");
      exponents[static_cast<std::size_t>(index)] += static_cast<int>(read_exponent());
      return;
    }
    throw SyntaxError(start, std::string("unexpected '") + peek() + "'");
  }

  HomogeneousPolynomial finish() {
    HomogeneousPolynomial::Terms combined;
    for (const auto& [m, c] : terms_) {
      auto [it, inserted] = combined.try_emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) combined.erase(it);
      }
    }
    if (combined.empty()) fail(Errc::ZeroPolynomial, "polynomial '" + std::string(text_) + "' is zero");
    const int degree = combined.begin()->first.degree();
    for (const auto& [m, c] : combined)
      if (m.degree() != degree)
        fail(Errc::InhomogeneousPolynomial, "'" + std::string(text_) + "' mixes degrees " +
                                                std::to_string(degree) + " and " +
                                                std::to_string(m.degree()));
    return HomogeneousPolynomial(n_, combined);
  }

  std::string_view text_;
  int n_;
  std::size_t offset_;
  std::size_t pos_ = 0;
  std::vector<std::pair<Monomial, Rational>> terms_;
};

}  // namespace

HomogeneousPolynomial parse_polynomial(std::string_view text, int n) {
  if (n < 0) fail(Errc::NegativeDimension, "negative variable count");
  return PolynomialParser(text, n, 0).parse();
}

std::vector<HomogeneousPolynomial> parse_generators(std::string_view text, int n) {
  if (n < 0) fail(Errc::NegativeDimension, "negative variable count");
  std::vector<HomogeneousPolynomial> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(PolynomialParser(piece, n, start).parse());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace purebetti
