#include "boundscope/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "boundscope/errors.hpp"

namespace boundscope {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  Polynomial parse() {
    Polynomial result = expr();
    skip_space();
    if (pos_ != text_.size()) fail_unexpected();
    return result;
  }

 private:
  Polynomial expr() {
    Polynomial result = term();
    for (;;) {
      const char op = peek();
      if (op != '+' && op != '-') return result;
      ++pos_;
      Polynomial rhs = term();
      if (op == '+') result += rhs;
      else result -= rhs;
    }
  }

  Polynomial term() {
    Polynomial result = factor();
    for (;;) {
      const char op = peek();
      if (op != '*' && op != '/') return result;
      const std::size_t op_pos = pos_++;
      Polynomial rhs = factor();
      if (op == '*') {
        check_degree(result.degree() + rhs.degree(), op_pos);
        result = result * rhs;
        continue;
      }
      if (!rhs.is_constant()) throw ParseError("division by a non-constant expression", op_pos);
      const double divisor = rhs.coefficient(ExponentVector(n_));
      if (divisor == 0.0) throw ParseError("division by zero", op_pos);
      result *= 1.0 / divisor;
    }
  }

  Polynomial factor() {
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    Polynomial base = atom();
    if (peek() != '^') return base;
    const std::size_t caret = pos_++;
    const std::uint64_t k = exponent_chain();
    if (k > kMaxParsedDegree || (base.degree() != 0 && k * base.degree() > kMaxParsedDegree)) {
      throw ParseError("exponent too large", caret);
    }
    return power(base, static_cast<unsigned>(k));
  }

  // uint ('^' uint)*, evaluated right to left.
  std::uint64_t exponent_chain() {
    skip_space();
    const std::size_t at = pos_;
    const std::uint64_t base = exponent_literal();
    if (peek() != '^') return base;
    ++pos_;
    const std::uint64_t k = exponent_chain();
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
      if (base != 0 && result > std::numeric_limits<std::uint32_t>::max() / base) {
        throw ParseError("exponent too large", at);
      }
      result *= base;
      if (base <= 1) break;
    }
    return base == 0 && k > 0 ? 0 : result;
  }

  std::uint64_t exponent_literal() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      throw ParseError("exponent must be a nonnegative integer", start);
    }
    const std::uint64_t value = unsigned_integer("exponent must be a nonnegative integer");
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
      throw ParseError("exponent must be a nonnegative integer", start);
    }
    return value;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      const std::size_t open = pos_++;
      Polynomial inner = expr();
      if (peek() != ')') {
        if (pos_ >= text_.size()) throw ParseError("unmatched '('", open);
        fail_unexpected();
      }
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      const std::size_t start = pos_++;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("variable name must be x followed by an index", start);
      }
      const std::uint64_t index = unsigned_integer("bad variable index");
      if (index == 0 || index > n_) {
        throw ParseError("variable x" + std::to_string(index) + " outside x1..x" + std::to_string(n_),
                         start);
      }
      return Polynomial::variable(n_, static_cast<std::size_t>(index - 1));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return Polynomial::constant(n_, number());
    fail_unexpected();
  }

  double number() {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    auto digits = [&] {
      const std::size_t from = end;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      return end - from;
    };
    std::size_t mantissa = digits();
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      mantissa += digits();
    }
    if (mantissa == 0) throw ParseError("malformed number", start);
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      ++end;
      if (end < text_.size() && (text_[end] == '+' || text_[end] == '-')) ++end;
      if (digits() == 0) throw ParseError("malformed number exponent", start);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + end, value);
    if (ec != std::errc{} || !std::isfinite(value)) throw ParseError("number out of range", start);
    pos_ = end;
    return value;
  }

  std::uint64_t unsigned_integer(const char* message) {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec == std::errc::result_out_of_range) throw ParseError("integer out of range", start);
    if (ec != std::errc{}) throw ParseError(message, start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  void check_degree(std::uint64_t degree, std::size_t at) const {
    if (degree > kMaxParsedDegree) throw ParseError("expression degree too large", at);
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail_unexpected() const {
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    std::string message = "unexpected character '";
    message += text_[pos_];
    message += '\'';
    if (text_[pos_] == 'x' || text_[pos_] == '(') message += " (implicit multiplication is not supported)";
    throw ParseError(message, pos_);
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t n) {
  if (n == 0) throw InputError("dimension must be positive");
  return Parser(text, n).parse();
}

}  // namespace boundscope
