#include "weylccr/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "weylccr/error.hpp"

namespace weylccr {

namespace {

class Parser {
 public:
  Parser(const std::string& text, FramePtr frame) : text_(text), frame_(std::move(frame)) {}

  Element parse() {
    Element out = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Element scalar(Complex c) const { return Element::unit(frame_) * c; }

  Element expr() {
    Element acc(frame_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Element first = term();
    acc += negate ? first * Complex(-1.0) : first;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Element term() {
    Element acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (peek() == '/') {
        const std::size_t at = pos_;
        ++pos_;
        const Element divisor = factor();
        const Monomial unit = Monomial::unit(frame_->dimension());
        if (divisor.size() != 1 || divisor.terms().begin()->first != unit) {
          pos_ = at;
          fail("division is only defined by scalars");
        }
        acc *= Complex(1.0) / divisor.terms().begin()->second;
      } else {
        break;
      }
    }
    return acc;
  }

  Element factor() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return factor() * Complex(-1.0);
    }
    if (c == '(') {
      ++pos_;
      Element inner = expr();
      expect(')');
      return inner;
    }
    if (c == 'u' || c == 'v') {
      ++pos_;
      expect('(');
      ExactVector coords = coordinates();
      expect(')');
      if (coords.size() != frame_->dimension())
        fail("expected " + std::to_string(frame_->dimension()) + " coordinates, got " + std::to_string(coords.size()));
      return c == 'u' ? Element::u(frame_, std::move(coords)) : Element::v(frame_, std::move(coords));
    }
    if (c == 'i') {
      ++pos_;
      return scalar(Complex(0.0, 1.0));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const double value = number();
      if (pos_ < text_.size() && text_[pos_] == 'i') {
        ++pos_;
        return scalar(Complex(0.0, value));
      }
      return scalar(Complex(value, 0.0));
    }
    if (c == '\0') fail("unexpected end of expression");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  double number() {
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || !std::isfinite(value)) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - begin);
    return value;
  }

  ExactVector coordinates() {
    ExactVector out;
    do {
      skip_space();
      const std::size_t start = pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
                                     std::isspace(static_cast<unsigned char>(text_[pos_]))))
        ++pos_;
      try {
        out.emplace_back(parse_rational(text_.substr(start, pos_ - start)));
      } catch (const Error&) {
        pos_ = start;
        fail("malformed rational coordinate");
      }
    } while (accept(','));
    return out;
  }

  const std::string& text_;
  FramePtr frame_;
  std::size_t pos_ = 0;
};

std::size_t infer_dimension(const std::string& text) {
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if ((text[i] != 'u' && text[i] != 'v')) continue;
    std::size_t j = i + 1;
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j >= text.size() || text[j] != '(') continue;
    std::size_t d = 1;
    for (++j; j < text.size() && text[j] != ')'; ++j)
      if (text[j] == ',') ++d;
    return d;
  }
  return 1;
}

}  // namespace

Element parse_element(const std::string& text, FramePtr frame) {
  if (!frame) frame = Frame::identity(infer_dimension(text));
  return Parser(text, std::move(frame)).parse();
}

}  // namespace weylccr
