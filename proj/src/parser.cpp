#include <cctype>
#include <string>

#include "mixsing/error.hpp"
#include "mixsing/mixed_polynomial.hpp"

namespace mixsing {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MixedPolynomial run() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    MixedPolynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

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
    if (!accept(c)) {
      if (pos_ == text_.size()) throw ParseError(std::string("expected '") + c + "' but input ended", pos_);
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  MixedPolynomial expr() {
    MixedPolynomial p = term();
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  MixedPolynomial term() {
    MixedPolynomial p = unary();
    for (;;) {
      if (accept('*')) {
        p *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        MixedPolynomial d = unary();
        if (!d.is_constant() || d.is_zero()) throw ParseError("division by a non-constant or zero", at);
        p = scale(p, GaussianRational(1) / d.terms()[0].coeff);
      } else {
        return p;
      }
    }
  }

  MixedPolynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  MixedPolynomial power() {
    MixedPolynomial base = primary();
    if (!accept('^')) return base;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '-') throw ParseError("negative exponent", pos_);
    std::size_t start = pos_;
    Exponent e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Exponent d = text_[pos_] - '0';
      if (__builtin_mul_overflow(e, Exponent{10}, &e) || __builtin_add_overflow(e, d, &e)) {
        throw ParseError("exponent overflow", start);
      }
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer exponent", pos_);
    try {
      return base.pow(e);
    } catch (const DomainError&) {
      throw ParseError("exponent overflow", start);
    }
  }

  MixedPolynomial primary() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MixedPolynomial p = expr();
      expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view id = text_.substr(start, pos_ - start);
      if (id == "z1") return MixedPolynomial::variable(Var::z1);
      if (id == "z2") return MixedPolynomial::variable(Var::z2);
      if (id == "i") return MixedPolynomial::constant(GaussianRational::i());
      if (id == "conj") {
        expect('(');
        MixedPolynomial p = expr();
        expect(')');
        return conjugate(p);
      }
      throw ParseError("unknown variable '" + std::string(id) + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  MixedPolynomial number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::size_t frac = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == frac) throw ParseError("expected digits after '.'", pos_);
    }
    return MixedPolynomial::constant(GaussianRational(parse_rational(std::string(text_.substr(start, pos_ - start)))));
  }
};

}  // namespace

MixedPolynomial parse(std::string_view text) { return Parser(text).run(); }

}  // namespace mixsing
