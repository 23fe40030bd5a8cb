#include "mixsing/gaussian_rational.hpp"

#include <cctype>

#include "mixsing/error.hpp"

namespace mixsing {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class m = re_ * o.im_ + im_ * o.re_;
  re_ = r;
  im_ = m;
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class m = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = r;
  im_ = m;
  return *this;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

std::string GaussianRational::to_string() const {
  if (is_real()) return rational_to_string(re_);
  std::string im_part;
  if (im_ == 1) {
    im_part = "i";
  } else if (im_ == -1) {
    im_part = "-i";
  } else {
    im_part = rational_to_string(im_) + "*i";
  }
  if (sgn(re_) == 0) return im_part;
  std::string out = "(" + rational_to_string(re_);
  if (sgn(im_) > 0) out += "+";
  return out + im_part + ")";
}

mpq_class parse_rational(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
  auto digits = [&](std::string& out) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) out += text[pos++];
    return pos > start;
  };
  std::string whole, frac, den;
  if (!digits(whole)) throw DomainError("not a rational number: '" + text + "'");
  mpq_class value;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    digits(frac);
    mpz_class num(whole + frac);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = mpq_class(num, scale);
  } else if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (!digits(den)) throw DomainError("not a rational number: '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw DomainError("zero denominator in '" + text + "'");
    value = mpq_class(mpz_class(whole), d);
  } else {
    value = mpq_class(mpz_class(whole));
  }
  if (pos != text.size()) throw DomainError("not a rational number: '" + text + "'");
  value.canonicalize();
  return negative ? mpq_class(-value) : value;
}

}  // namespace mixsing
