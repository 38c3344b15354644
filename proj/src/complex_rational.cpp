#include "pmindex/complex_rational.hpp"

#include <cctype>

#include "pmindex/errors.hpp"

namespace pmindex {

ComplexRational::ComplexRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string ComplexRational::to_string() const {
  std::string out = re_.get_str();
  if (im_ < 0) {
    out += "-" + mpq_class(-im_).get_str();
  } else {
    out += "+" + im_.get_str();
  }
  return out + "i";
}

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

mpq_class parse_rational(std::string_view token) {
  auto slash = token.find('/');
  std::string_view num = token.substr(0, slash);
  if (!is_integer_text(num)) {
    throw ParseError(0, "invalid rational '" + std::string(token) + "'");
  }
  mpq_class out(to_mpz(num));
  if (slash != std::string_view::npos) {
    std::string_view den = token.substr(slash + 1);
    if (!is_integer_text(den) || den.front() == '-' || den.front() == '+') {
      throw ParseError(0, "invalid rational '" + std::string(token) + "'");
    }
    mpz_class d = to_mpz(den);
    if (d == 0) throw ParseError(0, "zero denominator in '" + std::string(token) + "'");
    out = mpq_class(to_mpz(num), d);
    out.canonicalize();
  }
  return out;
}

ComplexRational parse_complex(std::string_view text) {
  if (text.size() < 2 || text.back() != 'i') {
    throw ParseError(0, "invalid complex '" + std::string(text) + "'");
  }
  std::string_view body = text.substr(0, text.size() - 1);
  // The sign that separates the parts is the last '+' or '-' not at the start.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    throw ParseError(0, "invalid complex '" + std::string(text) + "'");
  }
  mpq_class re = parse_rational(body.substr(0, split));
  mpq_class im = parse_rational(body.substr(split));
  return {re, im};
}

}  // namespace pmindex
