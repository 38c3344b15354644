#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pmindex {

/// re + im·i with exact GMP rationals, always in canonical reduced form.
class ComplexRational {
 public:
  ComplexRational() = default;
  ComplexRational(mpq_class re, mpq_class im = 0);  // NOLINT(google-explicit-constructor)
  ComplexRational(long re) : ComplexRational(mpq_class(re)) {}  // NOLINT

  static ComplexRational i() { return {0, 1}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }

  ComplexRational& operator+=(const ComplexRational& o);
  ComplexRational& operator-=(const ComplexRational& o);
  ComplexRational& operator*=(const ComplexRational& o);

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) {
    return a += b;
  }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) {
    return a -= b;
  }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) {
    return a *= b;
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "<re>+<im>i" or "<re>-<|im|>i" with each part "p" or "p/q", e.g. "0+1i".
  std::string to_string() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

/// "<int>" or "<int>/<int>" with a nonzero denominator; the result is reduced.
/// Throws ParseError (line 0) otherwise.
mpq_class parse_rational(std::string_view token);

/// Inverse of ComplexRational::to_string; also accepts "p/q+r/si" forms such
/// as "0/1+1/1i".
ComplexRational parse_complex(std::string_view text);

}  // namespace pmindex
