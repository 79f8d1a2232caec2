#ifndef LEIB_SCALAR_HPP
#define LEIB_SCALAR_HPP

#include "leib/rational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace leib {

/// Ground field of a container. Scalars themselves are untagged; the tag
/// lives on Mat, Subspace and Algebra.
enum class Field { Q, Qi };

inline const char* to_string(Field f) { return f == Field::Q ? "Q" : "Qi"; }

inline Field parse_field(std::string_view s) {
  if (s == "Q") return Field::Q;
  if (s == "Qi") return Field::Qi;
  throw std::invalid_argument("unknown field '" + std::string(s) + "'");
}

class field_mismatch : public std::invalid_argument {
public:
  field_mismatch() : std::invalid_argument("mixed-field operation (Q vs Qi)") {}
};

inline void require_same_field(Field a, Field b) {
  if (a != b) throw field_mismatch();
}

/// Gaussian rational re + im*i. Over Q the imaginary part is always zero.
class Scalar {
public:
  Scalar() = default;
  Scalar(std::int64_t v) : re_(v) {} // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {} // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return {Rational(0), Rational(1)}; }

  /// Scalar token syntax: `p`, `p/q`, `p/q+r/si`, `r/si`, `i`, `-i`, `1+i`.
  static Scalar parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool fits(Field f) const { return f == Field::Qi || is_real(); }

  Scalar conj() const { return {re_, -im_}; }

  std::string to_string() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar operator-() const { return {-re_, -im_}; }
  friend Scalar operator+(const Scalar& a, const Scalar& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) return Scalar(a.re_ * b.re_);
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  Scalar inverse() const {
    if (im_.is_zero()) return Scalar(re_.inverse());
    const Rational norm = re_ * re_ + im_ * im_;
    return {re_ / norm, -im_ / norm};
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
  Rational re_;
  Rational im_;
};

inline std::string Scalar::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag;
  const Rational mag = im_.sign() < 0 ? -im_ : im_;
  if (!mag.is_one()) imag = mag.to_string();
  imag += "i";
  if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag;
  return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + imag;
}

inline Scalar Scalar::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty scalar");
  if (text.back() != 'i') return Scalar(Rational::parse(text));
  std::string_view body = text.substr(0, text.size() - 1);
  // split at the last sign that is not the leading one
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  Rational re;
  std::string_view imag = body;
  if (split != std::string_view::npos) {
    re = Rational::parse(body.substr(0, split));
    imag = body.substr(split);
  }
  Rational im;
  if (imag.empty() || imag == "+") {
    im = Rational(1);
  } else if (imag == "-") {
    im = Rational(-1);
  } else {
    im = Rational::parse(imag);
  }
  return {re, im};
}

} // namespace leib

#endif
