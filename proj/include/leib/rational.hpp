#ifndef LEIB_RATIONAL_HPP
#define LEIB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace leib {

/// Exact rational number of unbounded magnitude.
///
/// Values whose numerator and denominator fit in 64 bits are held inline and
/// operated on with 128-bit intermediates; anything larger spills into a
/// shared immutable boost::multiprecision::cpp_rational. The representation
/// is canonical: a value is stored inline whenever it fits, so equality is
/// structural.
class Rational {
public:
  using big_type = boost::multiprecision::cpp_rational;
  using big_int = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(std::int64_t n) : num_(n) { // NOLINT(google-explicit-constructor)
    if (n == INT64_MIN) assign_i128(n, 1);
  }
  Rational(std::int64_t n, std::int64_t d) { assign128(n, d); }

  static Rational from_big(const big_type& v) {
    Rational r;
    r.assign_big(v);
    return r;
  }

  /// Parses `p` or `p/q` with an optional leading sign. Throws
  /// std::invalid_argument on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? denominator(*big_) == 1 : den_ == 1; }
  int sign() const {
    if (big_) return big_->sign();
    return (num_ > 0) - (num_ < 0);
  }

  big_type to_big() const { return big_ ? *big_ : big_type(num_, den_); }
  big_int numerator_big() const { return big_ ? numerator(*big_) : big_int(num_); }
  big_int denominator_big() const { return big_ ? denominator(*big_) : big_int(den_); }

  std::string to_string() const {
    if (!big_) return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    auto n = numerator(*big_);
    auto d = denominator(*big_);
    return d == 1 ? n.str() : n.str() + "/" + d.str();
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false; // canonical: an inline value never equals a spilled one
  }

  friend bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    return a.to_big() < b.to_big();
  }

  Rational operator-() const {
    if (!big_ && num_ != INT64_MIN) {
      Rational r;
      r.num_ = -num_;
      r.den_ = den_;
      return r;
    }
    return from_big(-to_big());
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t s;
        if (!__builtin_add_overflow(a.num_, b.num_, &s)) return Rational(s);
      }
      const __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
      const __int128 d = static_cast<__int128>(a.den_) * b.den_;
      Rational r;
      r.assign_i128(n, d);
      return r;
    }
    return from_big(a.to_big() + b.to_big());
  }

  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    if (!a.big_ && !b.big_) {
      // cross-cancel first so both products stay reduced
      const std::int64_t g1 = std::gcd(a.num_, b.den_);
      const std::int64_t g2 = std::gcd(b.num_, a.den_);
      const __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
      const __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
      Rational r;
      if (r.fits(n, d)) {
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
      }
      r.assign_big(big_type(to_big_int(n), to_big_int(d)));
      return r;
    }
    return from_big(a.to_big() * b.to_big());
  }

  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (!big_) {
      Rational r;
      r.assign_i128(den_, num_);
      return r;
    }
    return from_big(1 / *big_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
  static big_int to_big_int(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    big_int out = static_cast<std::uint64_t>(u >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(u);
    return neg ? big_int(-out) : out;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static bool fits(__int128 n, __int128 d) {
    return n > INT64_MIN && n <= INT64_MAX && d <= INT64_MAX;
  }

  void assign128(std::int64_t n, std::int64_t d) { assign_i128(n, d); }

  void assign_i128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0) d = 1;
    big_.reset();
    if (fits(n, d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
    } else {
      assign_big(big_type(to_big_int(n), to_big_int(d)));
    }
  }

  void assign_big(const big_type& v) {
    const auto& n = numerator(v);
    const auto& d = denominator(v);
    static const big_int lo = big_int(INT64_MIN) + 1;
    static const big_int hi = big_int(INT64_MAX);
    if (n >= lo && n <= hi && d <= hi) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
    } else {
      num_ = 0;
      den_ = 1;
      big_ = std::make_shared<const big_type>(v);
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const big_type> big_;
};

inline Rational Rational::parse(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed rational '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::string_view body = text;
  bool neg = false;
  if (body.front() == '+' || body.front() == '-') {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_txt = body.substr(0, slash);
  const std::string_view den_txt = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (!digits(num_txt) || !digits(den_txt)) throw bad();
  big_int n{std::string(num_txt)};
  big_int d{std::string(den_txt)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (neg) n = -n;
  return from_big(big_type(n, d));
}

} // namespace leib

#endif
