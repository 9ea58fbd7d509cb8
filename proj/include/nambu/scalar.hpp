#pragma once

#include <concepts>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace nambu {

/// Exact rational number. Backed by GMP; always in lowest terms.
/// There is deliberately no constructor from float or double.
class Scalar {
 public:
  Scalar() = default;
  template <std::integral T>
  Scalar(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  Scalar(float) = delete;
  Scalar(double) = delete;
  Scalar(long double) = delete;

  /// Parses "p", "-p" or "p/q". Throws ParseError on junk or a zero denominator.
  static Scalar parse(std::string_view text);

  std::string str() const;
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  /// True iff this is the square of a rational.
  bool is_square() const;
  /// Exact rational square root; throws if not a square.
  Scalar sqrt() const;

  Scalar operator-() const { return Scalar(mpq_class(-q_)); }
  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.q_ == b.q_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.q_ < b.q_; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return a.q_ > b.q_; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return a.q_ <= b.q_; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return a.q_ >= b.q_; }

  /// a += b * c without temporaries.
  static void fma(Scalar& a, const Scalar& b, const Scalar& c);

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace nambu
