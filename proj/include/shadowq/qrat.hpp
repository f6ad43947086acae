#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "shadowq/qpoly.hpp"

namespace shadowq {

/// Order of vanishing at q = i: an integer, or +inf for the zero function.
class OrderVal {
 public:
  constexpr OrderVal() = default;
  constexpr explicit OrderVal(std::int64_t v) : v_(v) {}
  static constexpr OrderVal infinity() { return OrderVal(Inf{}); }

  constexpr bool is_infinite() const { return !v_.has_value(); }
  /// Finite value; throws on +inf.
  std::int64_t value() const;

  friend OrderVal operator+(OrderVal a, OrderVal b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return OrderVal(*a.v_ + *b.v_);
  }
  friend bool operator==(const OrderVal& a, const OrderVal& b) = default;
  friend std::strong_ordering operator<=>(const OrderVal& a, const OrderVal& b) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    if (a.is_infinite()) return std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    return *a.v_ <=> *b.v_;
  }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const OrderVal& o) { return os << o.str(); }

 private:
  struct Inf {};
  constexpr explicit OrderVal(Inf) : v_(std::nullopt) {}
  std::optional<std::int64_t> v_{0};
};

/// Quotient of two QPoly values with a nonzero denominator.
///
/// Values are kept unreduced: construction only moves monomial factors of the
/// denominator into the numerator. Equality is decided by cross-multiplication.
class QRat {
 public:
  QRat() : den_(1) {}
  QRat(QPoly num);  // NOLINT(google-explicit-constructor)
  QRat(long c) : QRat(QPoly(c)) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when den is the zero polynomial.
  QRat(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);

  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  friend QRat operator-(const QRat& a) { return QRat(-a.num_, a.den_); }

  /// Integer power; negative exponents need a nonzero base.
  QRat pow(std::int64_t n) const;
  QRat inverse() const;

  /// a == b iff a.num * b.den == b.num * a.den.
  friend bool operator==(const QRat& a, const QRat& b);

  /// Removes common factors x^4 -/+ i and common cyclotomic factors Phi_d(q),
  /// then normalizes the denominator to lowest exponent 0 and a canonical unit.
  /// Full gcd reduction is not attempted for non-cyclotomic common factors.
  QRat reduced() const;

  OrderVal ord_at_i() const;

  /// Deterministic text form of the reduced value (see render_canonical).
  std::string render() const;

 private:
  void normalize_monomial();

  QPoly num_;
  QPoly den_;
};

OrderVal ord_at_i(const QRat& f);
std::string render_canonical(const QRat& f);

inline std::ostream& operator<<(std::ostream& os, const QRat& f) { return os << f.render(); }

/// Convenience constructors for exact values in q.
QRat q_power_rat(std::int64_t qexp);

}  // namespace shadowq
