#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "shadowq/qpoly.hpp"
#include "shadowq/qrat.hpp"

namespace shadowq {

/// Quantum integer [n] = q^(1-n) + q^(3-n) + ... + q^(n-1); [0] = 0.
QPoly quantum_int(int n);

/// [n]! = [1][2]...[n], [0]! = 1. Memoized.
const QPoly& quantum_factorial(int n);

/// Generalized multinomial [m_1..m_h ; n_1..n_k] = prod [m_i]! / prod [n_j]!.
struct MultinomialSpec {
  std::vector<int> tops;
  std::vector<int> bottoms;

  /// Throws Domain on negative entries or when the two sums differ.
  void validate() const;
};

QRat quantum_multinomial(const MultinomialSpec& s);

/// A signed product of quantum integers prod [k]^e_k, e_k of either sign.
///
/// Factorial quotients collapse to this form exactly, which keeps
/// multinomials small before they are expanded into polynomials.
class QIntProduct {
 public:
  QIntProduct() = default;

  QIntProduct& mul_qint(int k, std::int64_t e = 1);
  QIntProduct& mul_factorial(int n, std::int64_t e = 1);
  QIntProduct& negate() {
    sign_ = -sign_;
    return *this;
  }
  QIntProduct& operator*=(const QIntProduct& o);
  /// Multiplies by o^e for any integer e.
  QIntProduct& mul_pow(const QIntProduct& o, std::int64_t e);

  int sign() const { return sign_; }
  /// Exponent of [k]; [1] = 1 is never stored.
  const std::map<int, std::int64_t>& exponents() const { return exps_; }
  /// True when a [0] factor appears with positive exponent.
  bool is_zero() const;

  /// Product of the positive-exponent factors, with the sign.
  QPoly numerator() const;
  /// Product of the negative-exponent factors.
  QPoly denominator() const;
  QRat value() const { return QRat(numerator(), denominator()); }

 private:
  int sign_ = 1;
  std::map<int, std::int64_t> exps_;
};

QIntProduct multinomial_product(const MultinomialSpec& s);

/// Closed-form orders at q = i.
OrderVal ord_qint_closed(int n);
OrderVal ord_factorial_closed(int n);
/// floor(#odd bottoms / 2) - floor(#odd tops / 2)
OrderVal ord_multinomial_closed(const MultinomialSpec& s);

}  // namespace shadowq
