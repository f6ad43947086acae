#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "shadowq/gauss_int.hpp"

namespace shadowq {

/// Sparse Laurent polynomial in x = q^(1/4) with Gaussian-integer coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so the zero
/// polynomial is the empty term list and structural equality is value
/// equality.
class QPoly {
 public:
  using Term = std::pair<std::int64_t, GaussInt>;

  QPoly() = default;
  QPoly(GaussInt c);  // NOLINT(google-explicit-constructor)
  QPoly(long c) : QPoly(GaussInt(c)) {}  // NOLINT(google-explicit-constructor)

  /// c * x^exp
  static QPoly monomial(GaussInt c, std::int64_t exp);
  /// c * q^qexp, i.e. c * x^(4 qexp)
  static QPoly q_monomial(GaussInt c, std::int64_t qexp) { return monomial(std::move(c), 4 * qexp); }
  static QPoly x() { return monomial(1, 1); }
  static QPoly q() { return monomial(1, 4); }
  /// Combines duplicate exponents and drops zeros.
  static QPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  /// Smallest / largest exponent; undefined on zero.
  std::int64_t min_exp() const { return terms_.front().first; }
  std::int64_t max_exp() const { return terms_.back().first; }
  GaussInt coeff(std::int64_t exp) const;
  const GaussInt& lowest_coeff() const { return terms_.front().second; }
  const GaussInt& leading_coeff() const { return terms_.back().second; }
  /// True when every exponent is a multiple of 4, i.e. the value is a Laurent polynomial in q.
  bool on_q_grid() const;

  /// this * x^k
  QPoly shifted(std::int64_t k) const;
  QPoly pow(unsigned n) const;
  /// Image under x -> x^k, k != 0.
  QPoly substitute_power(std::int64_t k) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
  QPoly& operator*=(const GaussInt& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(QPoly a);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.terms_ == b.terms_; }

  /// Exact quotient this / d, or nullopt when d does not divide this.
  /// Requires the extreme coefficients of d to be units.
  std::optional<QPoly> exact_div(const QPoly& d) const;

  /// Multiplicity m of x^4 - i as a factor; requires a nonzero polynomial.
  /// When quotient is non-null it receives this / (x^4 - i)^m.
  int multiplicity_at_i(QPoly* quotient = nullptr) const;

  /// Value at q = i for polynomials on the q-grid, nullopt otherwise.
  std::optional<GaussInt> eval_q_at_i() const;

  /// Renders with variable name `var`, dividing exponents by `exp_div`.
  std::string str(const std::string& var = "x", std::int64_t exp_div = 1) const;
  friend std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.str(); }

 private:
  std::vector<Term> terms_;
};

/// x^4 - i, the factor controlling q = i.
const QPoly& q_minus_i();

/// Cyclotomic polynomial Phi_n(q) written in x (exponents scaled by 4). Memoized.
const QPoly& cyclotomic_q(int n);

}  // namespace shadowq
