#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace shadowq {

/// Gaussian integer re + im*i with arbitrary-precision components.
class GaussInt {
 public:
  GaussInt() = default;
  GaussInt(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussInt(mpz_class re, mpz_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussInt i() { return {0, 1}; }

  const mpz_class& re() const { return re_; }
  const mpz_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  /// True for the four units 1, -1, i, -i.
  bool is_unit() const;

  GaussInt conj() const { return {re_, -im_}; }
  /// Multiplication by i, i.e. a quarter turn.
  GaussInt times_i() const { return {-im_, re_}; }
  mpz_class norm() const { return re_ * re_ + im_ * im_; }

  GaussInt& operator+=(const GaussInt& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussInt& operator-=(const GaussInt& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussInt& operator*=(const GaussInt& o);

  /// this += a * b without temporaries for the common real case.
  void add_mul(const GaussInt& a, const GaussInt& b);
  void sub_mul(const GaussInt& a, const GaussInt& b);

  friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
  friend GaussInt operator-(const GaussInt& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussInt& a, const GaussInt& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Inverse of a unit; throws for non-units.
  GaussInt unit_inverse() const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const GaussInt& z) { return os << z.str(); }

 private:
  mpz_class re_{0};
  mpz_class im_{0};
};

}  // namespace shadowq
