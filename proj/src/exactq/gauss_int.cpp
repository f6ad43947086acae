#include "shadowq/gauss_int.hpp"

#include "shadowq/error.hpp"

namespace shadowq {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::Inadmissible: return "inadmissible";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Unbounded: return "unbounded";
    case ErrorKind::Compile: return "compile";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Incomplete: return "incomplete";
  }
  return "unknown";
}

bool GaussInt::is_unit() const {
  if (sgn(im_) == 0) return abs(re_) == 1;
  if (sgn(re_) == 0) return abs(im_) == 1;
  return false;
}

GaussInt& GaussInt::operator*=(const GaussInt& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  mpz_class re = re_ * o.re_ - im_ * o.im_;
  mpz_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

void GaussInt::add_mul(const GaussInt& a, const GaussInt& b) {
  mpz_addmul(re_.get_mpz_t(), a.re_.get_mpz_t(), b.re_.get_mpz_t());
  if (!a.is_real() && !b.is_real()) {
    mpz_submul(re_.get_mpz_t(), a.im_.get_mpz_t(), b.im_.get_mpz_t());
  }
  if (!b.is_real()) mpz_addmul(im_.get_mpz_t(), a.re_.get_mpz_t(), b.im_.get_mpz_t());
  if (!a.is_real()) mpz_addmul(im_.get_mpz_t(), a.im_.get_mpz_t(), b.re_.get_mpz_t());
}

void GaussInt::sub_mul(const GaussInt& a, const GaussInt& b) {
  mpz_submul(re_.get_mpz_t(), a.re_.get_mpz_t(), b.re_.get_mpz_t());
  if (!a.is_real() && !b.is_real()) {
    mpz_addmul(re_.get_mpz_t(), a.im_.get_mpz_t(), b.im_.get_mpz_t());
  }
  if (!b.is_real()) mpz_submul(im_.get_mpz_t(), a.re_.get_mpz_t(), b.im_.get_mpz_t());
  if (!a.is_real()) mpz_submul(im_.get_mpz_t(), a.im_.get_mpz_t(), b.re_.get_mpz_t());
}

GaussInt GaussInt::unit_inverse() const {
  if (!is_unit()) throw Error(ErrorKind::Domain, "unit_inverse of non-unit " + str());
  // 1/u = conj(u) for |u| = 1
  return conj();
}

std::string GaussInt::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return imag;
  if (sgn(im_) > 0) return re_.get_str() + "+" + imag;
  return re_.get_str() + imag;
}

}  // namespace shadowq
