#include "shadowq/qrat.hpp"

#include <array>

#include "shadowq/error.hpp"

namespace shadowq {

std::int64_t OrderVal::value() const {
  if (!v_) throw Error(ErrorKind::Domain, "OrderVal is +inf");
  return *v_;
}

std::string OrderVal::str() const { return v_ ? std::to_string(*v_) : std::string("+inf"); }

namespace {

bool unit_extremes(const QPoly& p) { return p.leading_coeff().is_unit() && p.lowest_coeff().is_unit(); }

// Quotient big / small when it is exact and cheap to test.
std::optional<QPoly> try_divide(const QPoly& big, const QPoly& small) {
  if (small.is_one()) return big;
  if (!unit_extremes(small)) return std::nullopt;
  if (big.max_exp() - big.min_exp() < small.max_exp() - small.min_exp()) return std::nullopt;
  return big.exact_div(small);
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// Divides both sides by f as often as it divides both.
void cancel_factor(QPoly& num, QPoly& den, const QPoly& f) {
  while (!den.is_zero() && den.max_exp() - den.min_exp() >= f.max_exp() - f.min_exp()) {
    auto d = den.exact_div(f);
    if (!d) return;
    auto n = num.exact_div(f);
    if (!n) return;
    num = std::move(*n);
    den = std::move(*d);
  }
}

}  // namespace

QRat::QRat(QPoly num) : num_(std::move(num)), den_(1) {}

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "QRat with zero denominator");
  normalize_monomial();
}

void QRat::normalize_monomial() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  if (den_.is_monomial() && den_.leading_coeff().is_unit()) {
    num_ = num_.shifted(-den_.min_exp());
    num_ *= den_.leading_coeff().unit_inverse();
    den_ = QPoly(1);
    return;
  }
  const std::int64_t k = den_.min_exp();
  if (k != 0) {
    num_ = num_.shifted(-k);
    den_ = den_.shifted(-k);
  }
}

QRat& QRat::operator+=(const QRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else if (auto k = try_divide(o.den_, den_)) {
    num_ = num_ * *k + o.num_;
    den_ = o.den_;
  } else if (auto k2 = try_divide(den_, o.den_)) {
    num_ += o.num_ * *k2;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize_monomial();
  return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize_monomial();
  return *this;
}

QRat& QRat::operator/=(const QRat& o) { return *this *= o.inverse(); }

QRat QRat::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of the zero function");
  return QRat(den_, num_);
}

QRat QRat::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  QRat r;
  r.num_ = num_.pow(static_cast<unsigned>(n));
  r.den_ = den_.pow(static_cast<unsigned>(n));
  r.normalize_monomial();
  return r;
}

bool operator==(const QRat& a, const QRat& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

QRat QRat::reduced() const {
  if (is_zero()) return {};
  QPoly n = num_;
  QPoly d = den_;
  const QPoly q_plus_i = QPoly::monomial(1, 4) + QPoly(GaussInt::i());
  cancel_factor(n, d, q_minus_i());
  cancel_factor(n, d, q_plus_i);
  if (!d.is_monomial()) {
    const std::int64_t span_q = (d.max_exp() - d.min_exp()) / 4;
    for (std::int64_t m = 1; m <= 2 * span_q + 4; ++m) {
      if (d.is_monomial()) break;
      if (euler_phi(m) > (d.max_exp() - d.min_exp()) / 4) continue;
      cancel_factor(n, d, cyclotomic_q(static_cast<int>(m)));
    }
  }
  QRat r;
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  r.normalize_monomial();
  // Canonical associate: leading denominator coefficient in the first quadrant.
  const std::array<GaussInt, 4> units{GaussInt(1), GaussInt::i(), GaussInt(-1), -GaussInt::i()};
  for (const auto& u : units) {
    GaussInt lead = r.den_.leading_coeff() * u;
    if (sgn(lead.re()) > 0 && sgn(lead.im()) >= 0) {
      r.num_ *= u;
      r.den_ *= u;
      break;
    }
  }
  return r;
}

OrderVal QRat::ord_at_i() const {
  if (is_zero()) return OrderVal::infinity();
  return OrderVal(num_.multiplicity_at_i() - den_.multiplicity_at_i());
}

std::string QRat::render() const {
  const QRat r = reduced();
  const bool q_grid = r.num_.on_q_grid() && r.den_.on_q_grid();
  const std::string var = q_grid ? "q" : "x";
  const std::int64_t div = q_grid ? 4 : 1;
  std::string out;
  if (r.den_.is_one()) {
    out = r.num_.str(var, div);
  } else {
    auto wrap = [&](const QPoly& p) {
      std::string s = p.str(var, div);
      return p.size() > 1 ? "(" + s + ")" : s;
    };
    out = wrap(r.num_) + "/" + wrap(r.den_);
  }
  if (!q_grid) out += "  [x = q^(1/4)]";
  return out;
}

OrderVal ord_at_i(const QRat& f) { return f.ord_at_i(); }
std::string render_canonical(const QRat& f) { return f.render(); }

QRat q_power_rat(std::int64_t qexp) { return QRat(QPoly::q_monomial(1, qexp)); }

}  // namespace shadowq
