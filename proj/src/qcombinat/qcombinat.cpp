#include "shadowq/qcombinat.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <string>

#include "shadowq/error.hpp"

namespace shadowq {

QPoly quantum_int(int n) {
  if (n < 0) throw Error(ErrorKind::Domain, "quantum_int needs n >= 0, got " + std::to_string(n));
  std::vector<QPoly::Term> terms;
  for (int e = -n + 1; e <= n - 1; e += 2) terms.emplace_back(4 * e, GaussInt(1));
  return QPoly::from_terms(std::move(terms));
}

const QPoly& quantum_factorial(int n) {
  if (n < 0) throw Error(ErrorKind::Domain, "quantum_factorial needs n >= 0, got " + std::to_string(n));
  static std::mutex mu;
  // deque keeps references stable across growth
  static std::deque<QPoly> memo{QPoly(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (memo.size() <= static_cast<std::size_t>(n)) {
    const int k = static_cast<int>(memo.size());
    memo.push_back(memo.back() * quantum_int(k));
  }
  return memo[static_cast<std::size_t>(n)];
}

void MultinomialSpec::validate() const {
  for (int v : tops) {
    if (v < 0) throw Error(ErrorKind::Domain, "multinomial entries must be non-negative");
  }
  for (int v : bottoms) {
    if (v < 0) throw Error(ErrorKind::Domain, "multinomial entries must be non-negative");
  }
  const long st = std::accumulate(tops.begin(), tops.end(), 0L);
  const long sb = std::accumulate(bottoms.begin(), bottoms.end(), 0L);
  if (st != sb) {
    throw Error(ErrorKind::Domain,
                "multinomial sums differ: tops " + std::to_string(st) + " vs bottoms " + std::to_string(sb));
  }
}

QIntProduct& QIntProduct::mul_qint(int k, std::int64_t e) {
  if (k < 0) throw Error(ErrorKind::Domain, "negative quantum integer index");
  if (k == 1 || e == 0) return *this;
  auto& slot = exps_[k];
  slot += e;
  if (slot == 0) exps_.erase(k);
  return *this;
}

QIntProduct& QIntProduct::mul_factorial(int n, std::int64_t e) {
  if (n < 0) throw Error(ErrorKind::Domain, "negative factorial argument");
  for (int k = 2; k <= n; ++k) mul_qint(k, e);
  return *this;
}

QIntProduct& QIntProduct::operator*=(const QIntProduct& o) {
  sign_ *= o.sign_;
  for (const auto& [k, e] : o.exps_) mul_qint(k, e);
  return *this;
}

QIntProduct& QIntProduct::mul_pow(const QIntProduct& o, std::int64_t e) {
  if (o.sign_ < 0 && e % 2 != 0) sign_ = -sign_;
  for (const auto& [k, x] : o.exps_) mul_qint(k, x * e);
  return *this;
}

bool QIntProduct::is_zero() const {
  auto it = exps_.find(0);
  return it != exps_.end() && it->second > 0;
}

QPoly QIntProduct::numerator() const {
  QPoly p(sign_);
  for (const auto& [k, e] : exps_) {
    if (e > 0) p *= quantum_int(k).pow(static_cast<unsigned>(e));
  }
  return p;
}

QPoly QIntProduct::denominator() const {
  QPoly p(1);
  for (const auto& [k, e] : exps_) {
    if (e < 0) {
      if (k == 0) throw Error(ErrorKind::DivisionByZero, "[0] in a denominator");
      p *= quantum_int(k).pow(static_cast<unsigned>(-e));
    }
  }
  return p;
}

QIntProduct multinomial_product(const MultinomialSpec& s) {
  s.validate();
  QIntProduct p;
  for (int m : s.tops) p.mul_factorial(m, 1);
  for (int n : s.bottoms) p.mul_factorial(n, -1);
  return p;
}

QRat quantum_multinomial(const MultinomialSpec& s) { return multinomial_product(s).value(); }

OrderVal ord_qint_closed(int n) {
  if (n < 0) throw Error(ErrorKind::Domain, "ord_qint_closed needs n >= 0");
  if (n == 0) return OrderVal::infinity();
  return OrderVal(n % 2 == 0 ? 1 : 0);
}

OrderVal ord_factorial_closed(int n) {
  if (n < 0) throw Error(ErrorKind::Domain, "ord_factorial_closed needs n >= 0");
  return OrderVal(n / 2);
}

OrderVal ord_multinomial_closed(const MultinomialSpec& s) {
  s.validate();
  auto odd = [](const std::vector<int>& v) {
    return static_cast<std::int64_t>(std::count_if(v.begin(), v.end(), [](int x) { return x % 2 != 0; }));
  };
  return OrderVal(odd(s.bottoms) / 2 - odd(s.tops) / 2);
}

}  // namespace shadowq
