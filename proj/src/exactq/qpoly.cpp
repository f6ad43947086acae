#include "shadowq/qpoly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "shadowq/error.hpp"

namespace shadowq {

namespace {

// Dense coefficient window [lo, lo + size).
struct Dense {
  std::int64_t lo = 0;
  std::vector<GaussInt> c;

  static Dense from(const QPoly& p) {
    Dense d;
    if (p.is_zero()) return d;
    d.lo = p.min_exp();
    d.c.resize(static_cast<std::size_t>(p.max_exp() - p.min_exp() + 1));
    for (const auto& [e, v] : p.terms()) d.c[static_cast<std::size_t>(e - d.lo)] = v;
    return d;
  }

  QPoly to_poly() {
    std::vector<QPoly::Term> terms;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (!c[k].is_zero()) terms.emplace_back(lo + static_cast<std::int64_t>(k), std::move(c[k]));
    }
    return QPoly::from_terms(std::move(terms));
  }
};

}  // namespace

QPoly::QPoly(GaussInt c) {
  if (!c.is_zero()) terms_.emplace_back(0, std::move(c));
}

QPoly QPoly::monomial(GaussInt c, std::int64_t exp) {
  QPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(exp, std::move(c));
  return p;
}

QPoly QPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  QPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool QPoly::is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == GaussInt(1); }

GaussInt QPoly::coeff(std::int64_t exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, std::int64_t e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return {};
}

bool QPoly::on_q_grid() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first % 4 == 0; });
}

QPoly QPoly::shifted(std::int64_t k) const {
  QPoly p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

QPoly QPoly::pow(unsigned n) const {
  QPoly result(1);
  QPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

QPoly QPoly::substitute_power(std::int64_t k) const {
  if (k == 0) throw Error(ErrorKind::Domain, "substitute_power needs k != 0");
  QPoly p = *this;
  for (auto& t : p.terms_) t.first *= k;
  if (k < 0) std::reverse(p.terms_.begin(), p.terms_.end());
  return p;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.is_zero()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      GaussInt s = std::move(a->second);
      s += b->second;
      if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += -o; }

QPoly& QPoly::operator*=(const GaussInt& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

QPoly operator-(QPoly a) {
  for (auto& t : a.terms_) t.second = -t.second;
  return a;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial() && b.terms_[0].second == GaussInt(1)) return a.shifted(b.terms_[0].first);
  if (a.is_monomial() && a.terms_[0].second == GaussInt(1)) return b.shifted(a.terms_[0].first);
  Dense acc;
  acc.lo = a.min_exp() + b.min_exp();
  acc.c.resize(static_cast<std::size_t>(a.max_exp() + b.max_exp() - acc.lo + 1));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      acc.c[static_cast<std::size_t>(ea + eb - acc.lo)].add_mul(ca, cb);
    }
  }
  return acc.to_poly();
}

std::optional<QPoly> QPoly::exact_div(const QPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (is_zero()) return QPoly{};
  if (!d.leading_coeff().is_unit() || !d.lowest_coeff().is_unit()) {
    throw Error(ErrorKind::Unsupported, "exact_div needs unit extreme coefficients");
  }
  const std::int64_t ddeg = d.max_exp() - d.min_exp();
  const std::int64_t pdeg = max_exp() - min_exp();
  if (pdeg < ddeg) return std::nullopt;
  // Work with x^-min shifted copies so both sides are ordinary polynomials.
  Dense rem = Dense::from(shifted(-min_exp()));
  const GaussInt lead_inv = d.leading_coeff().unit_inverse();
  std::vector<Term> dt;
  for (const auto& [e, c] : d.terms_) dt.emplace_back(e - d.min_exp(), c);
  std::vector<GaussInt> quot(static_cast<std::size_t>(pdeg - ddeg + 1));
  for (std::int64_t k = pdeg; k >= ddeg; --k) {
    GaussInt& top = rem.c[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    GaussInt qc = top * lead_inv;
    for (const auto& [e, c] : dt) rem.c[static_cast<std::size_t>(k - ddeg + e)].sub_mul(qc, c);
    quot[static_cast<std::size_t>(k - ddeg)] = std::move(qc);
  }
  for (std::int64_t k = 0; k < ddeg; ++k) {
    if (!rem.c[static_cast<std::size_t>(k)].is_zero()) return std::nullopt;
  }
  Dense q{min_exp() - d.min_exp(), std::move(quot)};
  return q.to_poly();
}

int QPoly::multiplicity_at_i(QPoly* quotient) const {
  if (is_zero()) throw Error(ErrorKind::Domain, "multiplicity of the zero polynomial is infinite");
  const std::int64_t base = min_exp();
  std::vector<GaussInt> a = Dense::from(*this).c;
  int m = 0;
  while (a.size() > 4) {
    // a = (x^4 - i) B + R, top-down: B[k-4] = a[k] + i B[k], R[k] = a[k] + i B[k] for k < 4.
    const std::size_t n = a.size() - 1;
    std::vector<GaussInt> b(n - 3);
    for (std::size_t k = n; k >= 4; --k) {
      GaussInt v = a[k];
      if (k < b.size()) v += b[k].times_i();
      b[k - 4] = std::move(v);
    }
    bool exact = true;
    for (std::size_t k = 0; k < 4 && exact; ++k) {
      GaussInt r = a[k];
      if (k < b.size()) r += b[k].times_i();
      exact = r.is_zero();
    }
    if (!exact) break;
    a = std::move(b);
    ++m;
  }
  if (quotient != nullptr) {
    Dense q{base, std::move(a)};
    *quotient = q.to_poly();
  }
  return m;
}

std::optional<GaussInt> QPoly::eval_q_at_i() const {
  if (!on_q_grid()) return std::nullopt;
  GaussInt sum;
  for (const auto& [e, c] : terms_) {
    std::int64_t k = ((e / 4) % 4 + 4) % 4;
    GaussInt v = c;
    for (std::int64_t j = 0; j < k; ++j) v = v.times_i();
    sum += v;
  }
  return sum;
}

std::string QPoly::str(const std::string& var, std::int64_t exp_div) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const std::int64_t e = it->first / exp_div;
    GaussInt c = it->second;
    bool negative = false;
    if (c.is_real() && sgn(c.re()) < 0) {
      negative = true;
      c = -c;
    } else if (sgn(c.re()) == 0 && sgn(c.im()) < 0) {
      negative = true;
      c = -c;
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string coeff;
    if (c.is_real()) {
      coeff = c.re() == 1 && e != 0 ? "" : c.re().get_str();
    } else if (sgn(c.re()) == 0) {
      coeff = c.str();
    } else {
      coeff = "(" + c.str() + ")";
    }
    os << coeff;
    if (e == 0) continue;
    os << var;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

const QPoly& q_minus_i() {
  static const QPoly p = QPoly::monomial(1, 4) - QPoly(GaussInt::i());
  return p;
}

const QPoly& cyclotomic_q(int n) {
  if (n < 1) throw Error(ErrorKind::Domain, "cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<int, QPoly> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  // q^n - 1 divided by Phi_d for every proper divisor d.
  QPoly p = QPoly::q_monomial(1, n) - QPoly(1);
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = *p.exact_div(cyclotomic_q(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(n, std::move(p)).first->second;
}

}  // namespace shadowq
