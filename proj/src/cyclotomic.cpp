#include "qqg/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qqg {

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

// Division with remainder; the uses below are all exact or reductions by a
// monic modulus.
void poly_divmod(Poly num, const Poly& den, Poly& quot, Poly& rem) {
  trim(num);
  quot.assign(num.size(), Rational(0));
  while (num.size() >= den.size() && !num.empty()) {
    Rational c = num.back() / den.back();
    size_t shift = num.size() - den.size();
    quot[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    trim(num);
  }
  rem = std::move(num);
  trim(quot);
}

Poly poly_mod(Poly a, const Poly& mod) {
  Poly q, r;
  if (a.size() < mod.size()) return a;
  poly_divmod(std::move(a), mod, q, r);
  return r;
}

}  // namespace

std::vector<Rational> cyclotomic_poly(long n) {
  if (n < 1) fail("BadParameters", "cyclotomic_poly needs N >= 1");
  static std::map<long, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  // Build Phi_d for every divisor d of n in increasing order, so each step
  // only divides by already-computed polynomials.
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    Poly num(d + 1, Rational(0));
    num[0] = -1;
    num[d] = 1;
    for (long e = 1; e < d; ++e) {
      if (d % e != 0) continue;
      Poly q, r;
      poly_divmod(std::move(num), cache.at(e), q, r);
      num = std::move(q);
    }
    cache[d] = std::move(num);
  }
  return cache.at(n);
}

RootExp::RootExp(long order_, long exp_) : order(order_) {
  if (order_ < 1) fail("BadParameters", "root order must be positive");
  exp = ((exp_ % order) + order) % order;
}

RootExp RootExp::operator*(const RootExp& o) const {
  if (order != o.order) {
    long n = lcm_long(order, o.order);
    return embed(n) * o.embed(n);
  }
  return RootExp(order, exp + o.exp);
}

RootExp RootExp::inverse() const { return RootExp(order, -exp); }

RootExp RootExp::pow(long k) const {
  long e = ((exp % order) * (k % order)) % order;
  return RootExp(order, e);
}

long RootExp::ord() const { return order / gcd_long(order, exp); }

RootExp RootExp::embed(long m) const {
  if (m % order != 0) fail("OrderMismatch", "cannot embed root into non-multiple order");
  return RootExp(m, exp * (m / order));
}

bool RootExp::operator==(const RootExp& o) const {
  if (order == o.order) return exp == o.exp;
  long n = lcm_long(order, o.order);
  return embed(n).exp == o.embed(n).exp;
}

std::string RootExp::str() const {
  if (exp == 0) return "1";
  std::ostringstream os;
  os << "zeta" << order << "^" << exp;
  return os.str();
}

RootExp root_in(long n, long t, long k) {
  if (t < 1 || n < 1 || n % t != 0)
    fail("OrderMismatch", "root order " + std::to_string(t) + " does not divide arena order " +
                              std::to_string(n));
  return RootExp(n, (n / t) * (((k % t) + t) % t));
}

CycField::CycField(long n) : n_(n) {
  if (n < 1 || n > 100000) fail("BadParameters", "cyclotomic order out of range");
  phi_ = cyclotomic_poly(n);
  deg_ = static_cast<long>(phi_.size()) - 1;
  powers_.resize(n);
  // x^k for k < deg is trivial; higher powers reduce by the monic modulus.
  std::vector<Rational> cur(1, Rational(1));
  for (long k = 0; k < n; ++k) {
    powers_[k] = cur;
    powers_[k].resize(deg_, Rational(0));
    // multiply by x
    cur.insert(cur.begin(), Rational(0));
    if (static_cast<long>(cur.size()) > deg_) cur = poly_mod(std::move(cur), phi_);
  }
}

FieldPtr CycField::get(long n) {
  static std::map<long, FieldPtr> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<CycField>(n);
  return slot;
}

void CycScalar::check_same(const CycScalar& o) const {
  if (!field_ || !o.field_) fail("BadParameters", "scalar without field");
  if (field_->order() != o.field_->order())
    fail("OrderMismatch", "mixing cyclotomic arenas " + std::to_string(field_->order()) + " and " +
                              std::to_string(o.field_->order()));
}

CycScalar CycScalar::zero(FieldPtr f) {
  CycScalar s;
  s.field_ = std::move(f);
  s.kind_ = Kind::Poly;
  return s;
}

CycScalar CycScalar::one(FieldPtr f) { return scaled_root(std::move(f), Rational(1), 0); }

CycScalar CycScalar::from_rational(FieldPtr f, const Rational& r) {
  if (r == 0) return zero(std::move(f));
  return scaled_root(std::move(f), r, 0);
}

CycScalar CycScalar::from_root(FieldPtr f, const RootExp& r) {
  RootExp e = r.order == f->order() ? r : r.embed(f->order());
  return scaled_root(std::move(f), Rational(1), e.exp);
}

CycScalar CycScalar::scaled_root(FieldPtr f, const Rational& c, long exp) {
  if (c == 0) return zero(std::move(f));
  CycScalar s;
  long n = f->order();
  s.field_ = std::move(f);
  s.kind_ = Kind::Root;
  s.coeff_ = c;
  s.exp_ = ((exp % n) + n) % n;
  return s;
}

CycScalar CycScalar::from_coeffs(FieldPtr f, std::vector<Rational> coeffs) {
  coeffs.resize(f->degree(), Rational(0));
  return make_poly(std::move(f), std::move(coeffs));
}

CycScalar CycScalar::make_poly(FieldPtr f, std::vector<Rational> p) {
  p.resize(f->degree(), Rational(0));
  // collapse back to root form when the vector is a scaled power-basis root
  long nz = -1;
  bool single = true;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) {
      if (nz >= 0) {
        single = false;
        break;
      }
      nz = static_cast<long>(i);
    }
  }
  if (single) {
    if (nz < 0) return zero(std::move(f));
    return scaled_root(std::move(f), p[nz], nz);
  }
  CycScalar s;
  s.field_ = std::move(f);
  s.kind_ = Kind::Poly;
  s.poly_ = std::move(p);
  return s;
}

std::vector<Rational> CycScalar::promote() const {
  std::vector<Rational> p(field_->degree(), Rational(0));
  if (kind_ == Kind::Poly) {
    for (size_t i = 0; i < poly_.size(); ++i) p[i] = poly_[i];
    return p;
  }
  const auto& pw = field_->power(exp_);
  for (size_t i = 0; i < pw.size(); ++i) p[i] = coeff_ * pw[i];
  return p;
}

std::vector<Rational> CycScalar::coeffs() const { return promote(); }

bool CycScalar::is_zero() const {
  if (kind_ == Kind::Root) return false;
  for (const auto& c : poly_)
    if (c != 0) return false;
  return true;
}

bool CycScalar::is_one() const { return kind_ == Kind::Root && exp_ == 0 && coeff_ == 1; }

bool CycScalar::is_rational() const {
  if (kind_ == Kind::Root) return exp_ == 0;
  for (size_t i = 1; i < poly_.size(); ++i)
    if (poly_[i] != 0) return false;
  return true;
}

CycScalar CycScalar::operator+(const CycScalar& o) const {
  check_same(o);
  if (kind_ == Kind::Root && o.kind_ == Kind::Root && exp_ == o.exp_) {
    Rational c = coeff_ + o.coeff_;
    if (c == 0) return zero(field_);
    return scaled_root(field_, c, exp_);
  }
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  auto a = promote();
  auto b = o.promote();
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return make_poly(field_, std::move(a));
}

CycScalar CycScalar::operator-() const {
  if (kind_ == Kind::Root) return scaled_root(field_, -coeff_, exp_);
  auto p = poly_;
  for (auto& c : p) c = -c;
  CycScalar s;
  s.field_ = field_;
  s.kind_ = Kind::Poly;
  s.poly_ = std::move(p);
  return s;
}

CycScalar CycScalar::operator-(const CycScalar& o) const { return *this + (-o); }

CycScalar CycScalar::operator*(const CycScalar& o) const {
  check_same(o);
  if (kind_ == Kind::Root && o.kind_ == Kind::Root)
    return scaled_root(field_, coeff_ * o.coeff_, exp_ + o.exp_);
  if (is_zero() || o.is_zero()) return zero(field_);
  if (kind_ == Kind::Root || o.kind_ == Kind::Root) {
    // scaled power times dense vector: shift through the power table
    const CycScalar& root = kind_ == Kind::Root ? *this : o;
    const CycScalar& dense = kind_ == Kind::Root ? o : *this;
    long n = field_->order();
    std::vector<Rational> acc(field_->degree(), Rational(0));
    auto dp = dense.promote();
    for (size_t i = 0; i < dp.size(); ++i) {
      if (dp[i] == 0) continue;
      const auto& pw = field_->power((root.exp_ + static_cast<long>(i)) % n);
      for (size_t j = 0; j < pw.size(); ++j) acc[j] += root.coeff_ * dp[i] * pw[j];
    }
    return make_poly(field_, std::move(acc));
  }
  auto a = promote();
  auto b = o.promote();
  long deg = field_->degree();
  std::vector<Rational> prod(2 * deg - 1, Rational(0));
  for (long i = 0; i < deg; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; j < deg; ++j) {
      if (b[j] == 0) continue;
      prod[i + j] += a[i] * b[j];
    }
  }
  std::vector<Rational> acc(deg, Rational(0));
  for (long k = 0; k < 2 * deg - 1; ++k) {
    if (prod[k] == 0) continue;
    if (k < deg) {
      acc[k] += prod[k];
    } else {
      const auto& pw = field_->power(k % field_->order());
      // k < 2*deg-1 <= 2N so k is a valid exponent after mod N
      for (long j = 0; j < deg; ++j) acc[j] += prod[k] * pw[j];
    }
  }
  return make_poly(field_, std::move(acc));
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) fail("ZeroDenominator", "division by zero in Q(zeta)");
  if (kind_ == Kind::Root) return scaled_root(field_, Rational(1) / coeff_, -exp_);
  // extended euclid in Q[x] against the monic modulus
  using P = std::vector<Rational>;
  P r0 = field_->modulus(), r1 = promote();
  trim(r1);
  P s0 = {}, s1 = {Rational(1)};
  while (!r1.empty()) {
    P q, r2;
    poly_divmod(r0, r1, q, r2);
    P s2 = s0;
    P qs1 = poly_mul(q, s1);
    s2.resize(std::max(s2.size(), qs1.size()), Rational(0));
    for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd (a nonzero constant since Phi_N is irreducible over Q)
  if (r0.size() != 1) fail("InternalInconsistency", "gcd with cyclotomic modulus not constant");
  Rational g = r0[0];
  for (auto& c : s0) c /= g;
  s0 = poly_mod(std::move(s0), field_->modulus());
  return make_poly(field_, std::move(s0));
}

CycScalar CycScalar::pow(long k) const {
  if (k == 0) return one(field_);
  if (k < 0) return inverse().pow(-k);
  if (kind_ == Kind::Root) {
    Rational c = 1;
    Rational base = coeff_;
    long e = k;
    while (e > 0) {
      if (e & 1) c *= base;
      base *= base;
      e >>= 1;
    }
    return scaled_root(field_, c, (exp_ % field_->order()) * (k % field_->order()) % field_->order());
  }
  CycScalar acc = one(field_);
  CycScalar base = *this;
  long e = k;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool CycScalar::operator==(const CycScalar& o) const {
  check_same(o);
  if (kind_ == Kind::Root && o.kind_ == Kind::Root)
    return exp_ == o.exp_ && coeff_ == o.coeff_;
  return promote() == o.promote();
}

std::optional<long> CycScalar::ord() const {
  if (is_zero()) return std::nullopt;
  if (kind_ == Kind::Root && (coeff_ == 1 || coeff_ == -1)) {
    long r = RootExp(field_->order(), exp_).ord();
    if (coeff_ == 1) return r;
    return lcm_long(2, r);
  }
  if (kind_ == Kind::Root) return std::nullopt;  // rational coefficient not +-1
  long bound = lcm_long(2, field_->order());
  CycScalar acc = *this;
  for (long k = 1; k <= bound; ++k) {
    if (acc.is_one()) return k;
    acc = acc * *this;
  }
  return std::nullopt;
}

std::optional<RootExp> CycScalar::to_root() const {
  if (kind_ == Kind::Root) {
    if (coeff_ == 1) return RootExp(field_->order(), exp_);
    return std::nullopt;
  }
  long n = field_->order();
  for (long k = 0; k < n; ++k) {
    if (*this == from_root(field_, RootExp(n, k))) return RootExp(n, k);
  }
  return std::nullopt;
}

std::string CycScalar::str() const {
  if (is_zero()) return "0";
  if (kind_ == Kind::Root) {
    std::ostringstream os;
    if (coeff_ != 1) os << coeff_.str() << "*";
    if (exp_ == 0)
      os << (coeff_ == 1 ? "1" : "1");
    else
      os << "zeta" << field_->order() << "^" << exp_;
    if (coeff_ != 1 && exp_ == 0) return coeff_.str();
    return os.str();
  }
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < poly_.size(); ++i) {
    if (poly_[i] == 0) continue;
    if (!first) os << " + ";
    os << poly_[i].str();
    if (i > 0) os << "*zeta" << field_->order() << "^" << i;
    first = false;
  }
  return os.str();
}

CycScalar gauss_number(long l, const CycScalar& h) {
  CycScalar acc = CycScalar::zero(h.field());
  CycScalar p = CycScalar::one(h.field());
  for (long i = 0; i < l; ++i) {
    acc = acc + p;
    p = p * h;
  }
  return acc;
}

CycScalar gauss_factorial(long l, const CycScalar& h) {
  CycScalar acc = CycScalar::one(h.field());
  for (long i = 1; i <= l; ++i) acc = acc * gauss_number(i, h);
  return acc;
}

CycScalar gauss_binom(long l, long m, const CycScalar& h) {
  if (l < 0 || m < 0) fail("BadParameters", "gauss_binom needs nonnegative arguments");
  CycScalar num = gauss_factorial(l + m, h);
  CycScalar den = gauss_factorial(l, h) * gauss_factorial(m, h);
  if (den.is_zero()) {
    // A vanishing denominator leaves the quotient formula meaningless whether
    // or not the numerator vanishes too.
    fail("ZeroDenominator", "gauss_binom(" + std::to_string(l) + "," + std::to_string(m) +
                                ") has vanishing factorial denominator");
  }
  return num / den;
}

}  // namespace qqg
