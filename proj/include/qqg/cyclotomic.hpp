#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qqg/errors.hpp"

namespace qqg {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Monic cyclotomic polynomial Phi_N as its coefficient vector, constant term
// first. Computed by exact division of x^N - 1 by Phi_d over the proper
// divisors d of N.
std::vector<Rational> cyclotomic_poly(long n);

// A pure root of unity zeta_order^exp with exp reduced to [0, order).
struct RootExp {
  long order = 1;
  long exp = 0;

  RootExp() = default;
  RootExp(long order_, long exp_);

  RootExp operator*(const RootExp& o) const;
  RootExp inverse() const;
  RootExp pow(long k) const;
  bool is_one() const { return exp == 0; }
  // Multiplicative order of the root itself.
  long ord() const;
  // Re-express in a larger arena M (order must divide M).
  RootExp embed(long m) const;
  bool operator==(const RootExp& o) const;
  bool operator!=(const RootExp& o) const { return !(*this == o); }
  std::string str() const;
};

// The root zeta_t^k seen inside the arena of order n (requires t | n), so that
// compatible embeddings like zeta_m^mm = zeta_mm hold identically.
RootExp root_in(long n, long t, long k);

// Shared immutable arena for Q(zeta_N): the modulus Phi_N and the reductions
// of the power basis x^k for 0 <= k < N.
class CycField {
 public:
  explicit CycField(long n);

  long order() const { return n_; }
  long degree() const { return deg_; }
  const std::vector<Rational>& modulus() const { return phi_; }
  // x^k reduced mod Phi_N, k in [0, N).
  const std::vector<Rational>& power(long k) const { return powers_[k]; }

  static std::shared_ptr<const CycField> get(long n);  // cached per order

 private:
  long n_;
  long deg_;
  std::vector<Rational> phi_;
  std::vector<std::vector<Rational>> powers_;
};

using FieldPtr = std::shared_ptr<const CycField>;

// An exact element of Q(zeta_N). Scalars that are rational multiples of a
// single root keep a fast exponent-only representation; sums fall back to a
// dense polynomial in the power basis reduced mod Phi_N.
class CycScalar {
 public:
  CycScalar() = default;  // unusable until given a field

  static CycScalar zero(FieldPtr f);
  static CycScalar one(FieldPtr f);
  static CycScalar from_rational(FieldPtr f, const Rational& r);
  static CycScalar from_root(FieldPtr f, const RootExp& r);
  static CycScalar scaled_root(FieldPtr f, const Rational& c, long exp);
  static CycScalar from_coeffs(FieldPtr f, std::vector<Rational> coeffs);

  const FieldPtr& field() const { return field_; }
  long order() const { return field_->order(); }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  CycScalar operator+(const CycScalar& o) const;
  CycScalar operator-(const CycScalar& o) const;
  CycScalar operator-() const;
  CycScalar operator*(const CycScalar& o) const;
  CycScalar inverse() const;
  CycScalar operator/(const CycScalar& o) const { return *this * o.inverse(); }
  CycScalar pow(long k) const;

  bool operator==(const CycScalar& o) const;
  bool operator!=(const CycScalar& o) const { return !(*this == o); }

  // Least k >= 1 with x^k = 1, or nullopt when x is not a root of unity.
  // Roots of unity inside Q(zeta_N) all divide lcm(2, N), so the search is
  // bounded.
  std::optional<long> ord() const;

  // Exact round-trip to RootExp when the value is a pure root of unity with
  // coefficient 1.
  std::optional<RootExp> to_root() const;

  // Dense power-basis coefficients (degree() entries).
  std::vector<Rational> coeffs() const;

  std::string str() const;

 private:
  enum class Kind { Root, Poly };
  FieldPtr field_;
  Kind kind_ = Kind::Poly;
  // Root form: coeff_ * zeta^exp_; Poly form: poly_ in power basis.
  Rational coeff_;
  long exp_ = 0;
  std::vector<Rational> poly_;

  std::vector<Rational> promote() const;
  static CycScalar make_poly(FieldPtr f, std::vector<Rational> p);
  void check_same(const CycScalar& o) const;
};

// Gaussian integer analogues: l_h = 1 + h + ... + h^{l-1}, l!_h, and the
// binomial (l+m choose l)_h computed by exact field division.
CycScalar gauss_number(long l, const CycScalar& h);
CycScalar gauss_factorial(long l, const CycScalar& h);
CycScalar gauss_binom(long l, long m, const CycScalar& h);

long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace qqg
