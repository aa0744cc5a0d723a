#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "qqg/cyclotomic.hpp"

namespace qqg {

// A word over the alphabet {X1, X2}; bit p of `bits` holds letter p (0 = X1,
// 1 = X2), with position 0 the leftmost letter. Ordered by degree first, then
// lexicographically with X1 < X2.
struct Word {
  uint32_t len = 0;
  uint64_t bits = 0;

  static Word empty() { return {}; }
  static Word letter(int i);  // i in {1, 2}

  int at(uint32_t p) const { return static_cast<int>((bits >> p) & 1) + 1; }
  Word concat(const Word& o) const;
  Word prefix(uint32_t k) const;
  Word suffix_from(uint32_t k) const;  // letters k..len-1
  std::pair<long, long> z2deg() const;

  bool operator==(const Word& o) const { return len == o.len && bits == o.bits; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  bool operator<(const Word& o) const;

  std::string str() const;  // e.g. "121"
  static Word parse(const std::string& s);
};

// Scale factor attached to concatenation; the plain free algebra uses the
// constant 1, twisted variants supply root-of-unity corrections.
using ScaleFn = std::function<CycScalar(const Word&, const Word&)>;

ScaleFn plain_scale(FieldPtr f);

// Finitely supported map word -> scalar; no zero terms are stored.
class FreeWordPoly {
 public:
  FreeWordPoly() = default;
  explicit FreeWordPoly(FieldPtr f) : field_(std::move(f)) {}

  static FreeWordPoly monomial(FieldPtr f, const Word& w, const CycScalar& c);
  static FreeWordPoly generator(FieldPtr f, int i);  // X_i

  const FieldPtr& field() const { return field_; }
  const std::map<Word, CycScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long term_count() const { return static_cast<long>(terms_.size()); }

  void add_term(const Word& w, const CycScalar& c);

  FreeWordPoly operator+(const FreeWordPoly& o) const;
  FreeWordPoly operator-(const FreeWordPoly& o) const;
  FreeWordPoly scaled(const CycScalar& c) const;
  FreeWordPoly mul(const FreeWordPoly& o, const ScaleFn& scale) const;
  FreeWordPoly pow(long k, const ScaleFn& scale) const;  // left-normed

  bool operator==(const FreeWordPoly& o) const { return terms_ == o.terms_; }

  // Z^2-homogeneity; total degree of a homogeneous polynomial.
  bool homogeneous() const;
  std::pair<long, long> z2deg() const;  // of a homogeneous nonzero poly
  long degree() const;

  std::string str() const;

 private:
  FieldPtr field_;
  std::map<Word, CycScalar> terms_;
};

}  // namespace qqg
