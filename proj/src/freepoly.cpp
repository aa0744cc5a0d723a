#include "qqg/freepoly.hpp"

#include <bit>
#include <sstream>

namespace qqg {

Word Word::letter(int i) {
  if (i != 1 && i != 2) fail("BadParameters", "alphabet is {1, 2}");
  Word w;
  w.len = 1;
  w.bits = (i == 2) ? 1 : 0;
  return w;
}

Word Word::concat(const Word& o) const {
  if (len + o.len > 62) fail("DegreeBoundExceeded", "word length beyond 62");
  Word w;
  w.len = len + o.len;
  w.bits = bits | (o.bits << len);
  return w;
}

Word Word::prefix(uint32_t k) const {
  Word w;
  w.len = k;
  w.bits = bits & ((k >= 64) ? ~0ull : ((1ull << k) - 1));
  return w;
}

Word Word::suffix_from(uint32_t k) const {
  Word w;
  w.len = len - k;
  w.bits = bits >> k;
  return w;
}

std::pair<long, long> Word::z2deg() const {
  long twos = std::popcount(bits);
  return {static_cast<long>(len) - twos, twos};
}

bool Word::operator<(const Word& o) const {
  if (len != o.len) return len < o.len;
  uint64_t diff = bits ^ o.bits;
  if (diff == 0) return false;
  // first differing position decides; X1 (bit 0) sorts before X2 (bit 1)
  uint64_t lowest = diff & (~diff + 1);
  return (bits & lowest) == 0;
}

std::string Word::str() const {
  std::string s;
  for (uint32_t p = 0; p < len; ++p) s += static_cast<char>('0' + at(p));
  return s;
}

Word Word::parse(const std::string& s) {
  Word w;
  for (char c : s) {
    if (c == '1')
      w = w.concat(Word::letter(1));
    else if (c == '2')
      w = w.concat(Word::letter(2));
    else
      fail("BadParameters", "bad word literal: " + s);
  }
  return w;
}

ScaleFn plain_scale(FieldPtr f) {
  CycScalar one = CycScalar::one(std::move(f));
  return [one](const Word&, const Word&) { return one; };
}

FreeWordPoly FreeWordPoly::monomial(FieldPtr f, const Word& w, const CycScalar& c) {
  FreeWordPoly p(std::move(f));
  p.add_term(w, c);
  return p;
}

FreeWordPoly FreeWordPoly::generator(FieldPtr f, int i) {
  return monomial(f, Word::letter(i), CycScalar::one(f));
}

void FreeWordPoly::add_term(const Word& w, const CycScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  CycScalar s = it->second + c;
  if (s.is_zero())
    terms_.erase(it);
  else
    it->second = s;
}

FreeWordPoly FreeWordPoly::operator+(const FreeWordPoly& o) const {
  FreeWordPoly r = *this;
  if (!r.field_) r.field_ = o.field_;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

FreeWordPoly FreeWordPoly::operator-(const FreeWordPoly& o) const {
  FreeWordPoly r = *this;
  if (!r.field_) r.field_ = o.field_;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

FreeWordPoly FreeWordPoly::scaled(const CycScalar& c) const {
  FreeWordPoly r(field_);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
  return r;
}

FreeWordPoly FreeWordPoly::mul(const FreeWordPoly& o, const ScaleFn& scale) const {
  FreeWordPoly r(field_ ? field_ : o.field_);
  for (const auto& [u, cu] : terms_)
    for (const auto& [v, cv] : o.terms_) r.add_term(u.concat(v), cu * cv * scale(u, v));
  return r;
}

FreeWordPoly FreeWordPoly::pow(long k, const ScaleFn& scale) const {
  if (k < 0) fail("BadParameters", "negative power of a free polynomial");
  FreeWordPoly r = FreeWordPoly::monomial(field_, Word::empty(), CycScalar::one(field_));
  for (long i = 0; i < k; ++i) r = r.mul(*this, scale);
  return r;
}

bool FreeWordPoly::homogeneous() const {
  if (terms_.empty()) return true;
  auto d = terms_.begin()->first.z2deg();
  for (const auto& [w, c] : terms_)
    if (w.z2deg() != d) return false;
  return true;
}

std::pair<long, long> FreeWordPoly::z2deg() const {
  if (terms_.empty()) fail("BadParameters", "degree of zero polynomial");
  return terms_.begin()->first.z2deg();
}

long FreeWordPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<long>(terms_.rbegin()->first.len);
}

std::string FreeWordPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*" << (w.len == 0 ? "1" : w.str());
    first = false;
  }
  return os.str();
}

}  // namespace qqg
