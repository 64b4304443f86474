#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rainbow {

// Exact rational arithmetic for degree thresholds and bound comparisons.
// All theorem hypotheses of the form delta >= (a*n + b*k + c) / d are decided
// here; never through floating point.  Numerators stay desk-scale (|p| well
// under 2^32), so int64 storage with __int128 cross-multiplies is exact.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  // Largest integer <= value.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  // Smallest integer >= value.
  std::int64_t ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  bool is_integer() const { return den_ == 1; }

  // Canonical text form "p/q" in lowest terms, "p" when q == 1.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "p", "p/q", and decimal literals like "0.3" or "-1.25".
  static Rational parse(const std::string& text);

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_;
  std::int64_t den_;
};

inline Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::size_t pos1 = 0, pos2 = 0;
    std::int64_t p = std::stoll(text.substr(0, slash), &pos1);
    std::int64_t q = std::stoll(text.substr(slash + 1), &pos2);
    if (pos1 != slash || pos2 != text.size() - slash - 1)
      throw std::invalid_argument("Rational: bad fraction '" + text + "'");
    return Rational(p, q);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || frac_len > 9)
      throw std::invalid_argument("Rational: bad decimal '" + text + "'");
    std::size_t pos = 0;
    std::int64_t p = std::stoll(digits, &pos);
    if (pos != digits.size())
      throw std::invalid_argument("Rational: bad decimal '" + text + "'");
    std::int64_t q = 1;
    for (std::size_t i = 0; i < frac_len; ++i) q *= 10;
    return Rational(p, q);
  }
  std::size_t pos = 0;
  std::int64_t p = std::stoll(text, &pos);
  if (pos != text.size())
    throw std::invalid_argument("Rational: bad integer '" + text + "'");
  return Rational(p);
}

}  // namespace rainbow
