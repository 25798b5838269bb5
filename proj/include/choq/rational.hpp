#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace choq {

// Exact rational with 64-bit parts. The theorem hypotheses split on strict
// vs. equal exponent comparisons (p = (N+alpha+2)/N and friends), so these
// comparisons must not go through floating point when the inputs are exact.
struct Rational {
  long long num = 0;
  long long den = 1;  // > 0 after normalize()

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(std::abs(num), den);
    if (g > 1) { num /= g; den /= g; }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(Rational a, Rational b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(Rational a, Rational b) { return Rational(a.num * b.num, a.den * b.den); }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }

  // Three-way compare via 128-bit cross multiplication; never overflows for
  // the small numerators/denominators used here.
  int compare(const Rational& o) const {
    __int128 l = static_cast<__int128>(num) * o.den;
    __int128 r = static_cast<__int128>(o.num) * den;
    return l < r ? -1 : (l > r ? 1 : 0);
  }
  friend bool operator==(const Rational& a, const Rational& b) { return a.compare(b) == 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.compare(b) < 0; }
};

// Parses "7/3", "2", "2.5". Decimal strings become exact tenth-power rationals.
inline std::optional<Rational> parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      long long n = std::stoll(s.substr(0, slash));
      long long d = std::stoll(s.substr(slash + 1));
      return Rational(n, d);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac = s.size() - dot - 1;
    if (frac > 15) return std::nullopt;
    long long d = 1;
    for (size_t i = 0; i < frac; ++i) d *= 10;
    return Rational(std::stoll(digits), d);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// A scalar that remembers an exact rational representation when one exists.
// Arithmetic keeps exactness; comparisons are exact when both sides are.
class Exact {
 public:
  Exact() = default;
  Exact(double v) : val_(v) {}
  Exact(Rational r) : val_(r.value()), rat_(r) {}
  Exact(double v, std::optional<Rational> r) : val_(v), rat_(r) {}

  double value() const { return val_; }
  bool is_exact() const { return rat_.has_value(); }
  const std::optional<Rational>& rat() const { return rat_; }

  friend Exact operator+(const Exact& a, const Exact& b) { return combine(a, b, a.val_ + b.val_, '+'); }
  friend Exact operator-(const Exact& a, const Exact& b) { return combine(a, b, a.val_ - b.val_, '-'); }
  friend Exact operator*(const Exact& a, const Exact& b) { return combine(a, b, a.val_ * b.val_, '*'); }
  friend Exact operator/(const Exact& a, const Exact& b) { return combine(a, b, a.val_ / b.val_, '/'); }

  enum class Cmp { Less, Equal, Greater, Near };

  // Exact when both operands carry rationals; otherwise a float compare with
  // a near-critical band of 1e-12 relative, reported instead of silently
  // picking a side.
  Cmp compare(const Exact& o) const {
    if (rat_ && o.rat_) {
      int c = rat_->compare(*o.rat_);
      return c < 0 ? Cmp::Less : (c > 0 ? Cmp::Greater : Cmp::Equal);
    }
    double scale = std::max({1.0, std::abs(val_), std::abs(o.val_)});
    double d = val_ - o.val_;
    if (std::abs(d) <= 1e-12 * scale) return Cmp::Near;
    return d < 0 ? Cmp::Less : Cmp::Greater;
  }

 private:
  static Exact combine(const Exact& a, const Exact& b, double v, char op) {
    if (a.rat_ && b.rat_) {
      // 128-bit guard: bail to double if parts get large
      auto big = [](const Rational& r) { return std::abs(r.num) > (1ll << 40) || r.den > (1ll << 40); };
      Rational r;
      switch (op) {
        case '+': r = *a.rat_ + *b.rat_; break;
        case '-': r = *a.rat_ - *b.rat_; break;
        case '*': r = *a.rat_ * *b.rat_; break;
        default:
          if (b.rat_->num == 0) return Exact(v);
          r = *a.rat_ / *b.rat_;
      }
      if (!big(r)) return Exact(r.value(), r);
    }
    return Exact(v);
  }

  double val_ = 0.0;
  std::optional<Rational> rat_;
};

}  // namespace choq
