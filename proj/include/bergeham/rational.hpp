#ifndef BERGEHAM_RATIONAL_HPP
#define BERGEHAM_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bergeham {

/// Exact rational with int64 components, always normalized (den > 0, lowest
/// terms). All threshold comparisons in the machinery go through this type;
/// no floating point.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  Rational() = default;
  Rational(int64_t n) : num(n) {}  // NOLINT: implicit by design
  Rational(int64_t n, int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(Rational a, Rational b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(Rational a, Rational b) { return Rational(a.num * b.num, a.den * b.den); }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num == 0) throw std::invalid_argument("division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }

  friend bool operator<(Rational a, Rational b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(Rational a, Rational b) { return b < a; }
  friend bool operator<=(Rational a, Rational b) { return !(b < a); }
  friend bool operator>=(Rational a, Rational b) { return !(a < b); }
  friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(Rational a, Rational b) { return !(a == b); }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  /// Parses "a" or "a/b".
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      size_t pos = 0;
      if (slash == std::string::npos) {
        int64_t n = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return Rational(n);
      }
      int64_t n = std::stoll(s.substr(0, slash), &pos);
      if (pos != slash) throw std::invalid_argument(s);
      int64_t d = std::stoll(s.substr(slash + 1), &pos);
      if (pos != s.size() - slash - 1) throw std::invalid_argument(s);
      return Rational(n, d);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational '" + s + "' (want a or a/b)");
    }
  }
};

}  // namespace bergeham

#endif
