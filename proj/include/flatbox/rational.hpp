#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace flatbox {

// Exact rational coordinate. Kept in lowest terms with den > 0, so the
// default operator== is value equality. Comparisons cross-multiply in 128
// bits; coordinates stay far below the range where that could overflow.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Accepts "p" or "p/q" with optional sign on p.
  static Rational parse(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
      if (slash == std::string::npos) {
        std::size_t used = 0;
        long long n = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument("");
        return Rational(n);
      }
      std::size_t used = 0;
      long long n = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw std::invalid_argument("");
      long long d = std::stoll(text.substr(slash + 1), &used);
      if (used != text.size() - slash - 1) throw std::invalid_argument("");
      return Rational(n, d);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational literal: \"" + text + "\"");
    }
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
};

inline const Rational& rat_min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace flatbox
