#pragma once

// Extended rationals b/a (with 1/0 = infinity) for Dehn surgery
// coefficients, and the twist update rules applied to them.

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace nbt {

class ExtendedRational {
 public:
  using Int = std::int64_t;

  /// 0/1.
  ExtendedRational() = default;
  /// b/a; normalised so that a >= 0, gcd(|b|, a) = 1, and infinity is 1/0.
  ExtendedRational(Int b, Int a = 1) : b_(b), a_(a) { normalise(); }

  static ExtendedRational infinity() { return ExtendedRational(1, 0); }

  Int numerator() const { return b_; }
  Int denominator() const { return a_; }
  bool is_infinite() const { return a_ == 0; }

  friend ExtendedRational operator+(const ExtendedRational& x, const ExtendedRational& y) {
    if (x.is_infinite() || y.is_infinite()) {
      if (x.is_infinite() && y.is_infinite()) throw std::domain_error("ExtendedRational: inf + inf");
      return infinity();
    }
    return ExtendedRational(checked_add(checked_mul(x.b_, y.a_), checked_mul(y.b_, x.a_)),
                            checked_mul(x.a_, y.a_));
  }
  friend ExtendedRational operator-(const ExtendedRational& x) { return ExtendedRational(-x.b_, x.a_); }
  friend ExtendedRational operator-(const ExtendedRational& x, const ExtendedRational& y) { return x + (-y); }

  /// 1/r, with 1/0 = infinity and 1/infinity = 0.
  ExtendedRational reciprocal() const { return b_ == 0 ? infinity() : ExtendedRational(a_, b_); }

  friend bool operator==(const ExtendedRational&, const ExtendedRational&) = default;

  /// "b/a", "b" when a = 1, "inf" for 1/0.
  std::string to_string() const {
    if (is_infinite()) return "inf";
    if (a_ == 1) return std::to_string(b_);
    return std::to_string(b_) + "/" + std::to_string(a_);
  }

  /// Accepts "b/a", "b", "inf" / "infinity".
  static ExtendedRational parse(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "1/0") return infinity();
    const auto slash = text.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        const Int b = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return ExtendedRational(b);
      }
      const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
      const Int b = std::stoll(num, &used);
      if (used != num.size()) throw std::invalid_argument(text);
      const Int a = std::stoll(den, &used);
      if (used != den.size()) throw std::invalid_argument(text);
      if (a == 0 && b == 0) throw std::invalid_argument(text);
      return ExtendedRational(b, a);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("ExtendedRational: cannot parse '" + text + "'");
    }
  }

 private:
  static Int checked_mul(Int x, Int y) {
    Int r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("ExtendedRational: overflow");
    return r;
  }
  static Int checked_add(Int x, Int y) {
    Int r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("ExtendedRational: overflow");
    return r;
  }

  void normalise() {
    if (a_ == 0) {
      if (b_ == 0) throw std::invalid_argument("ExtendedRational: 0/0");
      b_ = 1;
      return;
    }
    if (a_ < 0) {
      a_ = -a_;
      b_ = -b_;
    }
    const Int g = std::gcd(b_ < 0 ? -b_ : b_, a_);
    b_ /= g;
    a_ /= g;
  }

  Int b_ = 0;
  Int a_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) { return os << r.to_string(); }

/// Coefficient of the twisted component after a t-twist: 1/(t + 1/r) = b/(tb + a).
inline ExtendedRational twist_update(const ExtendedRational& r, int t) {
  if (r.is_infinite()) return t == 0 ? r : ExtendedRational(1, t);
  const auto b = r.numerator(), a = r.denominator();
  return ExtendedRational(b, static_cast<ExtendedRational::Int>(t) * b + a);
}

/// Coefficient of another component: r + t lk^2 (infinity is unchanged).
inline ExtendedRational offset_update(const ExtendedRational& r, int t, int lk) {
  if (r.is_infinite()) return r;
  return r + ExtendedRational(static_cast<ExtendedRational::Int>(t) * lk * lk);
}

}  // namespace nbt
