#ifndef MINTB_LENGTH_VALUE_HPP
#define MINTB_LENGTH_VALUE_HPP

#include <compare>
#include <string>

#include "mintb/rational.hpp"

namespace mintb {

// A path length that is either an exact rational or +infinity. Infinity
// absorbs addition and dominates every finite value; it marks list entries
// whose toll budget can induce any finite length.
class LengthValue {
 public:
  LengthValue() : finite_(true), value_(0) {}
  explicit LengthValue(Rational v) : finite_(true), value_(std::move(v)) {}

  static LengthValue infinity() {
    LengthValue v;
    v.finite_ = false;
    return v;
  }

  bool is_infinite() const { return !finite_; }
  bool is_finite() const { return finite_; }

  // Pre: is_finite().
  const Rational& value() const { return value_; }

  friend LengthValue operator+(const LengthValue& a, const LengthValue& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return LengthValue(a.value_ + b.value_);
  }

  // Pre: both finite (subtraction of infinities is never meaningful here).
  friend LengthValue operator-(const LengthValue& a, const LengthValue& b) {
    return LengthValue(a.value_ - b.value_);
  }

  friend bool operator==(const LengthValue& a, const LengthValue& b) {
    if (a.finite_ != b.finite_) return false;
    return a.is_infinite() || a.value_ == b.value_;
  }

  friend bool operator<(const LengthValue& a, const LengthValue& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const LengthValue& a, const LengthValue& b) { return b < a; }
  friend bool operator<=(const LengthValue& a, const LengthValue& b) { return !(b < a); }
  friend bool operator>=(const LengthValue& a, const LengthValue& b) { return !(a < b); }
  friend bool operator!=(const LengthValue& a, const LengthValue& b) { return !(a == b); }

  friend const LengthValue& min(const LengthValue& a, const LengthValue& b) {
    return a < b ? a : b;
  }
  friend const LengthValue& max(const LengthValue& a, const LengthValue& b) {
    return a < b ? b : a;
  }

 private:
  bool finite_;
  Rational value_;
};

inline std::string to_string(const LengthValue& v) {
  return v.is_infinite() ? "inf" : to_string(v.value());
}

}  // namespace mintb

#endif
