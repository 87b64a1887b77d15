#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>

namespace ontolab {

using BigInt = boost::multiprecision::cpp_int;

/// An angle stored exactly as a dyadic fraction of a full turn,
/// numerator / 2^exponent, reduced into [0, 1).
///
/// Points of the Bergman tree at level n sit at angles k / 2^n turns, and the
/// comb construction goes thousands of levels deep, so angles cannot be held
/// in a double. Every finite double or long double is itself dyadic, so
/// conversions in both directions are exact up to the final rounding.
class Turns {
 public:
  Turns() = default;

  /// k / 2^exponent turns, reduced modulo one full turn.
  static Turns dyadic(const BigInt& k, unsigned exponent);
  /// Exact conversion of a (finite) fraction of a turn, reduced modulo 1.
  static Turns from_fraction(long double fraction);
  /// theta / (2 pi), rounded once in long double, then exact.
  static Turns from_radians(long double theta);

  /// Value in [0, 1), rounded to long double.
  long double value() const;
  /// Value in [0, 2 pi), rounded to double.
  double radians() const;

  /// (other - *this) reduced into [-1/2, 1/2), computed exactly and rounded
  /// once. Small differences of deep angles keep full relative precision.
  long double signed_difference(const Turns& other) const;

  Turns operator+(const Turns& other) const;
  Turns operator-(const Turns& other) const;
  /// Adds an offset given as a fraction of a turn (exact conversion).
  Turns shifted(long double offset) const { return *this + from_fraction(offset); }

  const BigInt& numerator() const { return num_; }
  unsigned exponent() const { return exp_; }

  /// "numerator/2^exponent", e.g. "3/2^4"; parsed back by parse().
  std::string to_string() const;
  static Turns parse(const std::string& text);

  friend bool operator==(const Turns& a, const Turns& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Turns& a, const Turns& b);

 private:
  Turns(BigInt num, unsigned exp);
  void normalize();

  BigInt num_ = 0;
  unsigned exp_ = 0;
};

}  // namespace ontolab
