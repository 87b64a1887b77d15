#include "ontolab/turns.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ontolab/errors.hpp"

namespace ontolab {

static_assert(std::numeric_limits<long double>::digits >= 64 &&
                  std::numeric_limits<long double>::max_exponent >= 16384,
              "deep-point arithmetic needs an 80-bit (or wider) long double");

namespace {

/// Converts num / 2^exp (num >= 0) to long double using the top 64 bits.
long double to_long_double(const BigInt& num, unsigned exp) {
  if (num == 0) return 0.0L;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(num)) + 1;
  if (bits <= 64) {
    return std::ldexp(static_cast<long double>(static_cast<std::uint64_t>(num)),
                      -static_cast<int>(exp));
  }
  const unsigned shift = bits - 64;
  const auto top = static_cast<std::uint64_t>(num >> shift);
  return std::ldexp(static_cast<long double>(top),
                    static_cast<int>(shift) - static_cast<int>(exp));
}

}  // namespace

Turns::Turns(BigInt num, unsigned exp) : num_(std::move(num)), exp_(exp) {
  normalize();
}

void Turns::normalize() {
  const BigInt one = BigInt(1) << exp_;
  num_ %= one;
  if (num_ < 0) num_ += one;
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  const unsigned tz = static_cast<unsigned>(boost::multiprecision::lsb(num_));
  const unsigned drop = tz < exp_ ? tz : exp_;
  num_ >>= drop;
  exp_ -= drop;
}

Turns Turns::dyadic(const BigInt& k, unsigned exponent) {
  return Turns(k, exponent);
}

Turns Turns::from_fraction(long double fraction) {
  if (!std::isfinite(fraction)) throw InputError("Turns: non-finite angle");
  // x - floor(x) is exact for x >= 0 but rounds tiny negative x up to 1.
  if (fraction < 0) return Turns() - from_fraction(-fraction);
  fraction -= std::floor(fraction);
  if (fraction == 0.0L) return Turns();
  int e = 0;
  const long double mant = std::frexp(fraction, &e);  // fraction = mant * 2^e
  const auto m = static_cast<std::uint64_t>(std::ldexp(mant, 64));
  // fraction = m * 2^(e - 64); e <= 0 since fraction < 1.
  const int exp = 64 - e;
  return Turns(BigInt(m), static_cast<unsigned>(exp));
}

Turns Turns::from_radians(long double theta) {
  if (!std::isfinite(theta)) throw InputError("Turns: non-finite angle");
  return from_fraction(theta / (2.0L * std::numbers::pi_v<long double>));
}

long double Turns::value() const { return to_long_double(num_, exp_); }

double Turns::radians() const {
  return static_cast<double>(2.0L * std::numbers::pi_v<long double> * value());
}

Turns Turns::operator+(const Turns& other) const {
  const unsigned e = exp_ > other.exp_ ? exp_ : other.exp_;
  return Turns((num_ << (e - exp_)) + (other.num_ << (e - other.exp_)), e);
}

Turns Turns::operator-(const Turns& other) const {
  const unsigned e = exp_ > other.exp_ ? exp_ : other.exp_;
  return Turns((num_ << (e - exp_)) - (other.num_ << (e - other.exp_)), e);
}

long double Turns::signed_difference(const Turns& other) const {
  const Turns d = other - *this;
  if (d.exp_ == 0) return 0.0L;
  const BigInt half = BigInt(1) << (d.exp_ - 1);
  if (d.num_ >= half) {
    const BigInt neg = (BigInt(1) << d.exp_) - d.num_;
    return -to_long_double(neg, d.exp_);
  }
  return to_long_double(d.num_, d.exp_);
}

std::strong_ordering operator<=>(const Turns& a, const Turns& b) {
  const unsigned e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
  const BigInt x = a.num_ << (e - a.exp_);
  const BigInt y = b.num_ << (e - b.exp_);
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Turns::to_string() const {
  return num_.str() + "/2^" + std::to_string(exp_);
}

Turns Turns::parse(const std::string& text) {
  const auto slash = text.find("/2^");
  try {
    if (slash == std::string::npos) {
      return Turns(BigInt(text), 0);
    }
    const BigInt num(text.substr(0, slash));
    const unsigned long exp = std::stoul(text.substr(slash + 3));
    if (exp > 1u << 20) throw InputError("Turns: exponent too large");
    return Turns(num, static_cast<unsigned>(exp));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("Turns: cannot parse '" + text + "' (expected N/2^E)");
  }
}

}  // namespace ontolab
