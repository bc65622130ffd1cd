#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace morse {

// Exact rational number with a 64-bit numerator and a positive 64-bit
// denominator, always stored in lowest terms. Arithmetic is carried out in
// 128-bit intermediates; a result that does not fit throws NumericError.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Largest integer not greater than the value.
  std::int64_t floor() const noexcept;
  // Value minus floor(); always in [0, 1).
  Rational frac() const;

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_zero() const noexcept { return num_ == 0; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "n/d", or "n/1" for integers so the shape is fixed for CSV consumers.
  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Parses "17", "52/3", "-1/2" exactly. Decimal input such as "17.25" or
// "17.333333333" is converted with rationalize() at max_den. Throws
// ConfigError on malformed text.
Rational parse_rational(std::string_view text, std::int64_t max_den = 1'000'000);

// Best continued-fraction convergent of x whose denominator does not exceed
// max_den. Values exactly representable with such a denominator round-trip.
Rational rationalize(double x, std::int64_t max_den);

}  // namespace morse
