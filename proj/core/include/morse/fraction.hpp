#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "morse/detail/int128.hpp"

namespace morse::farey {

// Irreducible fraction num/den with num >= 0 and den > 0.
class Fraction {
 public:
  constexpr Fraction() = default;
  // Reduces on construction; throws ConfigError on den <= 0 or num < 0.
  Fraction(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  // Depth in the Farey tree is the reduced denominator.
  std::int64_t depth() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return static_cast<detail::int128>(a.num_) * b.den_ <=> static_cast<detail::int128>(b.num_) * a.den_;
  }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace morse::farey
