#include "morse/rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include "morse/detail/int128.hpp"
#include "morse/errors.hpp"

namespace morse {
namespace {

using i128 = detail::int128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make_reduced(i128 num, i128 den) {
  if (den == 0) throw NumericError("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || num < -kMax || den > kMax) {
    throw NumericError("rational: result exceeds 64-bit range");
  }
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw NumericError("rational: zero denominator");
  if (den < 0) {
    if (num == std::numeric_limits<std::int64_t>::min() ||
        den == std::numeric_limits<std::int64_t>::min()) {
      throw NumericError("rational: result exceeds 64-bit range");
    }
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

std::int64_t Rational::floor() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::operator-() const { return make_reduced(-static_cast<i128>(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  *this = make_reduced(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
                       static_cast<i128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  *this = make_reduced(static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_,
                       static_cast<i128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  *this = make_reduced(static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw NumericError("rational: division by zero");
  *this = make_reduced(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const i128 lhs = static_cast<i128>(a.num_) * b.den_;
  const i128 rhs = static_cast<i128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rationalize(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) throw ConfigError("cannot rationalize a non-finite value");
  if (max_den < 1) throw ConfigError("max_den must be >= 1");
  const bool negative = x < 0;
  long double y = std::fabs(static_cast<long double>(x));
  const long double target = y;

  // Convergent recurrences h_k = a_k h_{k-1} + h_{k-2}, likewise for k.
  i128 h_prev = 0, h = 1;
  i128 k_prev = 1, k = 0;
  bool first = true;
  while (true) {
    const long double a_real = std::floor(y);
    if (a_real > static_cast<long double>(kMax)) break;
    const auto a = static_cast<i128>(a_real);
    const i128 h_next = a * h + h_prev;
    const i128 k_next = a * k + k_prev;
    if (k_next > max_den || h_next > kMax) {
      if (first) throw ConfigError("value too large to rationalize");
      break;
    }
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    first = false;
    if (static_cast<long double>(h) / static_cast<long double>(k) == target) break;
    const long double rest = y - a_real;
    if (rest <= std::numeric_limits<long double>::epsilon() * (1 + y)) break;
    y = 1 / rest;
  }
  return Rational(static_cast<std::int64_t>(negative ? -h : h), static_cast<std::int64_t>(k));
}

Rational parse_rational(std::string_view text, std::int64_t max_den) {
  const auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  const auto parse_int = [&](std::string_view s) -> std::int64_t {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw ConfigError("malformed rational '" + std::string(text) + "'");
    }
    return v;
  };

  text = trim(text);
  if (text.empty()) throw ConfigError("empty rational");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_int(text.substr(0, slash));
    const std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (text.find_first_of(".eE") == std::string_view::npos) return Rational(parse_int(text));

  double value = 0;
  std::string_view body = text;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc{} || ptr != body.data() + body.size()) {
    throw ConfigError("malformed number '" + std::string(text) + "'");
  }
  return rationalize(value, max_den);
}

}  // namespace morse
