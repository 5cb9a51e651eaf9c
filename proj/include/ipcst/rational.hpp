#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "ipcst/error.hpp"

namespace ipcst {

// Expression templates are off so `auto x = a + b;` yields a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw Error(ErrorCode::BadParameter, "zero denominator");
  return Rational(num) / Rational(den);
}

/// Canonical "num/den" text, always with an explicit denominator.
inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

inline std::string numerator_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str();
}

inline std::string denominator_string(const Rational& r) {
  return boost::multiprecision::denominator(r).str();
}

/// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  boost::multiprecision::mpz_int n(std::string(num[0] == '+' ? num.substr(1) : num));
  boost::multiprecision::mpz_int d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(n) / Rational(d);
}

/// Rationals extended by +infinity. Used for ratios that have no finite bound,
/// e.g. a positive optimum divided by a zero prize.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(Rational value) : value_(std::move(value)) {}  // NOLINT(implicit)

  static ExtRational infinity() {
    ExtRational r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const noexcept { return infinite_; }
  const Rational& value() const {
    if (infinite_) throw Error(ErrorCode::BadParameter, "value() of infinite ExtRational");
    return value_;
  }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::string to_string(const ExtRational& r) {
    return r.infinite_ ? std::string("inf") : ipcst::to_string(r.value_);
  }
  friend std::ostream& operator<<(std::ostream& os, const ExtRational& r) {
    return os << to_string(r);
  }

 private:
  Rational value_{0};
  bool infinite_ = false;
};

/// a/b with a positive numerator over zero mapped to infinity; 0/0 is 0.
inline ExtRational ratio(const Rational& a, const Rational& b) {
  if (b == 0) return a == 0 ? ExtRational(Rational(0)) : ExtRational::infinity();
  return ExtRational(a / b);
}

inline ExtRational max(const ExtRational& a, const ExtRational& b) { return a < b ? b : a; }

}  // namespace ipcst
