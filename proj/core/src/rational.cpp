#include "cglab/rational.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "cglab/errors.hpp"

namespace cglab {

namespace {

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw DomainError("rational overflow");
  }
  return static_cast<std::int64_t>(v);
}

Rational make(__int128 num, __int128 den) {
  if (den == 0) throw DomainError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num, b = den;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw DomainError("not a rational: " + text);
    return v;
  };
  try {
    if (slash != std::string::npos) {
      return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_int(text));
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 17) throw DomainError("not a rational: " + text);
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw DomainError("not a rational: " + text);
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::string whole = text.substr(0, dot);
    const bool negative = !whole.empty() && whole[0] == '-';
    const std::int64_t w = whole.empty() || whole == "-" || whole == "+" ? 0 : parse_int(whole);
    const std::int64_t f = parse_int(frac);
    const __int128 num = static_cast<__int128>(w < 0 ? -w : w) * scale + f;
    return make(negative ? -num : num, scale);
  } catch (const std::logic_error&) {
    throw DomainError("not a rational: " + text);
  }
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
              static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
              static_cast<__int128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return make(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 l = static_cast<__int128>(a.num_) * b.den_;
  const __int128 r = static_cast<__int128>(b.num_) * a.den_;
  return l <=> r;
}

}  // namespace cglab
