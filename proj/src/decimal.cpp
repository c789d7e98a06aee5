#include "braidchart/decimal.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace braidchart {

Decimal::Decimal(std::int64_t mantissa, int scale) : mantissa_(mantissa), scale_(scale) {
  while (scale_ > 0 && mantissa_ % 10 == 0) {
    mantissa_ /= 10;
    --scale_;
  }
  if (mantissa_ == 0) scale_ = 0;
}

std::optional<Decimal> Decimal::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    ++i;
  }
  std::int64_t mantissa = 0;
  int scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 10 - 9;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (seen_point) return std::nullopt;
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    if (mantissa > kLimit || scale > 15) return std::nullopt;
    mantissa = mantissa * 10 + (c - '0');
    seen_digit = true;
    if (seen_point) ++scale;
  }
  if (!seen_digit) return std::nullopt;
  return Decimal(negative ? -mantissa : mantissa, scale);
}

double Decimal::to_double() const {
  return static_cast<double>(mantissa_) / std::pow(10.0, scale_);
}

std::string Decimal::to_string() const {
  bool negative = mantissa_ < 0;
  std::string digits = std::to_string(negative ? -mantissa_ : mantissa_);
  if (scale_ > 0) {
    if (static_cast<int>(digits.size()) <= scale_) {
      digits.insert(0, static_cast<std::size_t>(scale_ + 1) - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(scale_), ".");
  }
  return negative ? "-" + digits : digits;
}

}  // namespace braidchart
