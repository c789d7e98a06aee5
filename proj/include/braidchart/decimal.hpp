#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace braidchart {

// Exact terminating decimal, stored as mantissa * 10^-scale with no trailing
// zeros in the mantissa. Used only for layout coordinates.
class Decimal {
 public:
  Decimal() = default;
  Decimal(std::int64_t integer) : mantissa_(integer) {}  // NOLINT(implicit)
  Decimal(std::int64_t mantissa, int scale);

  static std::optional<Decimal> parse(std::string_view text);

  std::int64_t mantissa() const { return mantissa_; }
  int scale() const { return scale_; }
  double to_double() const;
  std::string to_string() const;

  friend bool operator==(const Decimal&, const Decimal&) = default;

 private:
  std::int64_t mantissa_ = 0;
  int scale_ = 0;
};

}  // namespace braidchart
