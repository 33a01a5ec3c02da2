#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "t2r/common.hpp"

namespace t2r {

/// Canonical scientific-notation form: [-]d.dde[+-]dd with a 3-digit mantissa
/// (leading digit 1..9 unless the value is zero) and a signed 2-digit exponent.
/// Zero has the unique rendering 0.00e+00.
struct SciNotation {
  bool negative = false;
  std::array<uint8_t, 3> digits{};  // d1 . d2 d3
  bool exp_negative = false;
  std::array<uint8_t, 2> exp_digits{};

  bool is_zero() const { return digits[0] == 0 && digits[1] == 0 && digits[2] == 0; }
  int exponent() const {
    int e = exp_digits[0] * 10 + exp_digits[1];
    return exp_negative ? -e : e;
  }
  int mantissa_scaled() const {  // d1d2d3 as integer, 100..999 (or 0)
    return digits[0] * 100 + digits[1] * 10 + digits[2];
  }

  std::string render() const;
  /// Strict parse of the canonical pattern; throws MalformedNotation otherwise.
  static SciNotation parse(std::string_view s);

  bool operator==(const SciNotation&) const = default;
};

/// Inclusive per-metric clip range, taken from training-data targets.
struct ValueRange {
  double min = 0.0;
  double max = 0.0;
};

/// Round-half-to-even to 3 significant digits. Requires x finite and either zero
/// or with |x| representable in a signed 2-digit exponent; throws NotFinite /
/// OutOfRange otherwise.
SciNotation encode_number(double x);

/// Value of the canonical form, correctly rounded to double.
double decode_number(const SciNotation& s);
double decode_number(std::string_view s);

double clip_value(double x, const ValueRange& r);

}  // namespace t2r
