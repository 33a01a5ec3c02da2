#include "t2r/codec.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace t2r {

std::string SciNotation::render() const {
  std::string s;
  s.reserve(9);
  if (negative) s.push_back('-');
  s.push_back(static_cast<char>('0' + digits[0]));
  s.push_back('.');
  s.push_back(static_cast<char>('0' + digits[1]));
  s.push_back(static_cast<char>('0' + digits[2]));
  s.push_back('e');
  s.push_back(exp_negative ? '-' : '+');
  s.push_back(static_cast<char>('0' + exp_digits[0]));
  s.push_back(static_cast<char>('0' + exp_digits[1]));
  return s;
}

SciNotation SciNotation::parse(std::string_view s) {
  auto malformed = [&]() -> SciNotation {
    fail(Err::MalformedNotation, "not canonical scientific notation: '" + std::string(s) + "'");
  };
  SciNotation n;
  size_t i = 0;
  if (!s.empty() && s[0] == '-') {
    n.negative = true;
    i = 1;
  }
  if (s.size() - i != 8) return malformed();
  auto digit = [&](size_t k) -> int {
    char c = s[i + k];
    return (c >= '0' && c <= '9') ? c - '0' : -1;
  };
  int d0 = digit(0), d2 = digit(2), d3 = digit(3), e0 = digit(6), e1 = digit(7);
  if (d0 < 0 || d2 < 0 || d3 < 0 || e0 < 0 || e1 < 0) return malformed();
  if (s[i + 1] != '.' || s[i + 4] != 'e') return malformed();
  if (s[i + 5] != '+' && s[i + 5] != '-') return malformed();
  n.digits = {static_cast<uint8_t>(d0), static_cast<uint8_t>(d2), static_cast<uint8_t>(d3)};
  n.exp_negative = (s[i + 5] == '-');
  n.exp_digits = {static_cast<uint8_t>(e0), static_cast<uint8_t>(e1)};
  if (n.digits[0] == 0) {
    // only the canonical zero may lead with 0
    if (!n.is_zero() || n.negative || n.exp_negative || n.exp_digits[0] || n.exp_digits[1]) {
      return malformed();
    }
  }
  return n;
}

SciNotation encode_number(double x) {
  if (!std::isfinite(x)) fail(Err::NotFinite, "encode_number: value is NaN or infinite");
  SciNotation n;
  if (x == 0.0) return n;  // unique zero form, covers -0.0 as well

  // snprintf %.*e rounds correctly to nearest (ties to even) for the actual
  // double value, which is exactly the 3-significant-digit contract.
  char buf[32];
  int len = std::snprintf(buf, sizeof(buf), "%.2e", x);
  if (len <= 0) fail(Err::NotFinite, "encode_number: formatting failed");
  std::string_view sv(buf, static_cast<size_t>(len));

  size_t epos = sv.find('e');
  std::string_view mant = sv.substr(0, epos);
  std::string_view exps = sv.substr(epos + 1);
  int exp_val = 0;
  std::from_chars(exps.data() + 1, exps.data() + exps.size(), exp_val);
  if (exps[0] == '-') exp_val = -exp_val;
  if (exp_val > 99 || exp_val < -99) {
    fail(Err::OutOfRange, "encode_number: exponent " + std::to_string(exp_val) +
                              " exceeds +/-99");
  }

  size_t i = 0;
  if (mant[0] == '-') {
    n.negative = true;
    i = 1;
  }
  n.digits = {static_cast<uint8_t>(mant[i] - '0'), static_cast<uint8_t>(mant[i + 2] - '0'),
              static_cast<uint8_t>(mant[i + 3] - '0')};
  n.exp_negative = exp_val < 0;
  int ae = exp_val < 0 ? -exp_val : exp_val;
  n.exp_digits = {static_cast<uint8_t>(ae / 10), static_cast<uint8_t>(ae % 10)};
  return n;
}

double decode_number(const SciNotation& s) {
  // from_chars gives the correctly rounded double of the decimal string.
  std::string r = s.render();
  double v = 0.0;
  std::from_chars(r.data(), r.data() + r.size(), v);
  return v;
}

double decode_number(std::string_view s) { return decode_number(SciNotation::parse(s)); }

double clip_value(double x, const ValueRange& r) {
  if (r.min > r.max) fail(Err::BadConfig, "clip_value: min > max");
  return x < r.min ? r.min : (x > r.max ? r.max : x);
}

}  // namespace t2r
