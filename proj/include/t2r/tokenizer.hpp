#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "t2r/common.hpp"

namespace t2r {

/// Byte-level vocabulary: ids 0..255 are raw byte values, specials sit above so
/// a byte's id equals its value. Every digit character is one token, which is the
/// precondition the constrained decoder relies on.
struct Vocabulary {
  static constexpr int32_t kNumBytes = 256;
  static constexpr int32_t kPad = 256;
  static constexpr int32_t kBos = 257;
  static constexpr int32_t kEos = 258;
  static constexpr int32_t kSize = 259;

  static constexpr bool is_byte(int32_t id) { return id >= 0 && id < kNumBytes; }
  static constexpr bool is_special(int32_t id) { return id >= kNumBytes && id < kSize; }
  static constexpr bool is_valid(int32_t id) { return id >= 0 && id < kSize; }

  static constexpr int32_t byte_id(unsigned char c) { return static_cast<int32_t>(c); }
  /// Token id for decimal digit d in [0, 9].
  static constexpr int32_t digit_id(int d) { return byte_id(static_cast<unsigned char>('0' + d)); }
  static constexpr bool is_digit(int32_t id) {
    return id >= digit_id(0) && id <= digit_id(9);
  }

  static constexpr int32_t kMinus = '-';
  static constexpr int32_t kPlus = '+';
  static constexpr int32_t kDot = '.';
  static constexpr int32_t kExp = 'e';
  static constexpr int32_t kQuote = '"';
  static constexpr int32_t kComma = ',';
  static constexpr int32_t kColon = ':';
  static constexpr int32_t kLBrace = '{';
  static constexpr int32_t kRBrace = '}';
};

/// Token ids plus a parallel loss mask (true = token contributes to the CE loss).
struct TokenSequence {
  std::vector<int32_t> ids;
  std::vector<uint8_t> loss_mask;

  size_t size() const { return ids.size(); }
  bool empty() const { return ids.empty(); }

  void push(int32_t id, bool mask) {
    ids.push_back(id);
    loss_mask.push_back(mask ? 1 : 0);
  }

  /// len(ids) == len(loss_mask) and PAD never carries loss.
  void check_invariants() const;
};

/// Byte-level encode; total on any byte string. loss_mask is all false.
TokenSequence encode(std::string_view text);

/// Inverse of encode on non-special ids; specials (PAD/BOS/EOS) are stripped.
/// Throws UnknownToken for ids outside the vocabulary.
std::string decode(const TokenSequence& seq);

}  // namespace t2r
