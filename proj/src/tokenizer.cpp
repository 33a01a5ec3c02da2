#include "t2r/tokenizer.hpp"

namespace t2r {

void TokenSequence::check_invariants() const {
  if (ids.size() != loss_mask.size()) {
    fail(Err::LengthMismatch, "TokenSequence: ids and loss_mask lengths differ");
  }
  for (size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == Vocabulary::kPad && loss_mask[i]) {
      fail(Err::SchemaViolation, "TokenSequence: PAD token carries loss");
    }
  }
}

TokenSequence encode(std::string_view text) {
  TokenSequence seq;
  seq.ids.reserve(text.size());
  seq.loss_mask.assign(text.size(), 0);
  for (unsigned char c : text) {
    seq.ids.push_back(Vocabulary::byte_id(c));
  }
  return seq;
}

std::string decode(const TokenSequence& seq) {
  std::string out;
  out.reserve(seq.ids.size());
  for (int32_t id : seq.ids) {
    if (Vocabulary::is_byte(id)) {
      out.push_back(static_cast<char>(static_cast<unsigned char>(id)));
    } else if (Vocabulary::is_special(id)) {
      continue;
    } else {
      fail(Err::UnknownToken, "decode: id " + std::to_string(id) + " outside vocabulary");
    }
  }
  return out;
}

}  // namespace t2r
