#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace t2r {

enum class Err {
  UnknownToken,
  OutOfRange,
  NotFinite,
  MalformedNotation,
  SchemaViolation,
  ContextOverflow,
  SequenceTooLong,
  EmptyMask,
  NonFiniteLoss,
  NoAdapters,
  LengthMismatch,
  EmptyInput,
  DegenerateInput,
  EmptySplit,
  BadConfig,
  Io,
};

/// Single exception type for all contract violations; carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

/// splitmix64 mixer; used to derive independent RNG streams from one root seed.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derive a per-item seed from a root seed and up to two stream tags.
inline uint64_t derive_seed(uint64_t root, uint64_t a, uint64_t b = 0) {
  return splitmix64(splitmix64(root ^ (0xa076'1d64'78bd'642fULL * (a + 1))) ^
                    (0xe703'7ed1'a0b4'28dbULL * (b + 1)));
}

inline uint64_t fnv1a64(const void* data, size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  uint64_t h = 0xcbf29ce484222325ULL;
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

}  // namespace t2r
