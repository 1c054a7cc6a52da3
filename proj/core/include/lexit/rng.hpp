#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>

namespace lexit {

// splitmix64 step; also used to expand seeds into stream states.
inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// xorshift64* stream. Fixed-width arithmetic end to end, so sequences are
// byte-identical across platforms; layout documented in the README.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) {
    std::uint64_t s = seed;
    state_ = splitmix64(s);
    if (state_ == 0) state_ = 0x9e3779b97f4a7c15ull;
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545f4914f6cdd1dull;
  }

  // uniform in [0,1) with 53 bits of mantissa
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform in [0,n); n must be positive. Rejection-free modulo is fine here:
  // n is tiny relative to 2^64 in every call site, bias is < 2^-40.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

// Order-sensitive hash of a word sequence, for pure seeded predicates
// (edge rules, selection functions). splitmix64-based.
inline std::uint64_t mix_words(std::uint64_t seed, std::span<const std::uint64_t> words) {
  std::uint64_t h = seed ^ 0x6a09e667f3bcc909ull;
  for (std::uint64_t w : words) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    std::uint64_t t = h;
    h = splitmix64(t);
  }
  return h;
}

inline double unit_from_hash(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace lexit
