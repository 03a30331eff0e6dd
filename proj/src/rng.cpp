#include "polysamp/rng.hpp"

#include <cassert>

namespace polysamp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed)
    : seed_(seed), gen_(splitmix64(seed)) {}

double RandomSource::uniform_real() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomSource::uniform_int(std::uint64_t bound) {
  assert(bound >= 1);
  // Lemire bounded generation with rejection of the short top range.
  while (true) {
    std::uint64_t x = gen_();
    unsigned __int128 m =
        static_cast<unsigned __int128>(x) * static_cast<unsigned __int128>(bound);
    std::uint64_t low = static_cast<std::uint64_t>(m);
    if (low >= bound || low >= (0 - bound) % bound) {
      return static_cast<std::uint64_t>(m >> 64);
    }
  }
}

bool RandomSource::bernoulli(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return uniform_real() < p;
}

bool RandomSource::bernoulli_rational(const mpq_class& p) {
  assert(p >= 0 && p <= 1);
  if (p == 0) return false;
  if (p == 1) return true;
  // Walk the binary expansion of p against a stream of random bits; the
  // first disagreement decides (a random bit 0 against an expansion bit 1
  // means the uniform lies below p).
  mpq_class frac = p;
  while (true) {
    frac *= 2;
    bool p_bit = frac >= 1;
    if (p_bit) frac -= 1;
    bool r_bit = random_bit();
    if (r_bit != p_bit) return p_bit;
    if (frac == 0) return false;  // expansion terminated; remaining bits 0
  }
}

bool RandomSource::random_bit() {
  if (bits_left_ == 0) {
    bit_buffer_ = gen_();
    bits_left_ = 64;
  }
  bool bit = (bit_buffer_ & 1) != 0;
  bit_buffer_ >>= 1;
  --bits_left_;
  return bit;
}

RandomSource RandomSource::split(std::uint64_t index) const {
  return RandomSource(splitmix64(seed_ ^ (0x6a09e667f3bcc909ULL + index)));
}

}  // namespace polysamp
