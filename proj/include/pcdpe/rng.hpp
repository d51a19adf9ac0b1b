#pragma once

#include <array>
#include <cstdint>

namespace pcdpe {

// Identifies one reproducible random stream.  Replicate k of a Monte Carlo
// run uses stream index k, so results are independent of scheduling.
struct RngSeed {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;
};

// Philox4x32-10 counter-based generator (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3").  The n-th draw of stream s under master seed
// m is a pure function of (m, s, n): no state is shared between streams and
// any (seed, stream) pair can be replayed independently.
class Philox {
 public:
  explicit Philox(RngSeed seed) : Philox(seed.master, seed.stream) {}
  Philox(std::uint64_t master, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(master),
             static_cast<std::uint32_t>(master >> 32)},
        hi_{static_cast<std::uint32_t>(stream),
            static_cast<std::uint32_t>(stream >> 32)} {}

  std::uint32_t next_u32() {
    if (have_ == 0) refill();
    return block_[--have_];
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  // Uniform double in [0, 1) with full 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Lemire's multiply-shift rejection.
    while (true) {
      const std::uint64_t x = next_u64();
      const unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
      const std::uint64_t lo = static_cast<std::uint64_t>(m);
      if (lo >= n || lo >= (-n) % n) return static_cast<std::uint64_t>(m >> 64);
    }
  }

 private:
  static constexpr std::uint32_t kMult0 = 0xD2511F53u;
  static constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  void refill() {
    std::uint32_t c0 = static_cast<std::uint32_t>(counter_);
    std::uint32_t c1 = static_cast<std::uint32_t>(counter_ >> 32);
    std::uint32_t c2 = hi_[0];
    std::uint32_t c3 = hi_[1];
    std::uint32_t k0 = key_[0];
    std::uint32_t k1 = key_[1];
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = static_cast<std::uint64_t>(kMult0) * c0;
      const std::uint64_t p1 = static_cast<std::uint64_t>(kMult1) * c2;
      const std::uint32_t n0 =
          static_cast<std::uint32_t>(p1 >> 32) ^ c1 ^ k0;
      const std::uint32_t n1 = static_cast<std::uint32_t>(p1);
      const std::uint32_t n2 =
          static_cast<std::uint32_t>(p0 >> 32) ^ c3 ^ k1;
      const std::uint32_t n3 = static_cast<std::uint32_t>(p0);
      c0 = n0;
      c1 = n1;
      c2 = n2;
      c3 = n3;
      k0 += kWeyl0;
      k1 += kWeyl1;
    }
    block_ = {c3, c2, c1, c0};
    have_ = 4;
    ++counter_;
  }

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 2> hi_;  // stream index occupies the counter's high lanes
  std::uint64_t counter_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int have_ = 0;
};

}  // namespace pcdpe
