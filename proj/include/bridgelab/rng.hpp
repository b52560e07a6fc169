#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace bridgelab {

/// 64-bit finalizer from SplitMix64. Used to derive stream ids and keys.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Order-independent stream id for replicate `replicate` of scenario `scenario`.
constexpr std::uint64_t replicate_stream_id(std::uint64_t scenario,
                                            std::uint64_t replicate) noexcept {
  return mix64(mix64(scenario) ^ (replicate + 0x632BE59BD9B4E019ULL));
}

namespace detail {
/// Philox4x32 with 10 rounds (Salmon et al. 2011 constants).
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) noexcept;
}  // namespace detail

/// Counter-based random stream (Philox4x32-10).
///
/// The key is the 64-bit seed; the 128-bit counter is (block index, stream id).
/// Output depends only on (seed, stream_id, number of draws so far), so a
/// stream produces the same sequence on every thread and platform.
///
/// Gaussian draws use the Marsaglia polar method on top of `uniform()`. The
/// second variate of each accepted pair is cached inside the stream.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_id) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Next raw 64-bit word.
  std::uint64_t next_u64() noexcept;

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() noexcept;

  /// Standard normal draw.
  double gaussian() noexcept;

  // UniformRandomBitGenerator interface, for std::shuffle and friends.
  using result_type = std::uint64_t;
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }
  result_type operator()() noexcept { return next_u64(); }

 private:
  void refill() noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
  std::optional<double> spare_gaussian_;
};

inline RandomStream make_stream(std::uint64_t seed, std::uint64_t stream_id) noexcept {
  return RandomStream(seed, stream_id);
}

inline double sample_gaussian(RandomStream& stream) noexcept { return stream.gaussian(); }

}  // namespace bridgelab
