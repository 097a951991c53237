#pragma once

#include <cstdint>
#include <random>

namespace vfc {

/// Reproducible random stream addressed by (seed, stream_id).
///
/// The same (seed, stream_id) always produces the same sample sequence;
/// distinct stream_ids give statistically independent streams, so parallel
/// workers can each own one without coordination. Gaussian variates are
/// generated by Box-Muller on top of mt19937_64 rather than
/// std::normal_distribution, whose algorithm is implementation-defined.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// Uniform on (0,1), never exactly 0 or 1.
  double uniform01();

  /// Normal(0, sigma^2).
  double gaussian(double sigma);

  /// Independent stream derived from the same seed.
  RngStream substream(std::uint64_t id) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

}  // namespace vfc
