#include "vfc/rng.hpp"

#include <cmath>
#include <numbers>

namespace vfc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  engine_.seed(splitmix64(splitmix64(seed) ^ splitmix64(stream_id + 0x6a09e667f3bcc909ULL)));
}

double RngStream::uniform01() {
  // 53-bit mantissa, offset by half an ulp to stay inside the open interval.
  const std::uint64_t bits = engine_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double RngStream::gaussian(double sigma) {
  const double u1 = uniform01();
  const double u2 = uniform01();
  return sigma * std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

RngStream RngStream::substream(std::uint64_t id) const {
  return RngStream(seed_, splitmix64(stream_id_) ^ (id + 1));
}

}  // namespace vfc
