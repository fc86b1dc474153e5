#pragma once

#include <cstdint>

#include <Eigen/Dense>

namespace decpomdp {

/// Deterministic 64-bit random stream (splitmix64). The generator is fully
/// specified here rather than taken from <random> so that draws replay
/// bit-identically across platforms and standard libraries.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform draw in [0, 1) with 53 bits of precision.
  double next_double();

  /// Draws an index from a nonnegative weight vector (need not sum to one).
  int sample_categorical(const Eigen::VectorXd& weights);

  /// Number of raw 64-bit draws consumed so far.
  std::uint64_t draws() const { return draws_; }

 private:
  std::uint64_t state_;
  std::uint64_t draws_ = 0;
};

/// Phases of one simulator iteration. Every (agent, iteration, phase) triple
/// owns an independent substream, which makes runs schedule-independent.
enum class Phase : std::uint64_t {
  kInit = 0,
  kTransition = 1,
  kObservation = 2,
  kAction = 3,
  kMarginalization = 4,
};

std::uint64_t mix64(std::uint64_t x);

std::uint64_t derive_stream_id(std::uint64_t master, std::uint64_t agent,
                               std::uint64_t iteration, std::uint64_t phase);

RandomStream substream(std::uint64_t master, int agent, long iteration, Phase phase);

}  // namespace decpomdp
