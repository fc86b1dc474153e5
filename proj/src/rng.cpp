#include "decpomdp/rng.hpp"

#include <stdexcept>

namespace decpomdp {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

std::uint64_t RandomStream::next_u64() {
  state_ += 0x9E3779B97F4A7C15ull;
  ++draws_;
  return mix64(state_);
}

double RandomStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

int RandomStream::sample_categorical(const Eigen::VectorXd& weights) {
  if (weights.size() == 0) throw std::invalid_argument("sample_categorical: empty weight vector");
  const double total = weights.sum();
  if (!(total > 0.0)) throw std::invalid_argument("sample_categorical: weights sum to zero");
  const double u = next_double() * total;
  double cum = 0.0;
  int last_positive = -1;
  for (int i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (w < 0.0) throw std::invalid_argument("sample_categorical: negative weight");
    if (w > 0.0) last_positive = i;
    cum += w;
    if (u < cum) return i;
  }
  return last_positive;  // u landed on accumulated rounding slack
}

std::uint64_t derive_stream_id(std::uint64_t master, std::uint64_t agent,
                               std::uint64_t iteration, std::uint64_t phase) {
  std::uint64_t h = mix64(master ^ 0xA0761D6478BD642Full);
  h = mix64(h ^ (agent + 0x9E3779B97F4A7C15ull));
  h = mix64(h ^ (iteration + 0xE7037ED1A0B428DBull));
  h = mix64(h ^ (phase + 0x8EBC6AF09C88C6E3ull));
  return h;
}

RandomStream substream(std::uint64_t master, int agent, long iteration, Phase phase) {
  return RandomStream(derive_stream_id(master, static_cast<std::uint64_t>(agent),
                                       static_cast<std::uint64_t>(iteration),
                                       static_cast<std::uint64_t>(phase)));
}

}  // namespace decpomdp
