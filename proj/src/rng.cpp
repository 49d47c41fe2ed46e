#include "coord/rng.hpp"

#include "coord/errors.hpp"

namespace coord {

std::uint64_t RngStream::next_below(std::uint64_t bound) {
  if (bound == 0) fail(ErrorKind::Argument, "next_below: bound must be positive");
  if (bound == 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v > limit);
  return v % bound;
}

Eigen::Index RngStream::sample(const Eigen::Ref<const Eigen::ArrayXd>& weights) {
  const double total = weights.sum();
  if (!(total > 0.0)) fail(ErrorKind::Argument, "sample: weights must have positive mass");
  double u = next_unit() * total;
  Eigen::Index last_positive = -1;
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (w <= 0.0) continue;
    last_positive = i;
    u -= w;
    if (u < 0.0) return i;
  }
  return last_positive;  // u landed on accumulated rounding; take the final atom
}

}  // namespace coord
