#ifndef VSCAL_CORE_HPP
#define VSCAL_CORE_HPP

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vscal {

/// Instance x in X. 1-D classes use length-1 vectors; finite classes store
/// the domain index in coords[0].
using Point = Eigen::VectorXd;

enum class Label : std::int8_t { negative = -1, positive = +1 };

inline Label flip(Label y) {
  return y == Label::positive ? Label::negative : Label::positive;
}

inline int label_sign(Label y) { return static_cast<int>(y); }

struct LabeledPoint {
  Point x;
  Label y;
};

using LabeledSample = std::vector<LabeledPoint>;

inline void check_finite(const Point& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) {
      throw std::invalid_argument("point has non-finite coordinate");
    }
  }
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic replicate-indexed random stream.
/// (master_seed, replicate_index) fully determines the sequence; substream()
/// derives an independent stream for a named purpose (e.g. label noise) so
/// that consuming one stream never perturbs another.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t replicate_index,
            std::uint64_t salt = 0)
      : master_(master_seed), replicate_(replicate_index), salt_(salt) {
    std::uint64_t s = master_seed;
    std::uint64_t a = splitmix64(s);
    s ^= 0x9E3779B97F4A7C15ULL * (replicate_index + 1);
    std::uint64_t b = splitmix64(s);
    s ^= 0xC2B2AE3D27D4EB4FULL * (salt + 1);
    std::uint64_t c = splitmix64(s);
    engine_.seed(a ^ (b << 1) ^ c);
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0,1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo,hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Integer in [0,n).
  std::uint64_t uniform_index(std::uint64_t n) {
    // rejection sampling keeps the draw exactly uniform
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % n;
  }

  /// Standard normal via the polar method (portable across libstdc++ versions,
  /// unlike std::normal_distribution).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

  RngStream substream(std::uint64_t salt) const {
    return RngStream(master_, replicate_, salt_ * 0x100000001ULL + salt + 1);
  }

  std::uint64_t master_seed() const { return master_; }
  std::uint64_t replicate_index() const { return replicate_; }

 private:
  std::uint64_t master_;
  std::uint64_t replicate_;
  std::uint64_t salt_;
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace vscal

#endif  // VSCAL_CORE_HPP
