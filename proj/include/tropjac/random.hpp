#pragma once

// Reproducible sampling. Every stream is std::mt19937_64 seeded through
// std::seed_seq from (seed, stream tag, trial index); integers are drawn by
// modulo reduction so results do not depend on the standard library's
// distribution implementations.

#include <cstdint>
#include <random>
#include <string_view>

#include "tropjac/numeric.hpp"

namespace tropjac {

class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::string_view tag, std::uint64_t index);

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// Rational p/q with q in [1, max_den] and |p/q| <= bound.
  Rat rational(std::int64_t bound, std::int64_t max_den);

 private:
  std::mt19937_64 engine_;
};

}  // namespace tropjac
