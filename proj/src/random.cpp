#include "tropjac/random.hpp"

#include <vector>

namespace tropjac {

namespace {

// FNV-1a; keeps stream tags stable across platforms.
std::uint32_t tag_hash(std::string_view tag) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

}  // namespace

SampleStream::SampleStream(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), tag_hash(tag),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  engine_.seed(seq);
}

std::int64_t SampleStream::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

Rat SampleStream::rational(std::int64_t bound, std::int64_t max_den) {
  const std::int64_t den = uniform(1, max_den);
  const std::int64_t num = uniform(-bound * den, bound * den);
  return Rat(num, den);
}

}  // namespace tropjac
