#include "selest/sampling.hpp"

#include <numeric>
#include <random>

namespace selest {

std::vector<std::size_t> sample_rows(std::size_t population, std::size_t sample_size, std::uint64_t seed) {
  std::vector<std::size_t> rows;
  if (sample_size >= population) {
    rows.resize(population);
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    return rows;
  }

  rows.reserve(sample_size);
  std::mt19937_64 rng(seed);
  std::size_t needed = sample_size;
  for (std::size_t row = 0; row < population && needed > 0; ++row) {
    // std::uniform_real_distribution is implementation-defined; take the top 53 bits instead.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const auto remaining = population - row;
    if (u * static_cast<double>(remaining) < static_cast<double>(needed)) {
      rows.push_back(row);
      --needed;
    }
  }
  return rows;
}

}  // namespace selest
