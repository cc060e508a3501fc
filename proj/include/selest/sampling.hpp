#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace selest {

/// Uniform sample of min(sample_size, population) distinct row indices, returned in increasing order.
/// Selection sampling over a seeded mt19937_64; the result depends only on the arguments.
std::vector<std::size_t> sample_rows(std::size_t population, std::size_t sample_size, std::uint64_t seed);

}  // namespace selest
