#pragma once

#include <cstdint>
#include <vector>

namespace ghn {

/// Primes in [lo, hi] by sieve.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

}  // namespace ghn
