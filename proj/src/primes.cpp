#include "ghn/primes.hpp"

#include <vector>

namespace ghn {

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    if (hi < 2 || hi < lo) return out;
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t i = 2; i * i <= hi; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
    for (std::uint64_t i = std::max<std::uint64_t>(lo, 2); i <= hi; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

}  // namespace ghn
