#pragma once

#include <cstdint>
#include <vector>

#include "ghn/modular.hpp"
#include "ghn/rational.hpp"

namespace ghn {

/// sum_{i=1}^{p-1} i^weight * prod_j H_i^(factors[j]) mod p^e.
/// S_{a,b,k,p} is the special case of k equal factors a with weight b.
struct SumSpec {
    long weight = 0;
    std::vector<long> factors;
    std::uint64_t p = 0;
    unsigned e = 1;
};

/// Single pass i = 1..p-1 with incrementally maintained running GHN residues.
PadicResidue oracle_sum(const SumSpec& spec);

/// Same sum over exact rationals (cross-validation and CLI display).
Rational oracle_sum_exact(const SumSpec& spec);

/// sum_{j=m}^{p-1} C(j,m) H_j mod p^e, binomials by Pascal recurrence.
PadicResidue oracle_binomial_hsum(std::uint64_t m, std::uint64_t p, unsigned e);

Rational oracle_binomial_hsum_exact(std::uint64_t m, std::uint64_t p);

}  // namespace ghn
