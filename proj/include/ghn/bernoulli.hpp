#pragma once

#include <cstddef>
#include <vector>

#include "ghn/modular.hpp"
#include "ghn/rational.hpp"

namespace ghn {

/// Exact Bernoulli numbers B_0..B_N (convention B_1 = -1/2), built once via
/// the defining recurrence sum_{j<=n} C(n+1,j) B_j = 0 and immutable after.
class BernoulliTable {
public:
    explicit BernoulliTable(std::size_t max_index);

    std::size_t max_index() const { return values_.size() - 1; }
    const Rational& value(std::size_t n) const;

private:
    std::vector<Rational> values_;
};

/// B_n mod p^e. Fails with denominator_divisible at the von Staudt-Clausen
/// obstruction (p-1 | n for even n).
PadicResidue bernoulli_residue(const BernoulliTable& table, std::size_t n, const Modulus& m);

/// B_{2n} + sum of 1/p over primes with (p-1) | 2n; asserts integrality and
/// returns the integer witness.
Rational von_staudt_clausen_witness(const BernoulliTable& table, unsigned long even_index);

/// Kummer: B_{p+b-1}/(p+b-1) == B_b/b (mod p) for even b with (p-1) not
/// dividing b. The table must reach index p+b-1.
bool kummer_check(const BernoulliTable& table, unsigned long b, std::uint64_t p);

}  // namespace ghn
