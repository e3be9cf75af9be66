#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghn/bernoulli.hpp"
#include "ghn/modular.hpp"
#include "ghn/rational.hpp"

namespace ghn {

/// H_n^(r) = sum_{k=1..n} k^-r; r may be any integer (r <= 0 is the power
/// sum), H_0^(r) = 0, H_n^(0) = n.
struct HarmonicSpec {
    std::uint64_t n = 0;
    long r = 1;
};

Rational ghn_exact(const HarmonicSpec& spec);

/// Same value mod p^e, computed directly with batch inverses (never through
/// the exact rational). Positive r requires n < p.
PadicResidue ghn_residue(const HarmonicSpec& spec, const Modulus& m);

/// Faulhaber polynomial value for the power sum H_n^(-a).
Rational faulhaber_eval(std::uint64_t n, unsigned long a, const BernoulliTable& table);

struct IdentityReport {
    bool holds = false;
    Rational lhs;
    Rational rhs;
};

/// Exact algebraic identities checkable over the rationals.
/// Ids and parameter lists:
///   prop2d      {a, b, n}
///   prop3d      {a, b, c, n}
///   half_square {a, n}
///   b_zero      {a, n}
///   shift       {a, b, n}
///   b_one       {a, n}
IdentityReport identity_check(const std::string& id, const std::vector<long>& params);

}  // namespace ghn
