#pragma once

#include <cstdint>

#include "ghn/bernoulli.hpp"
#include "ghn/modular.hpp"

namespace ghn {

struct BSharpSpec {
    long a = 0;
    long b = 0;
    long j = 0;
    std::uint64_t p = 0;
};

/// B#_{a,b,j,p} = ((a-b-1+j)/(a-b+j)) B_{p-a+b-j} B_j mod p^e.
/// Fails with zero_denominator when a-b+j = 0.
PadicResidue b_sharp(const BSharpSpec& spec, const Modulus& m, const BernoulliTable& table);

/// k_{a,b} = (-1)^a [C(a+b+1,b) - C(a+b+1,a)].
Int k_coeff(long a, long b);

struct KCoeffSpec {
    long a = 0;
    long b = 0;
};
inline Int k_coeff(const KCoeffSpec& s) { return k_coeff(s.a, s.b); }

// Closed-form right-hand sides mod p^2. The *_formula variants evaluate the
// bare formula; the rhs_* entry points gate on the stated hypotheses and fail
// with hypothesis_violated outside them.

PadicResidue theorem1_formula(long a, long b, const Modulus& m2, const BernoulliTable& table);
PadicResidue rhs_theorem1(long a, long b, std::uint64_t p, const BernoulliTable& table);

PadicResidue theorem2_formula(long a, long b, const Modulus& m2, const BernoulliTable& table);
PadicResidue rhs_theorem2(long a, long b, std::uint64_t p, const BernoulliTable& table);

/// Parity corollaries of theorem 1 (a+b odd with a < b-1, or same parity with
/// the three orderings).
PadicResidue rhs_corollary(long a, long b, std::uint64_t p, const BernoulliTable& table);

/// Glaisher: H_{p-1}^(m) mod p^2 (m even) or p^3 (m odd).
PadicResidue glaisher_rhs(long m_order, std::uint64_t p, const BernoulliTable& table);

/// p B_a mod p^2 (power-sum lemma for H_{p-1}^(-a)).
PadicResidue help1_rhs(long a, std::uint64_t p, const BernoulliTable& table);

/// Zhao: S_{a,-c,1} mod p^2 for a, c of the same parity, p > a+c+1.
PadicResidue zhao_formula(long a, long c, const Modulus& m2, const BernoulliTable& table);

PadicResidue wang_yang3_formula(long b, const Modulus& m2, const BernoulliTable& table);
PadicResidue wang_yang4_formula(long b, const Modulus& m2, const BernoulliTable& table);

/// S_{1,k,1} mod p^3 closed forms, k = 1, 2, 3.
PadicResidue closed_s1k1(int k, std::uint64_t p);

/// Opposite-parity product congruence: -(k_{a,b}/(2(a+b))) p B_{p-a-b} mod p^2.
PadicResidue opposite_parity_rhs(long a, long b, const Modulus& m2, const BernoulliTable& table);

// Wolstenholme-licensed divisions used by the chain and section-5 checks.
// Each asserts the required valuation (insufficient_valuation otherwise).

/// H_{p-1} / p^2 known mod p^2.
PadicResidue wolstenholme_quotient(std::uint64_t p);
/// H_{p-1}^(2) / p known mod p^2.
PadicResidue h2_quotient(std::uint64_t p);

}  // namespace ghn
