#include "ghn/rhs.hpp"

#include "ghn/binomial.hpp"
#include "ghn/error.hpp"
#include "ghn/harmonic.hpp"

namespace ghn {

namespace {

// Term B#_{A,b,j,p} as it appears inside the RHS sums. Terms whose prefactor
// vanishes or is undefined stem from vanishing terms of the source expansion
// and contribute zero; odd Bernoulli indices above 1 vanish outright.
PadicResidue bsharp_term(long A, long b, long j, const Modulus& m, const BernoulliTable& bern) {
    PadicResidue zero(m, 0);
    long num = A - b - 1 + j;
    long den = A - b + j;
    if (den == 0 || num == 0) return zero;
    long n1 = static_cast<long>(m.p()) - A + b - j;
    if (n1 < 0) fail(errc::hypothesis_violated, "B# index below zero");
    if (j % 2 == 1 && j != 1) return zero;
    if (n1 % 2 == 1 && n1 != 1) return zero;
    return to_residue(Rational(num, den), m) *
           bernoulli_residue(bern, static_cast<std::size_t>(n1), m) *
           bernoulli_residue(bern, static_cast<std::size_t>(j), m);
}

// B_j B_n as a residue, skipping vanishing parities without table lookups.
PadicResidue bern_pair(long j, long n, const Modulus& m, const BernoulliTable& bern) {
    PadicResidue zero(m, 0);
    if (j < 0 || n < 0) return zero;
    if (j % 2 == 1 && j != 1) return zero;
    if (n % 2 == 1 && n != 1) return zero;
    return bernoulli_residue(bern, static_cast<std::size_t>(j), m) *
           bernoulli_residue(bern, static_cast<std::size_t>(n), m);
}

Rational frac(const Int& num, const Int& den) { return {num, den}; }

}  // namespace

PadicResidue b_sharp(const BSharpSpec& spec, const Modulus& m, const BernoulliTable& table) {
    if (spec.a - spec.b + spec.j == 0)
        fail(errc::zero_denominator, "B# prefactor denominator a-b+j = 0");
    return bsharp_term(spec.a, spec.b, spec.j, m, table);
}

Int k_coeff(long a, long b) {
    Int d = binomial(static_cast<unsigned long>(a + b + 1), static_cast<unsigned long>(b)) -
            binomial(static_cast<unsigned long>(a + b + 1), static_cast<unsigned long>(a));
    return (a % 2 == 0) ? d : -d;
}

PadicResidue theorem1_formula(long a, long b, const Modulus& m2, const BernoulliTable& bern) {
    const long p = static_cast<long>(m2.p());
    PadicResidue acc(m2, 0);
    if (a <= b) {
        acc += to_residue(frac(binomial(b + 1, a), Int(b + 1)), m2) *
               bernoulli_residue(bern, b - a + 1, m2);
        PadicResidue s(m2, 0);
        for (long j = 0; j <= b - a + 1; ++j)
            s += scale(bern_pair(b - a + 1 - j, j, m2, bern), Rational(binomial(b + 1, j)));
        if (a >= 2)
            for (long j = b - a + 2; j <= b; ++j)
                s += scale(bsharp_term(a, b, j, m2, bern), Rational(binomial(b + 1, j)));
        acc -= scale(s, frac(Int(p), Int(b + 1)));
        return acc;
    }
    if (a == b + 1) {
        acc += to_residue(frac(Int(1 - p), Int(a)), m2);
        PadicResidue s(m2, 0);
        for (long j = 1; j <= a - 1; ++j)
            s += scale(bsharp_term(a, a - 1, j, m2, bern), Rational(binomial(a, j)));
        acc -= scale(s, frac(Int(p), Int(a)));
        return acc;
    }
    PadicResidue s(m2, 0);
    for (long j = 0; j <= b; ++j)
        s += scale(bsharp_term(a, b, j, m2, bern), Rational(binomial(b + 1, j)));
    return acc - scale(s, frac(Int(p), Int(b + 1)));
}

PadicResidue rhs_theorem1(long a, long b, std::uint64_t p, const BernoulliTable& table) {
    if (a < 1 || b < 0 || static_cast<std::uint64_t>(std::max(a, b)) + 3 > p)
        fail(errc::hypothesis_violated, "theorem 1 needs a >= 1, b >= 0, max(a,b)+3 <= p");
    return theorem1_formula(a, b, Modulus(p, 2), table);
}

PadicResidue glaisher_rhs(long m_order, std::uint64_t p, const BernoulliTable& table) {
    if (m_order < 1 || p < static_cast<std::uint64_t>(m_order) + 3)
        fail(errc::hypothesis_violated, "Glaisher needs m >= 1 and p >= m+3");
    if (m_order % 2 == 0) {
        Modulus m2(p, 2);
        return scale(bernoulli_residue(table, p - m_order - 1, m2),
                     frac(Int(m_order) * Int(p), Int(m_order + 1)));
    }
    Modulus m3(p, 3);
    return scale(bernoulli_residue(table, p - m_order - 2, m3),
                 -frac(Int(m_order) * Int(m_order + 1) * Int(p) * Int(p), Int(2 * (m_order + 2))));
}

PadicResidue help1_rhs(long a, std::uint64_t p, const BernoulliTable& table) {
    if (a < 1 || p < static_cast<std::uint64_t>(a) + 3)
        fail(errc::hypothesis_violated, "power-sum lemma needs 4 <= a+3 <= p");
    Modulus m2(p, 2);
    return scale(bernoulli_residue(table, a, m2), Rational(Int(p)));
}

PadicResidue zhao_formula(long a, long c, const Modulus& m2, const BernoulliTable& bern) {
    const std::uint64_t p = m2.p();
    Int k = k_coeff(a, c) + a + c;
    return scale(bernoulli_residue(bern, p - a - c - 1, m2),
                 frac(Int(p) * k, Int(2 * (a + c + 1))));
}

PadicResidue wang_yang3_formula(long b, const Modulus& m2, const BernoulliTable& bern) {
    const long p = static_cast<long>(m2.p());
    PadicResidue acc = scale(bernoulli_residue(bern, b, m2), Rational(1 - p));
    PadicResidue s(m2, 0);
    for (long j = 0; j <= b; ++j)
        s += scale(bern_pair(j, b - j, m2, bern), Rational(binomial(b + 1, j)));
    return acc - scale(s, frac(Int(p), Int(b + 1)));
}

PadicResidue wang_yang4_formula(long b, const Modulus& m2, const BernoulliTable& bern) {
    const long p = static_cast<long>(m2.p());
    PadicResidue acc = bernoulli_residue(bern, b - 1, m2);
    PadicResidue s1(m2, 0), s2(m2, 0);
    for (long j = 0; j <= b - 1; ++j) {
        PadicResidue pair = bern_pair(j, b - j - 1, m2, bern);
        s1 += scale(pair, Rational(binomial(b, j)));
        s2 += pair;
    }
    acc -= scale(s1, frac(Int(p) * Int(b + 2), Int(2 * b)));
    acc += scale(s2, frac(Int(p), Int(4)));
    return acc;
}

PadicResidue closed_s1k1(int k, std::uint64_t p) {
    Modulus m3(p, 3);
    Int P(p);
    switch (k) {
        case 1: return to_residue(frac(-(P * P - 3 * P + 2), Int(4)), m3);
        case 2: return to_residue(frac(15 * P * P - 17 * P + 6, Int(36)), m3);
        case 3: return to_residue(frac(-(21 * P * P - 10 * P), Int(48)), m3);
        default: fail(errc::hypothesis_violated, "closed form exists for k = 1, 2, 3");
    }
}

PadicResidue opposite_parity_rhs(long a, long b, const Modulus& m2, const BernoulliTable& bern) {
    const std::uint64_t p = m2.p();
    return scale(bernoulli_residue(bern, p - a - b, m2),
                 -frac(k_coeff(a, b) * Int(p), Int(2 * (a + b))));
}

PadicResidue wolstenholme_quotient(std::uint64_t p) {
    PadicResidue h = ghn_residue({p - 1, 1}, Modulus(p, 4));
    return divide_by_p_power(h, 2);
}

PadicResidue h2_quotient(std::uint64_t p) {
    PadicResidue h = ghn_residue({p - 1, 2}, Modulus(p, 3));
    return divide_by_p_power(h, 1);
}

namespace {

// sum_{i<p} i^c H_i^(a) mod p^2 as a closed form, any integer exponent c.
PadicResidue weighted_sum_rhs(long a, long c, const Modulus& m2, const BernoulliTable& bern) {
    if (c >= 1) return theorem1_formula(a, c, m2, bern);
    if (c == 0) {
        // (n+1)H - H^(a-1) at n = p-1; the pH^(a) part vanishes mod p^2
        if (a == 1) return to_residue(Rational(1 - static_cast<long>(m2.p())), m2);
        if ((a - 1) % 2 == 0) return -glaisher_rhs(a - 1, m2.p(), bern);
        return {m2, 0};
    }
    return zhao_formula(a, -c, m2, bern);
}

}  // namespace

PadicResidue theorem2_formula(long a, long b, const Modulus& m2, const BernoulliTable& bern) {
    const long p = static_cast<long>(m2.p());
    PadicResidue acc(m2, 0);
    if (b + 1 < 2 * a) {
        acc += scale(bsharp_term(2 * a, b, b - a + 1, m2, bern),
                     frac(Int(p) * binomial(b, a), Int(b - a + 1)));
        PadicResidue s1(m2, 0);
        for (long j = 0; j <= b - a; ++j)
            s1 += scale(bsharp_term(2 * a, b, j, m2, bern), Rational(binomial(b - a + 1, j)));
        acc -= scale(s1, frac(Int(p), Int(b - a + 1)));
        PadicResidue s2(m2, 0);
        for (long j = b - a + 2; j <= b; ++j)
            s2 += scale(bern_pair(j, p - 2 * a + b - j, m2, bern),
                        Rational(gen_binomial(b - a - j - 1, a - 1) * binomial(b, j)));
        acc -= scale(s2, frac(Int(p), Int(a) * Int(a + 1)));
        return acc;
    }
    if (b + 1 == 2 * a) {
        acc += to_residue(frac(Int(1 - p), Int(a)) - frac(Int(p), Int(2 * a) * Int(a + 1)), m2);
        PadicResidue s1(m2, 0);
        for (long j = 1; j <= a - 1; ++j)
            s1 += scale(bsharp_term(2 * a, 2 * a - 1, j, m2, bern), Rational(binomial(a, j)));
        acc -= scale(s1, frac(Int(p), Int(a)));
        acc += scale(bsharp_term(2 * a, 2 * a - 1, a, m2, bern),
                     frac(Int(p) * binomial(2 * a, a), Int(2 * a)));
        PadicResidue s2(m2, 0);
        for (long j = a + 1; j <= 2 * a - 1; ++j)
            s2 += scale(bern_pair(j, p - j - 1, m2, bern),
                        Rational(gen_binomial(a - j - 2, a - 1) * binomial(2 * a - 1, j)));
        acc -= scale(s2, frac(Int(p), Int(a) * Int(a + 1)));
        return acc;
    }
    // b + 1 > 2a
    if (b - 2 * a > 1) {
        acc += scale(bernoulli_residue(bern, b - 2 * a + 1, m2),
                     frac(Int(1 - p) * binomial(b - a + 1, a), Int(b - a + 1)));
        PadicResidue s1(m2, 0);
        for (long j = 0; j <= b - a; ++j)
            s1 += scale(bsharp_term(2 * a, b, j, m2, bern), Rational(binomial(b - a + 1, j)));
        acc -= scale(s1, frac(Int(p), Int(b - a + 1)));
        PadicResidue s2(m2, 0);
        for (long j = 0; j <= b - 2 * a + 1; ++j)
            s2 += scale(bern_pair(b - 2 * a + 1 - j, j, m2, bern),
                        Rational(binomial(b + 1, j) * gen_binomial(b - a + 1 - j, a)));
        acc -= scale(s2, frac(Int(p), Int(a + 1) * Int(b + 1)));
        PadicResidue s3(m2, 0);
        for (long j = b - a + 1; j <= b; ++j)
            s3 += scale(bern_pair(j, p - 2 * a + b - j, m2, bern),
                        Rational(gen_binomial(b - a - j - 1, a - 1) * binomial(b, j)));
        acc -= scale(s3, frac(Int(p), Int(a) * Int(a + 1)));
        return acc;
    }
    // b = 2a+1: the collapsed closed forms fail the oracle here; assemble the
    // value from the product expansion instead.
    acc += weighted_sum_rhs(a, b - a, m2, bern);
    acc -= theorem1_formula(2 * a, b, m2, bern);
    PadicResidue inner = weighted_sum_rhs(a, b - a + 1, m2, bern);
    for (long j = 2; j <= b; j += 2) {
        const Rational& bj = bern.value(j);
        if (bj.is_zero()) continue;
        inner += scale(weighted_sum_rhs(a, b - a + 1 - j, m2, bern),
                       Rational(binomial(b + 1, j)) * bj);
    }
    acc -= scale(inner, frac(Int(2), Int(b + 1)));
    return acc;
}

PadicResidue rhs_theorem2(long a, long b, std::uint64_t p, const BernoulliTable& table) {
    if (a < 2 || b <= a || b % 2 == 0 ||
        static_cast<std::uint64_t>(std::max(2 * a, b)) + 3 > p)
        fail(errc::hypothesis_violated, "theorem 2 needs 2 <= a < b, b odd, max(2a,b)+3 <= p");
    return theorem2_formula(a, b, Modulus(p, 2), table);
}

PadicResidue rhs_corollary(long a, long b, std::uint64_t p, const BernoulliTable& table) {
    if (a < 1 || b < 1 || static_cast<std::uint64_t>(std::max(a, b)) + 3 > p)
        fail(errc::hypothesis_violated, "corollary needs a, b >= 1 and max(a,b)+3 <= p");
    Modulus m2(p, 2);
    if ((a + b) % 2 != 0) {
        if (a >= b - 1)
            fail(errc::hypothesis_violated, "opposite-parity corollary needs a < b-1");
        PadicResidue acc = scale(bernoulli_residue(table, b - a + 1, m2),
                                 frac(Int(1 - static_cast<long>(p)) * binomial(b + 1, a), Int(b + 1)));
        PadicResidue s(m2, 0);
        for (long j = 0; j <= b; ++j) {
            if (a - b + j == 0) continue;
            s += scale(bsharp_term(a, b, j, m2, table), Rational(binomial(b + 1, j)));
        }
        return acc - scale(s, frac(Int(p), Int(b + 1)));
    }
    if (a == b)
        return to_residue((Rational(1) - frac(Int(a + 2) * Int(p), Int(a + 1))) * table.value(1), m2);
    if (a < b) {
        Rational coeff = Rational(1) + frac(binomial(b + 1, a + 1), Int(b + 1));
        return to_residue(-coeff * Rational(Int(p)) * table.value(b - a) * table.value(1), m2);
    }
    return -scale(bsharp_term(a, b, 1, m2, table), Rational(Int(p)));
}

}  // namespace ghn
