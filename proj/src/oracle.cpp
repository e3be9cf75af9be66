#include "ghn/oracle.hpp"

#include "ghn/binomial.hpp"
#include "ghn/error.hpp"

namespace ghn {

namespace {

Rational reciprocal_power(std::uint64_t k, long r) {
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), Int(static_cast<unsigned long>(k)).get_mpz_t(),
               static_cast<unsigned long>(r < 0 ? -r : r));
    return r >= 0 ? Rational(Int(1), pw) : Rational(pw);
}

}  // namespace

PadicResidue oracle_sum(const SumSpec& spec) {
    Modulus m(spec.p, spec.e);
    std::uint64_t mod = m.value();
    auto inv = batch_inverses(spec.p - 1, m);
    std::vector<std::uint64_t> running(spec.factors.size(), 0);
    std::uint64_t acc = 0;
    for (std::uint64_t i = 1; i < spec.p; ++i) {
        std::uint64_t term =
            spec.weight >= 0
                ? pow_mod(i, static_cast<std::uint64_t>(spec.weight), mod)
                : pow_mod(inv[i], static_cast<std::uint64_t>(-spec.weight), mod);
        for (std::size_t f = 0; f < spec.factors.size(); ++f) {
            long a = spec.factors[f];
            std::uint64_t step = a >= 0 ? pow_mod(inv[i], static_cast<std::uint64_t>(a), mod)
                                        : pow_mod(i, static_cast<std::uint64_t>(-a), mod);
            running[f] += step;
            if (running[f] >= mod) running[f] -= mod;
            term = mul_mod(term, running[f], mod);
        }
        acc += term;
        if (acc >= mod) acc -= mod;
    }
    return {m, acc};
}

Rational oracle_sum_exact(const SumSpec& spec) {
    Rational acc;
    std::vector<Rational> running(spec.factors.size());
    for (std::uint64_t i = 1; i < spec.p; ++i) {
        Rational term = reciprocal_power(i, -spec.weight);
        for (std::size_t f = 0; f < spec.factors.size(); ++f) {
            running[f] += reciprocal_power(i, spec.factors[f]);
            term *= running[f];
        }
        acc += term;
    }
    return acc;
}

PadicResidue oracle_binomial_hsum(std::uint64_t m_low, std::uint64_t p, unsigned e) {
    Modulus m(p, e);
    if (m_low > p - 1) fail(errc::hypothesis_violated, "binomial H-sum needs m <= p-1");
    std::uint64_t mod = m.value();
    auto inv = batch_inverses(p - 1, m);
    // rolling Pascal row: row[t] = C(j, t) for t <= m_low
    std::vector<std::uint64_t> row(m_low + 1, 0);
    row[0] = 1;
    std::uint64_t h = 0, acc = 0;
    for (std::uint64_t j = 1; j < p; ++j) {
        for (std::uint64_t t = std::min(j, m_low); t >= 1; --t) {
            row[t] += row[t - 1];
            if (row[t] >= mod) row[t] -= mod;
        }
        h += inv[j];
        if (h >= mod) h -= mod;
        if (j >= m_low) {
            acc += mul_mod(row[m_low], h, mod);
            if (acc >= mod) acc -= mod;
        }
    }
    return {m, acc};
}

Rational oracle_binomial_hsum_exact(std::uint64_t m_low, std::uint64_t p) {
    Rational acc, h;
    for (std::uint64_t j = 1; j < p; ++j) {
        h += Rational(1, static_cast<long>(j));
        if (j >= m_low) acc += Rational(binomial(j, m_low)) * h;
    }
    return acc;
}

}  // namespace ghn
