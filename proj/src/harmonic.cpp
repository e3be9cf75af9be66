#include "ghn/harmonic.hpp"

#include "ghn/binomial.hpp"
#include "ghn/error.hpp"

namespace ghn {

namespace {

// k^-r as an exact rational (k >= 1, any integer r)
Rational reciprocal_power(std::uint64_t k, long r) {
    Int kk(static_cast<unsigned long>(k));
    Int pw;
    unsigned long mag = static_cast<unsigned long>(r < 0 ? -r : r);
    mpz_pow_ui(pw.get_mpz_t(), kk.get_mpz_t(), mag);
    return r >= 0 ? Rational(Int(1), pw) : Rational(pw);
}

}  // namespace

Rational ghn_exact(const HarmonicSpec& spec) {
    Rational acc;
    for (std::uint64_t k = 1; k <= spec.n; ++k) acc += reciprocal_power(k, spec.r);
    return acc;
}

PadicResidue ghn_residue(const HarmonicSpec& spec, const Modulus& m) {
    std::uint64_t mod = m.value();
    std::uint64_t acc = 0;
    if (spec.r > 0) {
        if (spec.n >= m.p())
            fail(errc::not_invertible, "H_n^(r) mod p^e with r > 0 needs n < p");
        auto inv = batch_inverses(spec.n, m);
        for (std::uint64_t i = 1; i <= spec.n; ++i) {
            acc += pow_mod(inv[i], static_cast<std::uint64_t>(spec.r), mod);
            if (acc >= mod) acc -= mod;
        }
    } else {
        for (std::uint64_t i = 1; i <= spec.n; ++i) {
            acc += pow_mod(i % mod, static_cast<std::uint64_t>(-spec.r), mod);
            if (acc >= mod) acc -= mod;
        }
    }
    return {m, acc};
}

Rational faulhaber_eval(std::uint64_t n, unsigned long a, const BernoulliTable& table) {
    Rational acc;
    Int nn(static_cast<unsigned long>(n));
    for (unsigned long j = 0; j <= a; ++j) {
        Int npow;
        mpz_pow_ui(npow.get_mpz_t(), nn.get_mpz_t(), a + 1 - j);
        Rational term = Rational(binomial(a + 1, j)) * table.value(j) * Rational(npow);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc / Rational(static_cast<long>(a + 1));
}

namespace {

IdentityReport report(const Rational& lhs, const Rational& rhs) {
    return {lhs == rhs, lhs, rhs};
}

IdentityReport prop2d(long a, long b, std::uint64_t n) {
    Rational ha, hb, lhs;
    for (std::uint64_t i = 1; i <= n; ++i) {
        ha += reciprocal_power(i, a);
        hb += reciprocal_power(i, b);
        lhs += reciprocal_power(i, a) * hb + reciprocal_power(i, b) * ha;
    }
    Rational hab = ghn_exact({n, a + b});
    return report(lhs, ha * hb + hab);
}

IdentityReport prop3d(long a, long b, long c, std::uint64_t n) {
    Rational ha, hb, hc, rhs_sum;
    for (std::uint64_t i = 1; i <= n; ++i) {
        ha += reciprocal_power(i, a);
        hb += reciprocal_power(i, b);
        hc += reciprocal_power(i, c);
        rhs_sum += reciprocal_power(i, a) * hb * hc + reciprocal_power(i, b) * ha * hc +
                   reciprocal_power(i, c) * ha * hb;
        rhs_sum -= reciprocal_power(i, a + b) * hc + reciprocal_power(i, b + c) * ha +
                   reciprocal_power(i, a + c) * hb;
    }
    Rational habc = ghn_exact({n, a + b + c});
    return report(ha * hb * hc - habc, rhs_sum);
}

IdentityReport half_square(long a, std::uint64_t n) {
    Rational ha, lhs;
    for (std::uint64_t i = 1; i <= n; ++i) {
        ha += reciprocal_power(i, a);
        lhs += reciprocal_power(i, a) * ha;
    }
    Rational h2a = ghn_exact({n, 2 * a});
    return report(lhs, (ha * ha + h2a) / Rational(2));
}

IdentityReport b_zero(long a, std::uint64_t n) {
    Rational ha, lhs;
    for (std::uint64_t i = 1; i <= n; ++i) {
        ha += reciprocal_power(i, a);
        lhs += ha;
    }
    Rational rhs = Rational(Int(static_cast<unsigned long>(n) + 1)) * ha - ghn_exact({n, a - 1});
    return report(lhs, rhs);
}

IdentityReport shift(long a, long b, std::uint64_t n) {
    Rational ha, hb, lhs;
    for (std::uint64_t i = 1; i <= n; ++i) {
        ha += reciprocal_power(i, a);
        hb += reciprocal_power(i, b);
        lhs += reciprocal_power(i + 1, a) * hb + reciprocal_power(i + 1, b) * ha;
    }
    Rational ha1 = ha + reciprocal_power(n + 1, a);
    Rational hb1 = hb + reciprocal_power(n + 1, b);
    Rational hab1 = ghn_exact({n + 1, a + b});
    return report(lhs, ha1 * hb1 - hab1);
}

IdentityReport b_one(long a, std::uint64_t n) {
    Rational ha, lhs;
    for (std::uint64_t i = 1; i <= n; ++i) {
        ha += reciprocal_power(i, a);
        lhs += Rational(Int(static_cast<unsigned long>(i))) * ha;
    }
    Rational nn(Int(static_cast<unsigned long>(n)));
    Rational rhs = nn * (nn + Rational(1)) * ha + ghn_exact({n, a - 1}) - ghn_exact({n, a - 2});
    return report(Rational(2) * lhs, rhs);
}

void need_params(const std::string& id, const std::vector<long>& params, std::size_t count) {
    if (params.size() != count)
        fail(errc::unknown_identity,
             id + " takes " + std::to_string(count) + " parameters, got " + std::to_string(params.size()));
}

std::uint64_t as_n(long v) {
    if (v < 0) fail(errc::unknown_identity, "negative n");
    return static_cast<std::uint64_t>(v);
}

}  // namespace

IdentityReport identity_check(const std::string& id, const std::vector<long>& params) {
    if (id == "prop2d") {
        need_params(id, params, 3);
        return prop2d(params[0], params[1], as_n(params[2]));
    }
    if (id == "prop3d") {
        need_params(id, params, 4);
        return prop3d(params[0], params[1], params[2], as_n(params[3]));
    }
    if (id == "half_square") {
        need_params(id, params, 2);
        return half_square(params[0], as_n(params[1]));
    }
    if (id == "b_zero") {
        need_params(id, params, 2);
        return b_zero(params[0], as_n(params[1]));
    }
    if (id == "shift") {
        need_params(id, params, 3);
        return shift(params[0], params[1], as_n(params[2]));
    }
    if (id == "b_one") {
        need_params(id, params, 2);
        return b_one(params[0], as_n(params[1]));
    }
    fail(errc::unknown_identity, "no identity named '" + id + "'");
}

}  // namespace ghn
