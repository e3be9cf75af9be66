#include "ghn/modular.hpp"

#include <stdexcept>

namespace ghn {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Modulus::Modulus(std::uint64_t p, unsigned e) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("modulus base " + std::to_string(p) + " is not prime");
    if (e < 1) throw std::invalid_argument("modulus exponent must be >= 1");
    pe_ = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (pe_ > UINT64_MAX / p) throw std::invalid_argument("modulus p^e overflows");
        pe_ *= p;
    }
}

Modulus Modulus::reduced(unsigned new_e) const {
    if (new_e < 1 || new_e > e_) throw std::invalid_argument("bad reduced exponent");
    return {p_, new_e};
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::uint64_t mod_inverse(std::uint64_t x, const Modulus& m) {
    std::uint64_t mod = m.value();
    x %= mod;
    if (x % m.p() == 0)
        fail(errc::not_invertible, std::to_string(x) + " is not invertible mod " + std::to_string(mod));
    std::int64_t r0 = static_cast<std::int64_t>(mod), r1 = static_cast<std::int64_t>(x);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (t0 < 0) t0 += static_cast<std::int64_t>(mod);
    return static_cast<std::uint64_t>(t0);
}

std::vector<std::uint64_t> batch_inverses(std::uint64_t n, const Modulus& m) {
    std::uint64_t mod = m.value();
    std::vector<std::uint64_t> table(n + 1, 0);
    if (n == 0) return table;
    // prefix products, one inversion, walk back
    std::vector<std::uint64_t> prefix(n + 1);
    prefix[0] = 1;
    for (std::uint64_t i = 1; i <= n; ++i) {
        if (i % m.p() == 0)
            fail(errc::not_invertible, std::to_string(i) + " is not invertible mod " + std::to_string(mod));
        prefix[i] = mul_mod(prefix[i - 1], i % mod, mod);
    }
    std::uint64_t inv = mod_inverse(prefix[n], m);
    for (std::uint64_t i = n; i >= 1; --i) {
        table[i] = mul_mod(inv, prefix[i - 1], mod);
        inv = mul_mod(inv, i % mod, mod);
    }
    return table;
}

namespace {

unsigned residue_valuation_floor(std::uint64_t r, const Modulus& m) {
    if (r == 0) return m.e();
    unsigned v = 0;
    while (r % m.p() == 0) {
        r /= m.p();
        ++v;
    }
    return v;
}

}  // namespace

PadicResidue::PadicResidue(const Modulus& m, std::uint64_t residue)
    : m_(m), r_(residue % m.value()), vfloor_(residue_valuation_floor(r_, m_)) {}

PadicResidue& PadicResidue::operator+=(const PadicResidue& o) {
    if (!(m_ == o.m_)) throw std::logic_error("residue modulus mismatch");
    r_ += o.r_;
    if (r_ >= m_.value()) r_ -= m_.value();
    vfloor_ = residue_valuation_floor(r_, m_);
    return *this;
}

PadicResidue& PadicResidue::operator-=(const PadicResidue& o) {
    if (!(m_ == o.m_)) throw std::logic_error("residue modulus mismatch");
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + m_.value() - o.r_;
    vfloor_ = residue_valuation_floor(r_, m_);
    return *this;
}

PadicResidue& PadicResidue::operator*=(const PadicResidue& o) {
    if (!(m_ == o.m_)) throw std::logic_error("residue modulus mismatch");
    r_ = mul_mod(r_, o.r_, m_.value());
    vfloor_ = residue_valuation_floor(r_, m_);
    return *this;
}

PadicResidue int_residue(const Int& n, const Modulus& m) {
    // fdiv gives the canonical nonnegative remainder for negative inputs
    return {m, mpz_fdiv_ui(n.get_mpz_t(), m.value())};
}

PadicResidue int_residue(long n, const Modulus& m) { return int_residue(Int(n), m); }

PadicResidue to_residue(const Rational& q, const Modulus& m) {
    Int den = q.denominator();
    if (mpz_divisible_ui_p(den.get_mpz_t(), m.p()))
        fail(errc::denominator_divisible,
             "denominator of " + q.str() + " divisible by " + std::to_string(m.p()));
    std::uint64_t num = mpz_fdiv_ui(q.numerator().get_mpz_t(), m.value());
    std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), m.value());
    return {m, mul_mod(num, mod_inverse(d, m), m.value())};
}

PadicResidue divide_by_p_power(const PadicResidue& x, unsigned t) {
    if (t == 0) return x;
    if (x.valuation_floor() < t)
        fail(errc::insufficient_valuation,
             "residue " + std::to_string(x.residue()) + " has valuation floor " +
                 std::to_string(x.valuation_floor()) + " < " + std::to_string(t));
    if (x.modulus().e() < t + 1)
        fail(errc::insufficient_precision, "division by p^" + std::to_string(t) +
                                               " leaves no precision at e=" +
                                               std::to_string(x.modulus().e()));
    std::uint64_t pt = 1;
    for (unsigned i = 0; i < t; ++i) pt *= x.modulus().p();
    return {x.modulus().reduced(x.modulus().e() - t), x.residue() / pt};
}

PadicResidue scale(const PadicResidue& x, const Rational& q) {
    return x * to_residue(q, x.modulus());
}

}  // namespace ghn
