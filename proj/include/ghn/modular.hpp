#pragma once

#include <cstdint>
#include <vector>

#include "ghn/rational.hpp"

namespace ghn {

bool is_prime(std::uint64_t n);

/// Prime-power modulus p^e with p checked prime at construction.
class Modulus {
public:
    Modulus(std::uint64_t p, unsigned e);

    std::uint64_t p() const { return p_; }
    unsigned e() const { return e_; }
    std::uint64_t value() const { return pe_; }

    /// Same prime, smaller exponent.
    Modulus reduced(unsigned new_e) const;

    friend bool operator==(const Modulus& a, const Modulus& b) {
        return a.p_ == b.p_ && a.e_ == b.e_;
    }

private:
    std::uint64_t p_;
    unsigned e_;
    std::uint64_t pe_;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse of x mod p^e; requires gcd(x, p) = 1.
std::uint64_t mod_inverse(std::uint64_t x, const Modulus& m);

/// Inverses of 1..n mod p^e via one extended gcd and two prefix passes.
/// Entry [i] is the inverse of i; entry [0] is unused (0).
std::vector<std::uint64_t> batch_inverses(std::uint64_t n, const Modulus& m);

/// Residue mod p^e together with the known floor of its p-adic valuation.
class PadicResidue {
public:
    PadicResidue(const Modulus& m, std::uint64_t residue);

    const Modulus& modulus() const { return m_; }
    std::uint64_t residue() const { return r_; }
    unsigned valuation_floor() const { return vfloor_; }

    PadicResidue& operator+=(const PadicResidue& o);
    PadicResidue& operator-=(const PadicResidue& o);
    PadicResidue& operator*=(const PadicResidue& o);

    friend PadicResidue operator+(PadicResidue a, const PadicResidue& b) { return a += b; }
    friend PadicResidue operator-(PadicResidue a, const PadicResidue& b) { return a -= b; }
    friend PadicResidue operator*(PadicResidue a, const PadicResidue& b) { return a *= b; }
    friend PadicResidue operator-(const PadicResidue& a) {
        return PadicResidue(a.m_, a.r_ == 0 ? 0 : a.m_.value() - a.r_);
    }

    friend bool operator==(const PadicResidue& a, const PadicResidue& b) {
        return a.m_ == b.m_ && a.r_ == b.r_;
    }

private:
    Modulus m_;
    std::uint64_t r_;
    unsigned vfloor_;
};

/// Residue of an integer, normalizing negatives into [0, p^e).
PadicResidue int_residue(const Int& n, const Modulus& m);
PadicResidue int_residue(long n, const Modulus& m);

/// Residue of a p-integral rational (reduced denominator coprime to p).
PadicResidue to_residue(const Rational& q, const Modulus& m);

/// Exact division by p^t; result is known mod p^(e-t).
PadicResidue divide_by_p_power(const PadicResidue& x, unsigned t);

/// x scaled by a p-integral rational.
PadicResidue scale(const PadicResidue& x, const Rational& q);

}  // namespace ghn
