#include "ghn/rational.hpp"

namespace ghn {

Rational pow(const Rational& base, unsigned long exp) {
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exp);
    return {num, den};
}

long padic_valuation(const Int& n, std::uint64_t p) {
    if (n == 0) return valuation_infinity;
    Int rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), Int(p).get_mpz_t()));
}

long padic_valuation(const Rational& q, std::uint64_t p) {
    if (q.is_zero()) return valuation_infinity;
    return padic_valuation(q.numerator(), p) - padic_valuation(q.denominator(), p);
}

}  // namespace ghn
