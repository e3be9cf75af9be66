#include <doctest.h>

#include "ghn/bernoulli.hpp"
#include "ghn/binomial.hpp"
#include "ghn/primes.hpp"

using namespace ghn;

namespace {

// independent route: B_n = sum_{k<=n} 1/(k+1) sum_{j<=k} (-1)^j C(k,j) j^n
Rational bernoulli_double_sum(unsigned n) {
    Rational acc;
    for (unsigned long k = 0; k <= n; ++k) {
        Rational inner;
        for (unsigned long j = 0; j <= k; ++j) {
            Int jp;
            mpz_pow_ui(jp.get_mpz_t(), Int(j).get_mpz_t(), n);
            Rational term = Rational(binomial(k, j)) * Rational(jp);
            inner += (j % 2 == 0) ? term : -term;
        }
        acc += inner / Rational(static_cast<long>(k + 1));
    }
    return acc;
}

}  // namespace

TEST_CASE("table values") {
    BernoulliTable t0(0);
    CHECK(t0.value(0) == Rational(1));
    BernoulliTable t(20);
    CHECK(t.value(1) == Rational(-1, 2));
    CHECK(t.value(2) == Rational(1, 6));
    CHECK(t.value(4) == Rational(-1, 30));
    CHECK(t.value(12) == Rational(-691, 2730));
    CHECK_THROWS_AS(t.value(21), std::out_of_range);
}

TEST_CASE("table matches the double-sum route") {
    BernoulliTable t(16);
    for (unsigned n = 0; n <= 16; ++n) CHECK(t.value(n) == bernoulli_double_sum(n));
}

TEST_CASE("odd zeros, sign alternation, squarefree denominators") {
    BernoulliTable t(60);
    for (std::size_t n = 3; n <= 60; n += 2) CHECK(t.value(n).is_zero());
    for (std::size_t k = 1; 4 * k + 2 <= 60; ++k) CHECK(t.value(4 * k + 2).sign() > 0);
    for (std::size_t k = 1; 4 * k <= 60; ++k) CHECK(t.value(4 * k).sign() < 0);
    for (std::size_t n = 2; n <= 60; n += 2) {
        Int den = t.value(n).denominator();
        for (std::uint64_t q : primes_in_range(2, 62))
            CHECK_FALSE(mpz_divisible_p(den.get_mpz_t(), Int(Int(q) * Int(q)).get_mpz_t()));
    }
}

TEST_CASE("bernoulli_residue") {
    BernoulliTable t(16);
    Modulus m72(7, 2);
    CHECK(bernoulli_residue(t, 3, m72).residue() == 0);
    CHECK(bernoulli_residue(t, 4, m72).residue() == 31);  // -1/30 mod 49
    CHECK(bernoulli_residue(t, 2, m72).residue() == 41);  // inv(6) mod 49
    // von Staudt-Clausen obstruction: 6 | denominator of B_6 has p = 7
    CHECK_THROWS_AS(bernoulli_residue(t, 6, m72), error);
    for (std::size_t n = 0; n <= 10; ++n) {
        if (n % 2 == 0 && n > 0 && n % 10 == 0) continue;  // (11-1) | n
        CHECK(bernoulli_residue(t, n, Modulus(11, 2)) == to_residue(t.value(n), Modulus(11, 2)));
    }
}

TEST_CASE("von Staudt-Clausen witnesses") {
    BernoulliTable t(60);
    CHECK(von_staudt_clausen_witness(t, 2) == Rational(1));   // 1/6 + 1/2 + 1/3
    CHECK(von_staudt_clausen_witness(t, 4) == Rational(1));   // -1/30 + 1/2 + 1/3 + 1/5
    CHECK(von_staudt_clausen_witness(t, 12).is_integer());
    for (unsigned long n = 2; n <= 60; n += 2) CHECK(von_staudt_clausen_witness(t, n).is_integer());
    CHECK_THROWS_AS(von_staudt_clausen_witness(t, 3), error);
}

TEST_CASE("kummer congruence") {
    BernoulliTable t(130);
    CHECK(kummer_check(t, 2, 7));
    CHECK(kummer_check(t, 4, 7));
    CHECK(kummer_check(t, 2, 5));
    CHECK_THROWS_AS(kummer_check(t, 6, 7), error);  // (p-1) | b
    for (unsigned long b = 2; b <= 20; b += 2)
        for (std::uint64_t p : primes_in_range(5, 101)) {
            if (b % (p - 1) == 0 || p < b + 3) continue;
            CHECK(kummer_check(t, b, p));
        }
}
