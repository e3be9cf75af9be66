#include <doctest.h>

#include "ghn/binomial.hpp"
#include "ghn/harmonic.hpp"
#include "ghn/oracle.hpp"
#include "ghn/primes.hpp"
#include "ghn/rhs.hpp"

using namespace ghn;

namespace {
const BernoulliTable& table() {
    static BernoulliTable t(240);
    return t;
}
}  // namespace

TEST_CASE("b_sharp") {
    Modulus m72(7, 2);
    // (2/3) B_4 B_1 = 1/90; inv(90) mod 49 = 6
    CHECK(b_sharp({3, 1, 1, 7}, m72, table()).residue() == 6);
    CHECK(b_sharp({2, 1, 3, 11}, Modulus(11, 2), table()).residue() == 0);  // B_3 = 0
    // (4/5) B_6 B_2 mod 121 against the exact-rational route
    CHECK(b_sharp({4, 1, 2, 11}, Modulus(11, 2), table()) ==
          to_residue(Rational(4, 5) * table().value(6) * table().value(2), Modulus(11, 2)));
    CHECK_THROWS_AS(b_sharp({2, 5, 3, 11}, Modulus(11, 2), table()), error);  // a-b+j = 0
}

TEST_CASE("b_sharp vanishes at odd indices above 1") {
    for (long a = 1; a <= 6; ++a)
        for (long b = 1; b <= 6; ++b)
            for (long j = 0; j <= b; ++j) {
                if (a - b + j == 0) continue;
                long n1 = 13 - a + b - j;
                if ((j % 2 == 1 && j != 1) || (n1 % 2 == 1 && n1 != 1))
                    CHECK(b_sharp({a, b, j, 13}, Modulus(13, 2), table()).residue() == 0);
            }
}

TEST_CASE("k_coeff") {
    CHECK(k_coeff(1, 1) == 0);
    CHECK(k_coeff(1, 2) == -2);
    CHECK(k_coeff(2, 1) == -2);
    for (long a = 1; a <= 12; ++a) {
        CHECK(k_coeff(a, a) == 0);
        for (long b = 1; b <= 12; ++b)
            if ((a - b) % 2 == 0) CHECK(k_coeff(a, b) == -k_coeff(b, a));
    }
}

TEST_CASE("gen_binomial") {
    CHECK(gen_binomial(7, 0) == 1);
    CHECK(gen_binomial(-9, 0) == 1);
    CHECK(gen_binomial(-2, 3) == -4);
    CHECK(gen_binomial(5, 2) == 10);
    for (long n = -10; n <= 10; ++n)
        for (unsigned long k = 1; k <= 8; ++k)
            CHECK(gen_binomial(n, k) == gen_binomial(n - 1, k - 1) + gen_binomial(n - 1, k));
}

TEST_CASE("theorem 1 fixtures") {
    CHECK(rhs_theorem1(1, 1, 5, table()).residue() == 22);
    CHECK(rhs_theorem1(3, 1, 7, table()).residue() == 7);
    CHECK(rhs_theorem1(2, 2, 7, table()).residue() == 45);
    CHECK_THROWS_AS(rhs_theorem1(0, 2, 11, table()), error);
    CHECK_THROWS_AS(rhs_theorem1(3, 1, 5, table()), error);
}

TEST_CASE("theorem 1 equals the oracle on a sample") {
    for (long a : {1, 2, 4, 7})
        for (long b : {1, 3, 6, 12})
            for (std::uint64_t p : {11, 13, 31, 101}) {
                if (static_cast<std::uint64_t>(std::max(a, b)) + 3 > p) continue;
                CHECK(oracle_sum({b, {a}, p, 2}) == rhs_theorem1(a, b, p, table()));
            }
}

TEST_CASE("theorem 2 fixtures across all cases") {
    CHECK(rhs_theorem2(2, 3, 11, table()).residue() == 72);   // b+1 = 2a
    CHECK(rhs_theorem2(3, 5, 17, table()).residue() == 261);  // b+1 = 2a
    CHECK(rhs_theorem2(4, 5, 17, table()).residue() == 272);  // b+1 < 2a
    CHECK(rhs_theorem2(2, 5, 11, table()).residue() == 58);   // b = 2a+1
    CHECK(rhs_theorem2(2, 5, 13, table()).residue() == 49);
    CHECK(rhs_theorem2(3, 7, 17, table()).residue() == 108);
    CHECK(rhs_theorem2(2, 7, 17, table()).residue() == 24);   // b - 2a > 1
    CHECK(rhs_theorem2(2, 9, 13, table()).residue() == 38);
    CHECK(rhs_theorem2(4, 9, 19, table()).residue() == 287);
    CHECK(rhs_theorem2(5, 11, 17, table()).residue() == 247);
    CHECK_THROWS_AS(rhs_theorem2(3, 4, 23, table()), error);  // b even
    CHECK_THROWS_AS(rhs_theorem2(1, 3, 23, table()), error);  // a < 2
    CHECK_THROWS_AS(rhs_theorem2(2, 5, 7, table()), error);   // p too small
}

TEST_CASE("theorem 2 equals the oracle on a sample") {
    for (long a : {2, 3, 4, 5})
        for (long b : {3, 5, 7, 9, 11})
            for (std::uint64_t p : {17, 19, 37}) {
                if (b <= a || static_cast<std::uint64_t>(std::max(2 * a, b)) + 3 > p) continue;
                CHECK(oracle_sum({b, {a, a}, p, 2}) == rhs_theorem2(a, b, p, table()));
            }
}

TEST_CASE("corollary fixtures and oracle agreement") {
    CHECK(rhs_corollary(3, 1, 7, table()).residue() == 7);   // same parity, b < a
    CHECK(rhs_corollary(2, 2, 7, table()).residue() == 45);  // a = b
    CHECK_THROWS_AS(rhs_corollary(1, 2, 11, table()), error);  // a+b odd needs a < b-1
    for (long a = 1; a <= 6; ++a)
        for (long b = 1; b <= 8; ++b) {
            bool odd_ok = (a + b) % 2 == 1 && a < b - 1;
            bool even_ok = (a - b) % 2 == 0;
            if (!odd_ok && !even_ok) continue;
            for (std::uint64_t p : {13, 29}) {
                if (static_cast<std::uint64_t>(std::max(a, b)) + 3 > p) continue;
                CHECK(oracle_sum({b, {a}, p, 2}) == rhs_corollary(a, b, p, table()));
            }
        }
}

TEST_CASE("glaisher both parities") {
    // even branch: H^(2) = (2/3) p B_{p-3} mod p^2
    CHECK(glaisher_rhs(2, 7, table()).residue() == 14);
    CHECK(glaisher_rhs(4, 11, table()).residue() == 44);
    CHECK(ghn_residue({10, 4}, Modulus(11, 2)).residue() == 44);
    // odd branch carries the corrected sign; H_6 = 49/20 = 294 mod 343
    CHECK(glaisher_rhs(1, 7, table()).residue() == 294);
    CHECK(glaisher_rhs(3, 11, table()).residue() == 605);
    CHECK(ghn_residue({10, 3}, Modulus(11, 3)).residue() == 605);
}

TEST_CASE("help1 and zhao") {
    CHECK(help1_rhs(2, 7, table()).residue() == 42);
    CHECK(ghn_residue({6, -2}, Modulus(7, 2)).residue() == 42);
    CHECK(zhao_formula(1, 1, Modulus(5, 2), table()).residue() == 10);  // 5/18 mod 25
    CHECK(zhao_formula(2, 2, Modulus(11, 2), table()).residue() == 22);
    CHECK(oracle_sum({-2, {2}, 11, 2}).residue() == 22);
}

TEST_CASE("wang-yang forms and the a=1 specialization") {
    CHECK(wang_yang4_formula(5, Modulus(11, 2), table()).residue() == 4);
    CHECK(oracle_sum({5, {1, 1}, 11, 2}).residue() == 4);
    for (std::uint64_t p : {11, 13, 31, 61}) {
        Modulus m2(p, 2);
        for (long b = 5; static_cast<std::uint64_t>(b) < p - 1; b += 2) {
            CHECK(theorem1_formula(1, b, m2, table()) == wang_yang3_formula(b, m2, table()));
        }
        CHECK(oracle_sum({5, {1}, p, 2}) == wang_yang3_formula(5, m2, table()));
    }
}

TEST_CASE("closed forms mod p^3") {
    CHECK(closed_s1k1(1, 5).residue() == 122);
    CHECK(closed_s1k1(1, 7).residue() == 164);
    CHECK(closed_s1k1(2, 7).residue() == 265);
    CHECK(closed_s1k1(3, 7).residue() == 273);
    CHECK(oracle_sum({1, {1}, 7, 3}).residue() == 164);
    CHECK(oracle_sum({2, {1}, 7, 3}).residue() == 265);
    CHECK(oracle_sum({3, {1}, 7, 3}).residue() == 273);
    CHECK_THROWS_AS(closed_s1k1(4, 7), error);
}

TEST_CASE("opposite parity product congruence") {
    CHECK(opposite_parity_rhs(2, 3, Modulus(11, 2), table()).residue() == 33);
    CHECK(oracle_sum({0, {2, 3}, 11, 2}).residue() == 33);
    CHECK(oracle_sum({0, {1, 2}, 7, 2}).residue() == 7);
    CHECK(opposite_parity_rhs(1, 2, Modulus(7, 2), table()).residue() == 7);
}

TEST_CASE("wolstenholme-licensed quotients") {
    // -3 H_{p-1}/p^2 = (3/(2p)) H^(2)_{p-1} = 17 mod 49
    CHECK(scale(wolstenholme_quotient(7), Rational(-3)).residue() == 17);
    CHECK(scale(h2_quotient(7), Rational(3, 2)).residue() == 17);
}
