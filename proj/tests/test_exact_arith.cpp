#include <doctest.h>

#include "ghn/harmonic.hpp"
#include "ghn/modular.hpp"
#include "ghn/primes.hpp"
#include "ghn/rational.hpp"

using namespace ghn;

namespace {

// deterministic generator for property tests
struct Lcg {
    std::uint64_t s;
    std::uint64_t next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s >> 33;
    }
};

// independent inverse oracle: brute-force search
std::uint64_t inverse_by_search(std::uint64_t x, std::uint64_t m) {
    for (std::uint64_t y = 1; y < m; ++y)
        if (mul_mod(x, y, m) == 1) return y;
    return 0;
}

}  // namespace

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(3, -4) == Rational(-3, 4));
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK((-Rational(3, 4)).str() == "-3/4");
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK_THROWS_AS(Rational(1, 0), error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), error);
}

TEST_CASE("padic valuation") {
    CHECK(padic_valuation(Rational(25, 3), 5) == 2);
    CHECK(padic_valuation(Rational(1, 7), 7) == -1);
    CHECK(padic_valuation(ghn_exact({4, 1}), 5) == 2);  // H_4 = 25/12
    CHECK(padic_valuation(Rational(0), 13) == valuation_infinity);
}

TEST_CASE("modulus construction checks primality") {
    CHECK(Modulus(5, 3).value() == 125);
    CHECK_THROWS_AS(Modulus(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(Modulus(1, 1), std::invalid_argument);
}

TEST_CASE("mod_inverse examples and errors") {
    CHECK(mod_inverse(1, Modulus(7, 2)) == 1);
    CHECK(mod_inverse(6, Modulus(5, 3)) == 21);
    CHECK(mod_inverse(45, Modulus(7, 2)) == 12);
    CHECK_THROWS_AS(mod_inverse(10, Modulus(5, 2)), error);
}

TEST_CASE("mod_inverse against brute-force oracle on small moduli") {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        Modulus m(p, 2);
        for (std::uint64_t x = 1; x < m.value(); ++x) {
            if (x % p == 0) continue;
            CHECK(mod_inverse(x, m) == inverse_by_search(x, m.value()));
        }
    }
}

TEST_CASE("x * inv(x) = 1 for p <= 199, e <= 4") {
    for (std::uint64_t p : primes_in_range(2, 199)) {
        for (unsigned e = 1; e <= 4; ++e) {
            Modulus m(p, e);
            if (m.value() <= 200000) {
                for (std::uint64_t x = 1; x < m.value(); ++x) {
                    if (x % p == 0) continue;
                    REQUIRE(mul_mod(x, mod_inverse(x, m), m.value()) == 1);
                }
            } else {
                Lcg rng{p * 1000 + e};
                for (int i = 0; i < 2000; ++i) {
                    std::uint64_t x = rng.next() % (m.value() - 1) + 1;
                    if (x % p == 0) ++x;
                    REQUIRE(mul_mod(x, mod_inverse(x, m), m.value()) == 1);
                }
                REQUIRE(mul_mod(m.value() - 1, mod_inverse(m.value() - 1, m), m.value()) == 1);
            }
        }
    }
}

TEST_CASE("batch_inverses examples") {
    auto t1 = batch_inverses(1, Modulus(7, 2));
    CHECK(t1[1] == 1);
    auto t2 = batch_inverses(4, Modulus(5, 1));
    CHECK(t2 == std::vector<std::uint64_t>{0, 1, 3, 2, 4});
    auto t3 = batch_inverses(4, Modulus(5, 3));
    CHECK(t3 == std::vector<std::uint64_t>{0, 1, 63, 42, 94});
    CHECK_THROWS_AS(batch_inverses(5, Modulus(5, 1)), error);
}

TEST_CASE("batch_inverses matches mod_inverse for p <= 31, e <= 4") {
    for (std::uint64_t p : primes_in_range(2, 31))
        for (unsigned e = 1; e <= 4; ++e) {
            Modulus m(p, e);
            auto table = batch_inverses(p - 1, m);
            for (std::uint64_t i = 1; i < p; ++i) REQUIRE(table[i] == mod_inverse(i, m));
        }
    // spot checks at the top of the default sweep range
    Modulus big(199, 2);
    auto table = batch_inverses(198, big);
    for (std::uint64_t i : {1ULL, 2ULL, 97ULL, 198ULL}) CHECK(table[i] == mod_inverse(i, big));
}

TEST_CASE("to_residue examples and errors") {
    Modulus m53(5, 3), m72(7, 2);
    CHECK(to_residue(Rational(0), m53).residue() == 0);
    CHECK(to_residue(Rational(0), m53).valuation_floor() == 3);
    CHECK(to_residue(Rational(107, 6), m53).residue() == 122);
    CHECK(to_residue(Rational(-1, 30), m72).residue() == 31);
    CHECK_THROWS_AS(to_residue(Rational(1, 5), m53), error);
}

TEST_CASE("to_residue is a ring homomorphism on p-integral rationals") {
    Lcg rng{42};
    for (std::uint64_t p : {5, 7, 13}) {
        for (unsigned e = 1; e <= 3; ++e) {
            Modulus m(p, e);
            for (int i = 0; i < 60; ++i) {
                long n1 = static_cast<long>(rng.next() % 2001) - 1000;
                long n2 = static_cast<long>(rng.next() % 2001) - 1000;
                long d1 = static_cast<long>(rng.next() % 999) + 1;
                long d2 = static_cast<long>(rng.next() % 999) + 1;
                while (d1 % p == 0) ++d1;
                while (d2 % p == 0) ++d2;
                Rational q1(n1, d1), q2(n2, d2);
                CHECK(to_residue(q1 + q2, m) == to_residue(q1, m) + to_residue(q2, m));
                CHECK(to_residue(q1 * q2, m) == to_residue(q1, m) * to_residue(q2, m));
            }
        }
    }
}

TEST_CASE("divide_by_p_power") {
    Modulus m54(5, 4), m53(5, 3);
    CHECK(divide_by_p_power(PadicResidue(m54, 0), 2) == PadicResidue(Modulus(5, 2), 0));
    CHECK(divide_by_p_power(PadicResidue(m53, 50), 1).residue() == 10);
    CHECK(divide_by_p_power(PadicResidue(m53, 50), 1).modulus().value() == 25);

    // H_6^(2) = 5369/3600 has 7-adic valuation 1
    Modulus m73(7, 3);
    PadicResidue h2 = to_residue(ghn_exact({6, 2}), m73);
    CHECK(h2.residue() == 308);
    CHECK(h2.valuation_floor() == 1);
    PadicResidue q = divide_by_p_power(h2, 1);
    CHECK(q == to_residue(ghn_exact({6, 2}) / Rational(7), Modulus(7, 2)));
    CHECK(q.residue() == 44);

    CHECK_THROWS_AS(divide_by_p_power(PadicResidue(m53, 7), 1), error);   // valuation too low
    CHECK_THROWS_AS(divide_by_p_power(PadicResidue(Modulus(5, 1), 0), 1), error);  // no precision left
}

TEST_CASE("divide_by_p_power inverts scaling by p^t") {
    Lcg rng{7};
    for (std::uint64_t p : {5, 11}) {
        for (unsigned t = 1; t <= 2; ++t) {
            Modulus m(p, 4);
            std::uint64_t pt = 1;
            for (unsigned i = 0; i < t; ++i) pt *= p;
            for (int i = 0; i < 40; ++i) {
                long n = static_cast<long>(rng.next() % 2001) - 1000;
                long d = static_cast<long>(rng.next() % 999) + 1;
                while (d % p == 0) ++d;
                Rational q(n, d);
                Rational scaled = q * Rational(Int(pt));
                CHECK(divide_by_p_power(to_residue(scaled, m), t) ==
                      to_residue(q, Modulus(p, 4 - t)));
            }
        }
    }
}

TEST_CASE("residues are canonical and valuation floors consistent") {
    Modulus m(7, 2);
    PadicResidue r = int_residue(-3, m);
    CHECK(r.residue() == 46);
    PadicResidue s(m, 14);
    CHECK(s.valuation_floor() == 1);
    CHECK((s + int_residue(35, m)).residue() == 0);
    CHECK((s + int_residue(35, m)).valuation_floor() == 2);
}
