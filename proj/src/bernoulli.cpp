#include "ghn/bernoulli.hpp"

#include <stdexcept>

#include "ghn/binomial.hpp"
#include "ghn/error.hpp"
#include "ghn/primes.hpp"

namespace ghn {

BernoulliTable::BernoulliTable(std::size_t max_index) {
    values_.reserve(max_index + 1);
    values_.emplace_back(1);
    for (std::size_t n = 1; n <= max_index; ++n) {
        Rational acc;
        for (std::size_t j = 0; j < n; ++j) acc += Rational(binomial(n + 1, j)) * values_[j];
        values_.push_back(-acc / Rational(static_cast<long>(n + 1)));
    }
}

const Rational& BernoulliTable::value(std::size_t n) const {
    if (n >= values_.size())
        throw std::out_of_range("Bernoulli table sized " + std::to_string(max_index()) +
                                " asked for index " + std::to_string(n));
    return values_[n];
}

PadicResidue bernoulli_residue(const BernoulliTable& table, std::size_t n, const Modulus& m) {
    return to_residue(table.value(n), m);
}

Rational von_staudt_clausen_witness(const BernoulliTable& table, unsigned long even_index) {
    if (even_index == 0 || even_index % 2 != 0)
        fail(errc::hypothesis_violated, "witness needs a positive even index");
    Rational w = table.value(even_index);
    for (std::uint64_t q : primes_in_range(2, even_index + 1))
        if (even_index % (q - 1) == 0) w += Rational(1, static_cast<long>(q));
    if (!w.is_integer())
        fail(errc::check_failed, "von Staudt-Clausen witness " + w.str() + " is not an integer");
    return w;
}

bool kummer_check(const BernoulliTable& table, unsigned long b, std::uint64_t p) {
    if (b < 2 || b % 2 != 0 || p < 3 || b % (p - 1) == 0)
        fail(errc::hypothesis_violated, "kummer check needs even b with (p-1) not dividing b, odd p");
    Modulus m(p, 1);
    PadicResidue lhs = to_residue(table.value(p + b - 1) / Rational(Int(p + b - 1)), m);
    PadicResidue rhs = to_residue(table.value(b) / Rational(static_cast<long>(b)), m);
    return lhs == rhs;
}

}  // namespace ghn
