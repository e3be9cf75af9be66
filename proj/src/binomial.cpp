#include "ghn/binomial.hpp"

namespace ghn {

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int gen_binomial(long n, unsigned long k) {
    if (n >= 0) return binomial(static_cast<unsigned long>(n), k);
    // C(n,k) = (-1)^k C(k-n-1, k) for negative upper argument
    Int r = binomial(static_cast<unsigned long>(k - n - 1), k);
    return (k % 2 == 0) ? r : -r;
}

}  // namespace ghn
