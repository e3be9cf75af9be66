#pragma once

#include "ghn/rational.hpp"

namespace ghn {

/// C(n, k) for n >= 0; zero when k > n.
Int binomial(unsigned long n, unsigned long k);

/// Binomial with arbitrary integer upper argument:
/// n(n-1)...(n-k+1)/k!, integer-valued for every integer n.
Int gen_binomial(long n, unsigned long k);

}  // namespace ghn
