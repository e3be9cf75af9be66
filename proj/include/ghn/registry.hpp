#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ghn/bernoulli.hpp"

namespace ghn {

/// Ordered named integer parameters of one check instance.
using Params = std::vector<std::pair<std::string, long>>;

std::string params_str(const Params& params);
long param(const Params& params, const std::string& name);

struct GridBounds {
    long amax = 8;
    long bmax = 12;
    long kmax = 2;
    std::uint64_t pmin = 5;
    std::uint64_t pmax = 199;
};

struct CheckContext {
    const BernoulliTable& bern;
};

/// One evaluation: left side(s), right side(s), pass iff every lhs equals
/// every rhs at the declared modulus.
struct CheckOutcome {
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
    std::string modulus;
    std::vector<std::string> flags;
};

struct CheckSpec {
    std::string id;
    std::string hypothesis_text;
    unsigned modulus_exponent = 1;
    int k_order = 1;  // highest GHN power in the left-hand sum
    bool prime_indexed = true;
    std::function<bool(const Params&, std::uint64_t p)> hypothesis;
    std::function<CheckOutcome(const Params&, std::uint64_t p, const CheckContext&)> run;
    std::function<std::vector<Params>(const GridBounds&)> grid;
};

struct CheckReport {
    std::string id;
    Params params;
    std::uint64_t p = 0;
    std::string modulus;
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
    bool pass = false;
    bool skipped = false;
    std::vector<std::string> flags;
    std::int64_t micros = 0;
};

const std::vector<CheckSpec>& registry();
const CheckSpec* find_check(const std::string& id);

/// Evaluates one instance; hypothesis violations come back as skipped
/// reports, arithmetic errors as failures flagged with the error kind.
CheckReport run_check(const CheckSpec& spec, const Params& params, std::uint64_t p,
                      const CheckContext& ctx);

/// Bernoulli table size sufficient for every registry check at the bounds.
std::size_t required_table_size(const GridBounds& bounds);

}  // namespace ghn
