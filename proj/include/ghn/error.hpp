#pragma once

#include <stdexcept>
#include <string>

namespace ghn {

enum class errc {
    not_invertible,
    denominator_divisible,
    insufficient_valuation,
    insufficient_precision,
    hypothesis_violated,
    zero_denominator,
    check_failed,
    unknown_identity,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_invertible: return "not-invertible";
        case errc::denominator_divisible: return "denominator-divisible";
        case errc::insufficient_valuation: return "insufficient-valuation";
        case errc::insufficient_precision: return "insufficient-precision";
        case errc::hypothesis_violated: return "hypothesis-violated";
        case errc::zero_denominator: return "zero-denominator";
        case errc::check_failed: return "check-failed";
        case errc::unknown_identity: return "unknown-identity";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace ghn
