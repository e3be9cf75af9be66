#pragma once

#include <string>

#include "ghn/sweep.hpp"

namespace ghn {

/// Integers are serialized as decimal strings; no floating point anywhere.
/// Timing is emitted only when config.timing is set, keeping canonical
/// reports byte-identical across runs and thread counts.
std::string report_json(const SweepResult& result);
std::string report_csv(const SweepResult& result);
std::string report_text(const SweepResult& result);

std::string report_line(const CheckReport& report);

}  // namespace ghn
