#pragma once

#include <ostream>

namespace cohwl {

/// Hermetic oracle-agreement suites with fixed seeds; streams one JSON line
/// per suite and returns true when everything agrees. Output is byte-stable
/// across runs and thread counts. quick trims the sample sizes.
bool selftest(std::ostream& out, bool quick = false);

}  // namespace cohwl
