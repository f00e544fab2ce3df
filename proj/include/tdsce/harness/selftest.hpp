#pragma once

#include <ostream>

namespace tdsce {

/// Quick invariant checks on small instances. Prints one line per check; returns the failure count.
int run_selftest(std::ostream& out);

}  // namespace tdsce
