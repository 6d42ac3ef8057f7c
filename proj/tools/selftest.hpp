// selftest.hpp: fast built-in oracle checks for the `selftest` verb

#pragma once

#include <iosfwd>

namespace ccqed::tools {

// Prints one PASS/FAIL line per check; returns the number of failures.
int run_selftest(std::ostream& out);

} // namespace ccqed::tools
