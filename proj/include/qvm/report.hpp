#pragma once

#include <string>

namespace qvm {

// Shortest round-trippable decimal form of a double (17 significant digits).
std::string format_double(double value);

}  // namespace qvm
