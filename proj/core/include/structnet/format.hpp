#pragma once

#include <string>

namespace structnet {

// Formats a double with 17 significant digits (%.17g), enough to round-trip
// any finite IEEE-754 double through text.
std::string format_double(double value);

} // namespace structnet
