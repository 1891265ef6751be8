#pragma once

#include <string>

namespace netconv {

// Shortest round-trippable decimal form, locale-independent ('.' separator);
// shared by every text and CSV serializer.
std::string format_double(double v);

} // namespace netconv
