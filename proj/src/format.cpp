#include "netconv/format.hpp"

#include <charconv>

namespace netconv {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v); // shortest round-trip form
    return std::string(buf, res.ptr);
}

} // namespace netconv
