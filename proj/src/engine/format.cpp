#include "socsim/engine/format.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace socsim {

namespace {

template <typename T>
std::string to_chars_string(T value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    if (res.ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, res.ptr);
}

}  // namespace

std::string format_double(double value) { return to_chars_string(value); }
std::string format_int(std::int64_t value) { return to_chars_string(value); }
std::string format_uint(std::uint64_t value) { return to_chars_string(value); }

}  // namespace socsim
