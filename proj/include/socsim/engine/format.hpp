#pragma once

#include <cstdint>
#include <string>

namespace socsim {

// Locale-independent number formatting for all file output. Doubles use the
// shortest decimal that round-trips, so serialized values are byte-stable.
std::string format_double(double value);
std::string format_int(std::int64_t value);
std::string format_uint(std::uint64_t value);

}  // namespace socsim
