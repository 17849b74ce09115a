#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace permlab {

/// Lowercase hex, no prefix, no padding ("0" for zero).
std::string to_hex(std::uint64_t v);

/// Parses lowercase or uppercase hex without prefix; an optional "0x" is tolerated.
std::optional<std::uint64_t> parse_hex(std::string_view s);

}  // namespace permlab
