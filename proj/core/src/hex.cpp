#include "permlab/hex.hpp"

#include <charconv>

namespace permlab {

std::string to_hex(std::uint64_t v)
{
    char buf[20];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, 16);
    return std::string(buf, end);
}

std::optional<std::uint64_t> parse_hex(std::string_view s)
{
    if (s.starts_with("0x") || s.starts_with("0X")) {
        s.remove_prefix(2);
    }
    if (s.empty() || s.size() > 16) {
        return std::nullopt;
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

}  // namespace permlab
