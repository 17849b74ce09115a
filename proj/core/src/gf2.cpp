#include "permlab/gf2.hpp"

#include <algorithm>

namespace permlab {

std::vector<std::uint32_t> span_elements(const std::vector<std::uint32_t>& basis)
{
    std::vector<std::uint32_t> out{0};
    out.reserve(std::size_t{1} << basis.size());
    for (auto b : basis) {
        const std::size_t n = out.size();
        for (std::size_t j = 0; j < n; ++j) {
            out.push_back(out[j] ^ b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace permlab
