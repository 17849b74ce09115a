#pragma once

#include "permlab/binary_poly.hpp"

#include <filesystem>
#include <istream>
#include <map>
#include <optional>

namespace permlab {

/// Per-degree modulus overrides read from lines of the form `m:hex`, where
/// hex is the coefficient bit vector (`6:43` is x^6 + x + 1). Blank lines are
/// ignored. Irreducibility is checked when the modulus is used, not here.
class ModulusOverrides {
public:
    static ModulusOverrides parse(std::istream& in);
    static ModulusOverrides load(const std::filesystem::path& path);

    [[nodiscard]] std::optional<BinaryPolynomial> lookup(int m) const;
    [[nodiscard]] std::size_t size() const { return entries_.size(); }

private:
    std::map<int, BinaryPolynomial> entries_;
};

}  // namespace permlab
