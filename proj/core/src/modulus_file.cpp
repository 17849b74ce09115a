#include "permlab/modulus_file.hpp"

#include "permlab/error.hpp"
#include "permlab/hex.hpp"

#include <charconv>
#include <fstream>
#include <string>

namespace permlab {

ModulusOverrides ModulusOverrides::parse(std::istream& in)
{
    ModulusOverrides out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const auto bad = [&](const std::string& why) {
            return InvalidArgument("modulus file line " + std::to_string(lineno) + ": " + why);
        };
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw bad("expected m:hex");
        }
        int m = 0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + colon, m);
        if (ec != std::errc{} || ptr != line.data() + colon) {
            throw bad("bad degree");
        }
        auto bits = parse_hex(std::string_view(line).substr(colon + 1));
        if (!bits) {
            throw bad("bad hex modulus");
        }
        auto poly = BinaryPolynomial::from_bits(*bits);
        if (poly.degree() != m) {
            throw bad("modulus degree " + std::to_string(poly.degree()) + " does not match m=" +
                      std::to_string(m));
        }
        if (!out.entries_.emplace(m, poly).second) {
            throw bad("duplicate entry for m=" + std::to_string(m));
        }
    }
    return out;
}

ModulusOverrides ModulusOverrides::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot open modulus file " + path.string());
    }
    return parse(in);
}

std::optional<BinaryPolynomial> ModulusOverrides::lookup(int m) const
{
    if (auto it = entries_.find(m); it != entries_.end()) {
        return it->second;
    }
    return std::nullopt;
}

}  // namespace permlab
