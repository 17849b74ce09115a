#pragma once

// Test-only reference arithmetic. Deliberately independent of the library:
// plain integers, schoolbook multiply, long division, definitional traces.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    for (int i = 0; b != 0; ++i, b >>= 1) {
        if (b & 1U) {
            r ^= a << i;
        }
    }
    return r;
}

inline int deg(std::uint64_t p)
{
    return p == 0 ? -1 : 63 - __builtin_clzll(p);
}

inline std::uint64_t polymod(std::uint64_t a, std::uint64_t m)
{
    const int dm = deg(m);
    while (deg(a) >= dm) {
        a ^= m << (deg(a) - dm);
    }
    return a;
}

inline std::uint64_t polygcd(std::uint64_t a, std::uint64_t b)
{
    while (b != 0) {
        a = polymod(a, b);
        std::swap(a, b);
    }
    return a;
}

/// Sieve: all reducible monic polynomials of degree m as products of pairs.
inline std::set<std::uint64_t> reducibles(int m)
{
    std::set<std::uint64_t> out;
    for (int d = 1; d <= m / 2; ++d) {
        for (std::uint64_t f = 1ULL << d; f < (2ULL << d); ++f) {
            for (std::uint64_t g = 1ULL << (m - d); g < (2ULL << (m - d)); ++g) {
                out.insert(clmul(f, g));
            }
        }
    }
    return out;
}

/// Trial division by every polynomial of degree 1..m/2.
inline bool irreducible_by_trial(std::uint64_t f)
{
    const int m = deg(f);
    for (int d = 1; d <= m / 2; ++d) {
        for (std::uint64_t g = 1ULL << d; g < (2ULL << d); ++g) {
            if (polymod(f, g) == 0) {
                return false;
            }
        }
    }
    return m >= 1;
}

struct Field {
    std::uint64_t modulus;
    int m;

    [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        return static_cast<std::uint32_t>(polymod(clmul(a, b), modulus));
    }
    [[nodiscard]] std::uint32_t pow(std::uint32_t a, std::uint64_t e) const
    {
        std::uint32_t r = 1;
        for (std::uint64_t i = 0; i < e; ++i) {
            r = mul(r, a);
        }
        return r;
    }
    [[nodiscard]] std::uint32_t frob(std::uint32_t a, int i) const
    {
        for (int j = 0; j < i; ++j) {
            a = mul(a, a);
        }
        return a;
    }
    /// Definitional absolute trace, sum of a^(2^i).
    [[nodiscard]] int trace(std::uint32_t a) const
    {
        std::uint32_t s = 0;
        for (int i = 0; i < m; ++i) {
            s ^= a;
            a = mul(a, a);
        }
        return static_cast<int>(s);
    }
    [[nodiscard]] std::uint64_t size() const { return 1ULL << m; }
};

/// Permutation check by sorting the value list.
inline bool is_bijective(std::vector<std::uint32_t> values)
{
    std::sort(values.begin(), values.end());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != i) {
            return false;
        }
    }
    return true;
}

/// Character sum via the definitional trace.
inline long long char_sum(const Field& f, const std::vector<std::uint32_t>& values, std::uint32_t a)
{
    long long s = 0;
    for (auto v : values) {
        s += f.trace(f.mul(a, v)) ? -1 : 1;
    }
    return s;
}

}  // namespace oracle
