#pragma once

#include "permlab/binary_poly.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace permlab {

inline constexpr int kMaxDegree = 24;

/// Element of F_{2^m} in the power basis of the context modulus: bit i is the
/// coordinate of x^i. Bits at or above m are always clear.
struct FieldElem {
    std::uint32_t bits = 0;

    constexpr FieldElem() = default;
    constexpr explicit FieldElem(std::uint32_t b) : bits(b) {}

    [[nodiscard]] constexpr bool is_zero() const { return bits == 0; }

    friend constexpr FieldElem operator+(FieldElem a, FieldElem b) { return FieldElem{a.bits ^ b.bits}; }
    constexpr FieldElem& operator+=(FieldElem b)
    {
        bits ^= b.bits;
        return *this;
    }
    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// Tower parameters for F_{q^{3k}} with q = 2^t, so m = 3tk.
struct Tower {
    int t = 0;
    int k = 0;

    [[nodiscard]] constexpr int m() const { return 3 * t * k; }
    /// Degree over F2 of the subfield F_{q^k}.
    [[nodiscard]] constexpr int sub() const { return t * k; }
    friend constexpr bool operator==(Tower, Tower) = default;
};

/// Immutable model of F_{2^m} = F2[x]/(modulus), optionally tagged with tower
/// parameters. Cheap to copy; safe to share between threads.
class FieldCtx {
public:
    /// Field of degree m with no tower. The modulus defaults to the least
    /// irreducible of degree m; a supplied modulus must be irreducible of degree m.
    static FieldCtx plain(int m, const std::optional<BinaryPolynomial>& modulus = std::nullopt);

    /// Field F_{q^{3k}}, q = 2^t. Requires t, k >= 1 and 3tk <= 24.
    static FieldCtx tower(int t, int k, const std::optional<BinaryPolynomial>& modulus = std::nullopt);

    [[nodiscard]] int m() const { return m_; }
    [[nodiscard]] const BinaryPolynomial& modulus() const { return modulus_; }
    [[nodiscard]] const std::optional<Tower>& tower() const { return tower_; }
    /// Tower parameters; throws InvalidArgument when the context has none.
    [[nodiscard]] const Tower& require_tower() const;
    /// 2^m.
    [[nodiscard]] std::uint64_t size() const { return std::uint64_t{1} << m_; }

    /// Element with the given encoding; throws when bits >= 2^m.
    [[nodiscard]] FieldElem elem(std::uint64_t bits) const;
    [[nodiscard]] static constexpr FieldElem zero() { return FieldElem{0}; }
    [[nodiscard]] static constexpr FieldElem one() { return FieldElem{1}; }

    [[nodiscard]] static constexpr FieldElem add(FieldElem a, FieldElem b) { return a + b; }
    [[nodiscard]] FieldElem mul(FieldElem a, FieldElem b) const
    {
        // Horner over the bits of b, reducing one degree at a time.
        std::uint32_t r = 0;
        for (int i = m_ - 1; i >= 0; --i) {
            r <<= 1;
            r ^= reduce_mask_ & (0U - ((r >> m_) & 1U));
            r ^= a.bits & (0U - ((b.bits >> i) & 1U));
        }
        return FieldElem{r};
    }
    [[nodiscard]] FieldElem square(FieldElem a) const { return mul(a, a); }
    [[nodiscard]] FieldElem pow(FieldElem a, std::uint64_t e) const;
    /// a^(2^m - 2); throws ArithmeticError for a = 0.
    [[nodiscard]] FieldElem inv(FieldElem a) const;

    /// a^(2^i) by i mod m repeated squarings.
    [[nodiscard]] FieldElem frobenius(FieldElem a, long long i) const;

    /// Absolute trace onto F2 as a bit.
    [[nodiscard]] int abs_trace(FieldElem a) const;
    /// Sum of a^(2^(d*i)) for i < m/d; lands in F_{2^d}. Requires d | m.
    [[nodiscard]] FieldElem rel_trace(FieldElem a, int d) const;
    /// Trace from the subfield F_{2^d} down to F2, sum of z^(2^i) for i < d.
    /// Requires d | m and z in F_{2^d}.
    [[nodiscard]] int subfield_trace(FieldElem z, int d) const;

    [[nodiscard]] bool in_subfield(FieldElem a, int d) const { return frobenius(a, d) == a; }
    /// The 2^d elements of F_{2^d}, in ascending encoding order. Requires d | m.
    [[nodiscard]] std::vector<FieldElem> enumerate_subfield(int d) const;

    /// Linear functional with abs_trace(a) = parity(a & trace_mask()).
    [[nodiscard]] std::uint32_t trace_mask() const { return trace_mask_; }
    /// Mask w with abs_trace(a * y) = parity(y & w) for every y.
    [[nodiscard]] std::uint32_t twisted_trace_mask(FieldElem a) const;

    friend bool operator==(const FieldCtx& lhs, const FieldCtx& rhs)
    {
        return lhs.m_ == rhs.m_ && lhs.modulus_ == rhs.modulus_ && lhs.tower_ == rhs.tower_;
    }

private:
    FieldCtx(int m, BinaryPolynomial modulus, std::optional<Tower> tower);
    void require_divisor(int d, const char* op) const;

    int m_ = 0;
    BinaryPolynomial modulus_;
    std::optional<Tower> tower_;
    std::uint32_t reduce_mask_ = 0;  // full modulus, so the XOR also clears bit m
    std::uint32_t trace_mask_ = 0;
};

}  // namespace permlab
