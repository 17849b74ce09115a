#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace permlab {

/// Polynomial over F2 of arbitrary degree, stored as a little-endian bit
/// vector (bit i is the coefficient of x^i). The word vector never carries
/// trailing zero words, so equality is structural.
class BinaryPolynomial {
public:
    BinaryPolynomial() = default;

    /// Coefficients taken from the bits of `bits`.
    static BinaryPolynomial from_bits(std::uint64_t bits);
    static BinaryPolynomial monomial(int degree);
    /// 1 + x + ... + x^(n-1); zero for n = 0.
    static BinaryPolynomial all_ones(int n);

    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const;
    [[nodiscard]] bool is_zero() const { return words_.empty(); }
    [[nodiscard]] bool coeff(int i) const;
    void set_coeff(int i, bool value);

    /// Low 64 coefficients; throws InvalidArgument when degree >= 64.
    [[nodiscard]] std::uint64_t to_u64() const;
    [[nodiscard]] std::string to_hex() const;
    /// Human-readable form such as "x^6 + x + 1".
    [[nodiscard]] std::string to_string() const;

    BinaryPolynomial& operator+=(const BinaryPolynomial& rhs);
    friend BinaryPolynomial operator+(BinaryPolynomial lhs, const BinaryPolynomial& rhs)
    {
        lhs += rhs;
        return lhs;
    }
    friend BinaryPolynomial operator*(const BinaryPolynomial& lhs, const BinaryPolynomial& rhs);
    friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;

    /// Shift by x^n.
    [[nodiscard]] BinaryPolynomial shifted(int n) const;

private:
    void trim();

    std::vector<std::uint64_t> words_;
};

/// Quotient and remainder; throws ArithmeticError on division by zero.
std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& f,
                                                     const BinaryPolynomial& g);
BinaryPolynomial operator%(const BinaryPolynomial& f, const BinaryPolynomial& g);

/// Euclidean gcd. Over F2 every nonzero polynomial is monic, so the result
/// is already normalized; gcd(0, 0) = 0.
BinaryPolynomial poly_gcd(BinaryPolynomial f, BinaryPolynomial g);

/// (a * b) mod f.
BinaryPolynomial mulmod(const BinaryPolynomial& a, const BinaryPolynomial& b,
                        const BinaryPolynomial& f);

/// Ben-Or test: f of degree n is irreducible iff gcd(x^(2^i) - x, f) = 1
/// for i = 1..n/2. Degree <= 0 is not irreducible.
bool is_irreducible(const BinaryPolynomial& f);

/// Lowest-degree nontrivial factor (least encoding among those), or nullopt
/// when f is irreducible. Trial division, intended for diagnostics.
std::optional<BinaryPolynomial> smallest_factor(const BinaryPolynomial& f);

/// Monic irreducible of degree m whose encoding is least; 1 <= m <= 24.
BinaryPolynomial find_irreducible(int m);

}  // namespace permlab
