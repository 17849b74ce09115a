#include "permlab/binary_poly.hpp"

#include "permlab/error.hpp"
#include "permlab/hex.hpp"

#include <algorithm>
#include <bit>

namespace permlab {

BinaryPolynomial BinaryPolynomial::from_bits(std::uint64_t bits)
{
    BinaryPolynomial p;
    if (bits != 0) {
        p.words_.push_back(bits);
    }
    return p;
}

BinaryPolynomial BinaryPolynomial::monomial(int degree)
{
    BinaryPolynomial p;
    p.set_coeff(degree, true);
    return p;
}

BinaryPolynomial BinaryPolynomial::all_ones(int n)
{
    BinaryPolynomial p;
    for (int i = 0; i < n; ++i) {
        p.set_coeff(i, true);
    }
    return p;
}

int BinaryPolynomial::degree() const
{
    if (words_.empty()) {
        return -1;
    }
    const auto top = words_.back();
    return static_cast<int>(64 * (words_.size() - 1)) + 63 - std::countl_zero(top);
}

bool BinaryPolynomial::coeff(int i) const
{
    if (i < 0) {
        return false;
    }
    const auto w = static_cast<std::size_t>(i / 64);
    return w < words_.size() && ((words_[w] >> (i % 64)) & 1U);
}

void BinaryPolynomial::set_coeff(int i, bool value)
{
    if (i < 0) {
        throw InvalidArgument("negative coefficient index");
    }
    const auto w = static_cast<std::size_t>(i / 64);
    if (w >= words_.size()) {
        if (!value) {
            return;
        }
        words_.resize(w + 1, 0);
    }
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (value) {
        words_[w] |= bit;
    } else {
        words_[w] &= ~bit;
    }
    trim();
}

std::uint64_t BinaryPolynomial::to_u64() const
{
    if (words_.size() > 1) {
        throw InvalidArgument("polynomial degree exceeds 63");
    }
    return words_.empty() ? 0 : words_[0];
}

std::string BinaryPolynomial::to_hex() const
{
    if (words_.empty()) {
        return "0";
    }
    std::string out = permlab::to_hex(words_.back());
    for (auto it = words_.rbegin() + 1; it != words_.rend(); ++it) {
        std::string w = permlab::to_hex(*it);
        out += std::string(16 - w.size(), '0') + w;
    }
    return out;
}

std::string BinaryPolynomial::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (!coeff(i)) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        if (i == 0) {
            out += "1";
        } else if (i == 1) {
            out += "x";
        } else {
            out += "x^" + std::to_string(i);
        }
    }
    return out;
}

BinaryPolynomial& BinaryPolynomial::operator+=(const BinaryPolynomial& rhs)
{
    if (rhs.words_.size() > words_.size()) {
        words_.resize(rhs.words_.size(), 0);
    }
    for (std::size_t i = 0; i < rhs.words_.size(); ++i) {
        words_[i] ^= rhs.words_[i];
    }
    trim();
    return *this;
}

BinaryPolynomial operator*(const BinaryPolynomial& lhs, const BinaryPolynomial& rhs)
{
    BinaryPolynomial out;
    const int db = rhs.degree();
    for (int i = 0; i <= db; ++i) {
        if (rhs.coeff(i)) {
            out += lhs.shifted(i);
        }
    }
    return out;
}

BinaryPolynomial BinaryPolynomial::shifted(int n) const
{
    if (is_zero() || n == 0) {
        return *this;
    }
    BinaryPolynomial out;
    const auto word_shift = static_cast<std::size_t>(n / 64);
    const int bit_shift = n % 64;
    out.words_.assign(words_.size() + word_shift + 1, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        out.words_[i + word_shift] ^= words_[i] << bit_shift;
        if (bit_shift != 0) {
            out.words_[i + word_shift + 1] ^= words_[i] >> (64 - bit_shift);
        }
    }
    out.trim();
    return out;
}

void BinaryPolynomial::trim()
{
    while (!words_.empty() && words_.back() == 0) {
        words_.pop_back();
    }
}

std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& f,
                                                     const BinaryPolynomial& g)
{
    if (g.is_zero()) {
        throw ArithmeticError("polynomial division by zero");
    }
    BinaryPolynomial quotient;
    BinaryPolynomial rem = f;
    const int dg = g.degree();
    while (rem.degree() >= dg) {
        const int shift = rem.degree() - dg;
        quotient.set_coeff(shift, true);
        rem += g.shifted(shift);
    }
    return {quotient, rem};
}

BinaryPolynomial operator%(const BinaryPolynomial& f, const BinaryPolynomial& g)
{
    return divmod(f, g).second;
}

BinaryPolynomial poly_gcd(BinaryPolynomial f, BinaryPolynomial g)
{
    while (!g.is_zero()) {
        BinaryPolynomial r = f % g;
        f = std::move(g);
        g = std::move(r);
    }
    return f;
}

BinaryPolynomial mulmod(const BinaryPolynomial& a, const BinaryPolynomial& b,
                        const BinaryPolynomial& f)
{
    return (a * b) % f;
}

bool is_irreducible(const BinaryPolynomial& f)
{
    const int n = f.degree();
    if (n <= 0) {
        return false;
    }
    const auto x = BinaryPolynomial::monomial(1);
    BinaryPolynomial power = x % f;  // x^(2^i) mod f
    for (int i = 1; i <= n / 2; ++i) {
        power = mulmod(power, power, f);
        if (poly_gcd(f, power + x).degree() != 0) {
            return false;
        }
    }
    return true;
}

std::optional<BinaryPolynomial> smallest_factor(const BinaryPolynomial& f)
{
    const int n = f.degree();
    if (n <= 1) {
        return std::nullopt;
    }
    if (n > 62) {
        throw InvalidArgument("trial division limited to degree <= 62");
    }
    for (int d = 1; d <= n / 2; ++d) {
        const std::uint64_t lo = std::uint64_t{1} << d;
        for (std::uint64_t bits = lo; bits < (lo << 1); ++bits) {
            auto candidate = BinaryPolynomial::from_bits(bits);
            if ((f % candidate).is_zero()) {
                return candidate;
            }
        }
    }
    return std::nullopt;
}

BinaryPolynomial find_irreducible(int m)
{
    if (m < 1 || m > 24) {
        throw InvalidArgument("find_irreducible: degree must be in 1..24, got " +
                              std::to_string(m));
    }
    const std::uint64_t lo = std::uint64_t{1} << m;
    for (std::uint64_t bits = lo; bits < (lo << 1); ++bits) {
        auto candidate = BinaryPolynomial::from_bits(bits);
        if (is_irreducible(candidate)) {
            return candidate;
        }
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace permlab
