#include "oracles.hpp"

#include <permlab/binary_poly.hpp>
#include <permlab/error.hpp>

#include <doctest.h>

#include <random>

using permlab::BinaryPolynomial;

namespace {
BinaryPolynomial P(std::uint64_t bits)
{
    return BinaryPolynomial::from_bits(bits);
}
}  // namespace

TEST_CASE("degree and canonical form")
{
    CHECK(BinaryPolynomial{}.degree() == -1);
    CHECK(P(1).degree() == 0);
    CHECK(P(0x43).degree() == 6);
    CHECK(BinaryPolynomial::monomial(130).degree() == 130);

    auto p = BinaryPolynomial::monomial(100);
    p.set_coeff(100, false);
    CHECK(p.is_zero());
    CHECK(p == BinaryPolynomial{});

    auto f = P(0x1234) + BinaryPolynomial::monomial(77);
    CHECK((f + f).is_zero());
    CHECK(P(0x43).to_string() == "x^6 + x + 1");
    CHECK(P(0x43).to_hex() == "43");
    CHECK(BinaryPolynomial::monomial(64).to_hex() == "10000000000000000");
}

TEST_CASE("multiplication and division agree with the integer oracle")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const std::uint64_t a = rng() & 0xffffffU;
        const std::uint64_t b = (rng() & 0xfffU) | 1U;
        CHECK((P(a) * P(b)).to_u64() == oracle::clmul(a, b));
        auto [q, r] = permlab::divmod(P(a), P(b));
        CHECK(r.to_u64() == oracle::polymod(a, b));
        CHECK(q * P(b) + r == P(a));
    }
    CHECK_THROWS_AS(permlab::divmod(P(5), BinaryPolynomial{}), permlab::ArithmeticError);
}

TEST_CASE("multi-word shift and product")
{
    const auto x70 = BinaryPolynomial::monomial(70);
    const auto f = (x70 + P(1)) * (x70 + P(1));
    CHECK(f == BinaryPolynomial::monomial(140) + P(1));
    CHECK((f % (x70 + P(1))).is_zero());
}

TEST_CASE("poly_gcd examples")
{
    // k = 1 and k = 2 instances of gcd(1 + ... + x^(2k-1), x^(3k) + 1) = x^k + 1.
    CHECK(permlab::poly_gcd(P(0b11), P(0b1001)) == P(0b11));
    CHECK(permlab::poly_gcd(P(0b1111), P(0b1000001)) == P(0b101));
    // k = 3, confirmed by tests/oracles/derive_values.py.
    CHECK(permlab::poly_gcd(P(0b111111), P(0b1000000001)) == P(0b1001));

    CHECK(permlab::poly_gcd(P(0x1b), BinaryPolynomial{}) == P(0x1b));
    CHECK(permlab::poly_gcd(BinaryPolynomial{}, P(0x1b)) == P(0x1b));
    CHECK(permlab::poly_gcd(BinaryPolynomial{}, BinaryPolynomial{}).is_zero());
}

TEST_CASE("poly_gcd divides both inputs and absorbs every common divisor")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        // Plant a shared factor so gcds are usually nontrivial.
        const std::uint64_t common = (rng() & 0x1fU) | 1U;
        const std::uint64_t a = oracle::clmul(common, rng() & 0xfU);
        const std::uint64_t b = oracle::clmul(common, rng() & 0xfU);
        const auto g = permlab::poly_gcd(P(a), P(b));
        if (g.is_zero()) {
            CHECK(a == 0);
            CHECK(b == 0);
            continue;
        }
        CHECK((P(a) % g).is_zero());
        CHECK((P(b) % g).is_zero());
        for (std::uint64_t d = 2; d < 512; ++d) {  // all divisors of degree <= 8
            if (oracle::polymod(a, d) == 0 && oracle::polymod(b, d) == 0) {
                CHECK((g % P(d)).is_zero());
            }
        }
    }
}

TEST_CASE("find_irreducible small degrees")
{
    CHECK(permlab::find_irreducible(1) == P(0b10));  // x
    CHECK(permlab::find_irreducible(2) == P(0b111));
    // x^6 + x + 1, confirmed by the pair-product sieve below and derive_values.py.
    CHECK(permlab::find_irreducible(6) == P(0x43));
    CHECK_THROWS_AS(permlab::find_irreducible(0), permlab::InvalidArgument);
    CHECK_THROWS_AS(permlab::find_irreducible(25), permlab::InvalidArgument);
}

TEST_CASE("find_irreducible is the least irreducible by the sieve oracle")
{
    for (int m = 1; m <= 10; ++m) {
        const auto red = oracle::reducibles(m);
        std::uint64_t least = 0;
        for (std::uint64_t p = 1ULL << m; p < (2ULL << m); ++p) {
            if (!red.contains(p)) {
                least = p;
                break;
            }
        }
        CAPTURE(m);
        CHECK(permlab::find_irreducible(m).to_u64() == least);
    }
}

TEST_CASE("find_irreducible passes trial division for every supported degree")
{
    for (int m = 1; m <= 24; ++m) {
        CAPTURE(m);
        const auto f = permlab::find_irreducible(m);
        CHECK(f.degree() == m);
        CHECK(oracle::irreducible_by_trial(f.to_u64()));
    }
}

TEST_CASE("is_irreducible agrees with the sieve on all degree-8 polynomials")
{
    const auto red = oracle::reducibles(8);
    for (std::uint64_t p = 1ULL << 8; p < (2ULL << 8); ++p) {
        CHECK(permlab::is_irreducible(P(p)) == !red.contains(p));
    }
}

TEST_CASE("smallest_factor names a factor of a square")
{
    // x^6 + x^2 + 1 = (x^3 + x + 1)^2
    CHECK(P(0b1011) * P(0b1011) == P(0x45));
    const auto f = permlab::smallest_factor(P(0x45));
    REQUIRE(f.has_value());
    CHECK(*f == P(0b1011));
    CHECK_FALSE(permlab::smallest_factor(P(0x43)).has_value());
}
