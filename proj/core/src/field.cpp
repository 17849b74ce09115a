#include "permlab/field.hpp"

#include "permlab/error.hpp"
#include "permlab/gf2.hpp"

#include <bit>
#include <string>

namespace permlab {

namespace {

BinaryPolynomial checked_modulus(int m, const std::optional<BinaryPolynomial>& modulus)
{
    if (m < 1 || m > kMaxDegree) {
        throw InvalidArgument("field degree must be in 1.." + std::to_string(kMaxDegree) +
                              ", got " + std::to_string(m));
    }
    if (!modulus) {
        return find_irreducible(m);
    }
    if (modulus->degree() != m) {
        throw InvalidArgument("modulus " + modulus->to_string() + " has degree " +
                              std::to_string(modulus->degree()) + ", expected " + std::to_string(m));
    }
    if (auto factor = smallest_factor(*modulus)) {
        throw InvalidArgument("modulus " + modulus->to_string() + " is reducible: divisible by " +
                              factor->to_string());
    }
    return *modulus;
}

}  // namespace

FieldCtx::FieldCtx(int m, BinaryPolynomial modulus, std::optional<Tower> tower)
    : m_(m), modulus_(std::move(modulus)), tower_(tower)
{
    reduce_mask_ = static_cast<std::uint32_t>(modulus_.to_u64());
    for (int i = 0; i < m_; ++i) {
        FieldElem basis{std::uint32_t{1} << i};
        FieldElem sum;
        FieldElem power = basis;
        for (int j = 0; j < m_; ++j) {
            sum += power;
            power = square(power);
        }
        trace_mask_ |= sum.bits << i;  // sum is 0 or 1
    }
}

FieldCtx FieldCtx::plain(int m, const std::optional<BinaryPolynomial>& modulus)
{
    return FieldCtx(m, checked_modulus(m, modulus), std::nullopt);
}

FieldCtx FieldCtx::tower(int t, int k, const std::optional<BinaryPolynomial>& modulus)
{
    if (t < 1 || k < 1 || 3 * t * k > kMaxDegree) {
        throw InvalidArgument("tower needs t >= 1, k >= 1 and 3tk <= " + std::to_string(kMaxDegree) +
                              ", got t=" + std::to_string(t) + " k=" + std::to_string(k));
    }
    const int m = 3 * t * k;
    return FieldCtx(m, checked_modulus(m, modulus), Tower{t, k});
}

const Tower& FieldCtx::require_tower() const
{
    if (!tower_) {
        throw InvalidArgument("operation requires a tower context (t, k)");
    }
    return *tower_;
}

FieldElem FieldCtx::elem(std::uint64_t bits) const
{
    if (bits >= size()) {
        throw InvalidArgument("element encoding " + std::to_string(bits) + " out of range for m=" +
                              std::to_string(m_));
    }
    return FieldElem{static_cast<std::uint32_t>(bits)};
}

FieldElem FieldCtx::pow(FieldElem a, std::uint64_t e) const
{
    FieldElem result = one();
    FieldElem base = a;
    while (e != 0) {
        if (e & 1U) {
            result = mul(result, base);
        }
        base = square(base);
        e >>= 1;
    }
    return result;
}

FieldElem FieldCtx::inv(FieldElem a) const
{
    if (a.is_zero()) {
        throw ArithmeticError("inverse of zero");
    }
    return pow(a, size() - 2);
}

FieldElem FieldCtx::frobenius(FieldElem a, long long i) const
{
    long long r = i % m_;
    if (r < 0) {
        r += m_;
    }
    for (long long j = 0; j < r; ++j) {
        a = square(a);
    }
    return a;
}

int FieldCtx::abs_trace(FieldElem a) const
{
    return std::popcount(a.bits & trace_mask_) & 1;
}

void FieldCtx::require_divisor(int d, const char* op) const
{
    if (d < 1 || m_ % d != 0) {
        throw InvalidArgument(std::string(op) + ": subfield degree " + std::to_string(d) +
                              " does not divide m=" + std::to_string(m_));
    }
}

FieldElem FieldCtx::rel_trace(FieldElem a, int d) const
{
    require_divisor(d, "rel_trace");
    FieldElem sum;
    for (int i = 0; i < m_ / d; ++i) {
        sum += a;
        a = frobenius(a, d);
    }
    return sum;
}

int FieldCtx::subfield_trace(FieldElem z, int d) const
{
    require_divisor(d, "subfield_trace");
    if (!in_subfield(z, d)) {
        throw InvalidArgument("subfield_trace: element not in F_{2^" + std::to_string(d) + "}");
    }
    FieldElem sum;
    for (int i = 0; i < d; ++i) {
        sum += z;
        z = square(z);
    }
    return static_cast<int>(sum.bits);
}

std::vector<FieldElem> FieldCtx::enumerate_subfield(int d) const
{
    require_divisor(d, "enumerate_subfield");
    std::vector<FieldElem> out;
    out.reserve(std::size_t{1} << d);
    if (d == m_) {
        for (std::uint32_t v = 0; v < size(); ++v) {
            out.emplace_back(v);
        }
        return out;
    }
    // F_{2^d} is the kernel of the F2-linear map a -> a^(2^d) + a.
    Gf2Eliminator elim;
    std::vector<std::uint32_t> kernel;
    for (int i = 0; i < m_; ++i) {
        const FieldElem e{std::uint32_t{1} << i};
        if (auto dep = elim.insert((frobenius(e, d) + e).bits, e.bits)) {
            kernel.push_back(*dep);
        }
    }
    for (auto v : span_elements(kernel)) {
        out.emplace_back(v);
    }
    return out;
}

std::uint32_t FieldCtx::twisted_trace_mask(FieldElem a) const
{
    std::uint32_t mask = 0;
    for (int i = 0; i < m_; ++i) {
        mask |= static_cast<std::uint32_t>(abs_trace(mul(a, FieldElem{std::uint32_t{1} << i}))) << i;
    }
    return mask;
}

}  // namespace permlab
