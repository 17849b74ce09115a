#pragma once

#include "permlab/field.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permlab {

/// 2-linearized polynomial sum_i c[i] x^(2^i) over F_{2^m}, with exponent
/// indices reduced mod m (x^(2^m) = x on the field). Always exactly m
/// coefficients.
class LinearizedPoly {
public:
    LinearizedPoly() = default;
    explicit LinearizedPoly(int m) : coeffs_(static_cast<std::size_t>(m)) {}

    static LinearizedPoly identity(int m) { return frobenius_power(m, 0); }
    /// x^(2^e), index reduced mod m.
    static LinearizedPoly frobenius_power(int m, long long e);

    [[nodiscard]] int m() const { return static_cast<int>(coeffs_.size()); }
    [[nodiscard]] FieldElem coeff(long long i) const { return coeffs_[index(i)]; }
    void set_coeff(long long i, FieldElem c) { coeffs_[index(i)] = c; }
    /// Adds c to the coefficient at i mod m.
    void add_coeff(long long i, FieldElem c) { coeffs_[index(i)] += c; }
    [[nodiscard]] std::span<const FieldElem> coeffs() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const;

    LinearizedPoly& operator+=(const LinearizedPoly& rhs);
    friend LinearizedPoly operator+(LinearizedPoly lhs, const LinearizedPoly& rhs)
    {
        lhs += rhs;
        return lhs;
    }
    friend bool operator==(const LinearizedPoly&, const LinearizedPoly&) = default;

    /// `lin[i0:hex,i1:hex,...]` listing the nonzero coefficients by index.
    [[nodiscard]] std::string to_text() const;
    /// Inverse of to_text; validates indices and coefficients against ctx.
    static LinearizedPoly parse(std::string_view text, const FieldCtx& ctx);

private:
    [[nodiscard]] std::size_t index(long long i) const
    {
        const long long m = static_cast<long long>(coeffs_.size());
        return static_cast<std::size_t>(((i % m) + m) % m);
    }

    std::vector<FieldElem> coeffs_;
};

/// sum_i c[i] * frobenius(x, i).
FieldElem lin_eval(const FieldCtx& ctx, const LinearizedPoly& L, FieldElem x);

/// A after B: result[h] = sum over i + j = h (mod m) of A[i] * B[j]^(2^i).
LinearizedPoly lin_compose(const FieldCtx& ctx, const LinearizedPoly& A, const LinearizedPoly& B);

/// x + x^q + ... + x^(q^(n-1)) with q = 2^t from the ctx tower: coefficient 1
/// at (t*i) mod m, XOR-accumulated when indices collide.
LinearizedPoly s_polynomial(int n_terms, const FieldCtx& ctx);

/// S_{2k} for the ctx tower. For n = 2k, stride t and m = 3tk the indices
/// never collide; this is checked.
LinearizedPoly s_2k(const FieldCtx& ctx);

/// Matrix of an F2-linear map in the power basis, evaluated with one
/// 256-entry table per input byte.
class CompiledLinearMap {
public:
    CompiledLinearMap() = default;
    CompiledLinearMap(const FieldCtx& ctx, const LinearizedPoly& L);

    [[nodiscard]] FieldElem operator()(FieldElem x) const
    {
        std::uint32_t r = 0;
        for (std::size_t b = 0; b < tables_.size(); ++b) {
            r ^= tables_[b][(x.bits >> (8 * b)) & 0xffU];
        }
        return FieldElem{r};
    }
    /// Column i is the image of the basis element x^i.
    [[nodiscard]] const std::vector<std::uint32_t>& columns() const { return columns_; }

private:
    std::vector<std::uint32_t> columns_;
    std::vector<std::array<std::uint32_t, 256>> tables_;
};

/// Kernel and image of L as F2-subspaces, both given by reduced echelon bases.
struct KernelImage {
    std::vector<FieldElem> kernel_basis;
    std::vector<FieldElem> image_basis;

    [[nodiscard]] int kernel_dim() const { return static_cast<int>(kernel_basis.size()); }
    [[nodiscard]] int image_dim() const { return static_cast<int>(image_basis.size()); }
    /// Full enumeration, ascending; 2^dim elements.
    [[nodiscard]] std::vector<FieldElem> kernel_elements() const;
    [[nodiscard]] std::vector<FieldElem> image_elements() const;
};

KernelImage lin_kernel_image(const FieldCtx& ctx, const LinearizedPoly& L);

enum class PermutesStatus { permutes, not_subfield_stable, not_injective };

struct PermutesResult {
    PermutesStatus status = PermutesStatus::permutes;
    /// not_subfield_stable: an x in the subfield with L(x) outside it.
    /// not_injective: the second of the first colliding pair (first is `other`).
    std::optional<FieldElem> witness;
    std::optional<FieldElem> other;

    explicit operator bool() const { return status == PermutesStatus::permutes; }
};

/// Whether L maps F_{2^d} into itself bijectively, by exhaustive evaluation
/// over the subfield. Requires d | m.
PermutesResult permutes(const FieldCtx& ctx, const LinearizedPoly& L, int d);

const char* to_string(PermutesStatus s);

}  // namespace permlab
