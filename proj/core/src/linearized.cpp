#include "permlab/linearized.hpp"

#include "permlab/error.hpp"
#include "permlab/gf2.hpp"
#include "permlab/hex.hpp"

#include <charconv>
#include <stdexcept>

namespace permlab {

namespace {

void require_same_degree(const FieldCtx& ctx, const LinearizedPoly& L)
{
    if (L.m() != ctx.m()) {
        throw InvalidArgument("linearized polynomial of length " + std::to_string(L.m()) +
                              " used with field of degree " + std::to_string(ctx.m()));
    }
}

std::vector<FieldElem> to_elems(const std::vector<std::uint32_t>& v)
{
    std::vector<FieldElem> out;
    out.reserve(v.size());
    for (auto b : v) {
        out.emplace_back(b);
    }
    return out;
}

std::vector<std::uint32_t> to_bits(const std::vector<FieldElem>& v)
{
    std::vector<std::uint32_t> out;
    out.reserve(v.size());
    for (auto e : v) {
        out.push_back(e.bits);
    }
    return out;
}

}  // namespace

LinearizedPoly LinearizedPoly::frobenius_power(int m, long long e)
{
    LinearizedPoly out(m);
    out.set_coeff(e, FieldCtx::one());
    return out;
}

bool LinearizedPoly::is_zero() const
{
    for (auto c : coeffs_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

LinearizedPoly& LinearizedPoly::operator+=(const LinearizedPoly& rhs)
{
    if (rhs.m() != m()) {
        throw InvalidArgument("adding linearized polynomials of different length");
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

std::string LinearizedPoly::to_text() const
{
    std::string out = "lin[";
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        if (!first) {
            out += ',';
        }
        first = false;
        out += std::to_string(i) + ':' + to_hex(coeffs_[i].bits);
    }
    out += ']';
    return out;
}

LinearizedPoly LinearizedPoly::parse(std::string_view text, const FieldCtx& ctx)
{
    const auto bad = [&](const std::string& why) {
        return InvalidArgument("bad linearized polynomial '" + std::string(text) + "': " + why);
    };
    if (!text.starts_with("lin[") || !text.ends_with("]")) {
        throw bad("expected lin[...]");
    }
    std::string_view body = text.substr(4, text.size() - 5);
    LinearizedPoly out(ctx.m());
    std::vector<bool> seen(static_cast<std::size_t>(ctx.m()), false);
    while (!body.empty()) {
        const auto comma = body.find(',');
        const std::string_view item = body.substr(0, comma);
        body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw bad("expected index:hexcoef");
        }
        int idx = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + colon, idx);
        if (ec != std::errc{} || ptr != item.data() + colon || idx < 0 || idx >= ctx.m()) {
            throw bad("index out of range 0.." + std::to_string(ctx.m() - 1));
        }
        auto c = parse_hex(item.substr(colon + 1));
        if (!c || *c >= ctx.size()) {
            throw bad("coefficient is not a field element");
        }
        if (seen[static_cast<std::size_t>(idx)]) {
            throw bad("duplicate index " + std::to_string(idx));
        }
        seen[static_cast<std::size_t>(idx)] = true;
        out.set_coeff(idx, FieldElem{static_cast<std::uint32_t>(*c)});
    }
    return out;
}

FieldElem lin_eval(const FieldCtx& ctx, const LinearizedPoly& L, FieldElem x)
{
    require_same_degree(ctx, L);
    FieldElem sum;
    FieldElem power = x;  // x^(2^i)
    for (int i = 0; i < L.m(); ++i) {
        if (!L.coeff(i).is_zero()) {
            sum += ctx.mul(L.coeff(i), power);
        }
        power = ctx.square(power);
    }
    return sum;
}

LinearizedPoly lin_compose(const FieldCtx& ctx, const LinearizedPoly& A, const LinearizedPoly& B)
{
    require_same_degree(ctx, A);
    require_same_degree(ctx, B);
    const int m = ctx.m();
    LinearizedPoly out(m);
    for (int i = 0; i < m; ++i) {
        if (A.coeff(i).is_zero()) {
            continue;
        }
        for (int j = 0; j < m; ++j) {
            if (!B.coeff(j).is_zero()) {
                out.add_coeff(i + j, ctx.mul(A.coeff(i), ctx.frobenius(B.coeff(j), i)));
            }
        }
    }
    return out;
}

LinearizedPoly s_polynomial(int n_terms, const FieldCtx& ctx)
{
    const int t = ctx.require_tower().t;
    if (n_terms < 0) {
        throw InvalidArgument("s_polynomial: negative term count");
    }
    LinearizedPoly out(ctx.m());
    for (int i = 0; i < n_terms; ++i) {
        out.add_coeff(static_cast<long long>(t) * i, FieldCtx::one());
    }
    return out;
}

LinearizedPoly s_2k(const FieldCtx& ctx)
{
    const Tower& tw = ctx.require_tower();
    LinearizedPoly s = s_polynomial(2 * tw.k, ctx);
    int terms = 0;
    for (auto c : s.coeffs()) {
        terms += c.is_zero() ? 0 : 1;
    }
    if (terms != 2 * tw.k) {
        throw std::logic_error("S_2k exponent indices collided");
    }
    return s;
}

CompiledLinearMap::CompiledLinearMap(const FieldCtx& ctx, const LinearizedPoly& L)
{
    const int m = ctx.m();
    columns_.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        columns_.push_back(lin_eval(ctx, L, FieldElem{std::uint32_t{1} << i}).bits);
    }
    tables_.resize(static_cast<std::size_t>((m + 7) / 8));
    for (std::size_t b = 0; b < tables_.size(); ++b) {
        auto& table = tables_[b];
        table[0] = 0;
        for (std::uint32_t v = 1; v < 256; ++v) {
            const int low = std::countr_zero(v);
            const auto col = 8 * b + static_cast<std::size_t>(low);
            table[v] = table[v & (v - 1)] ^ (col < columns_.size() ? columns_[col] : 0U);
        }
    }
}

std::vector<FieldElem> KernelImage::kernel_elements() const
{
    return to_elems(span_elements(to_bits(kernel_basis)));
}

std::vector<FieldElem> KernelImage::image_elements() const
{
    return to_elems(span_elements(to_bits(image_basis)));
}

KernelImage lin_kernel_image(const FieldCtx& ctx, const LinearizedPoly& L)
{
    require_same_degree(ctx, L);
    Gf2Eliminator image;
    Gf2Eliminator kernel;
    for (int i = 0; i < ctx.m(); ++i) {
        const std::uint32_t e = std::uint32_t{1} << i;
        if (auto dep = image.insert(lin_eval(ctx, L, FieldElem{e}).bits, e)) {
            kernel.insert(*dep, 0);
        }
    }
    KernelImage out;
    for (const auto& row : kernel.rows()) {
        out.kernel_basis.emplace_back(row.value);
    }
    for (const auto& row : image.rows()) {
        out.image_basis.emplace_back(row.value);
    }
    return out;
}

PermutesResult permutes(const FieldCtx& ctx, const LinearizedPoly& L, int d)
{
    const auto sub = ctx.enumerate_subfield(d);
    std::vector<FieldElem> images;
    images.reserve(sub.size());
    for (auto x : sub) {
        const FieldElem y = lin_eval(ctx, L, x);
        if (!ctx.in_subfield(y, d)) {
            return {PermutesStatus::not_subfield_stable, x, std::nullopt};
        }
        images.push_back(y);
    }
    // Subfield is sorted, so binary search gives each image its slot.
    std::vector<std::int64_t> first_preimage(sub.size(), -1);
    for (std::size_t i = 0; i < sub.size(); ++i) {
        const auto slot = static_cast<std::size_t>(
            std::lower_bound(sub.begin(), sub.end(), images[i]) - sub.begin());
        if (first_preimage[slot] >= 0) {
            return {PermutesStatus::not_injective, sub[i], sub[static_cast<std::size_t>(first_preimage[slot])]};
        }
        first_preimage[slot] = static_cast<std::int64_t>(i);
    }
    return {};
}

const char* to_string(PermutesStatus s)
{
    switch (s) {
    case PermutesStatus::permutes:
        return "permutes";
    case PermutesStatus::not_subfield_stable:
        return "not subfield-stable";
    case PermutesStatus::not_injective:
        return "not injective";
    }
    return "?";
}

}  // namespace permlab
