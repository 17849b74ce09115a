#include "permlab/constructions.hpp"

#include "permlab/error.hpp"
#include "permlab/hex.hpp"
#include "permlab/parallel.hpp"
#include "permlab/pp_test.hpp"

namespace permlab {

namespace {

struct CubicTerm {
    CompiledLinearMap s;
    CompiledLinearMap frob_k;  // y -> y^(q^k)

    CubicTerm(const FieldCtx& ctx)
        : s(ctx, s_2k(ctx)),
          frob_k(ctx, LinearizedPoly::frobenius_power(ctx.m(), ctx.require_tower().sub()))
    {
    }

    /// s^(q^k + 3).
    [[nodiscard]] FieldElem eval(const FieldCtx& ctx, FieldElem sx) const
    {
        return ctx.mul(frob_k(sx), ctx.mul(ctx.square(sx), sx));
    }
};

}  // namespace

FieldMap build_g_thm1(const CtxPtr& ctx)
{
    const Tower& tw = ctx->require_tower();
    auto cubic = std::make_shared<const CubicTerm>(*ctx);
    const CompiledLinearMap frob_2k(*ctx, LinearizedPoly::frobenius_power(ctx->m(), 2 * tw.sub()));
    FieldMap g("g-thm1", ctx, [ctx, cubic, frob_2k](FieldElem x) {
        const FieldElem sx = cubic->s(x);
        return x + frob_2k(sx) + cubic->eval(*ctx, sx);
    });
    g.materialize_if_small();
    return g;
}

LinearizedPoly build_L_note(const FieldCtx& ctx)
{
    const Tower& tw = ctx.require_tower();
    const int m = ctx.m();
    const LinearizedPoly inner =
        LinearizedPoly::identity(m) +
        lin_compose(ctx, LinearizedPoly::frobenius_power(m, 2 * tw.sub()), s_2k(ctx));
    const long long e = 2 + static_cast<long long>(tw.t) * (3 * tw.k - 1);
    return lin_compose(ctx, LinearizedPoly::frobenius_power(m, e), inner);
}

bool check_condition_ii(const FieldCtx& ctx, const LinearizedPoly& L)
{
    const Tower& tw = ctx.require_tower();
    const int m = ctx.m();
    const LinearizedPoly lhs = L + lin_compose(ctx, LinearizedPoly::frobenius_power(m, 2 * tw.sub()), L);
    const LinearizedPoly rhs = lin_compose(ctx, LinearizedPoly::frobenius_power(m, 2), s_2k(ctx));
    return lhs == rhs;
}

FieldMap build_g_thm3(const CtxPtr& ctx, const LinearizedPoly& L)
{
    auto cubic = std::make_shared<const CubicTerm>(*ctx);
    const CompiledLinearMap lmap(*ctx, L);
    FieldMap g("g-thm3(" + L.to_text() + ")", ctx, [ctx, cubic, lmap](FieldElem x) {
        return lmap(x) + cubic->eval(*ctx, cubic->s(x));
    });
    g.materialize_if_small();
    return g;
}

FieldMap linear_map(const CtxPtr& ctx, const LinearizedPoly& L, std::string name)
{
    const CompiledLinearMap lmap(*ctx, L);
    FieldMap f(std::move(name), ctx, [lmap](FieldElem x) { return lmap(x); });
    f.materialize_if_small();
    return f;
}

LinearizedPoly rel_trace_poly(const FieldCtx& ctx)
{
    const int d = ctx.require_tower().sub();
    LinearizedPoly out(ctx.m());
    for (int i = 0; i < 3; ++i) {
        out.add_coeff(static_cast<long long>(d) * i, FieldCtx::one());
    }
    return out;
}

LSearchResult search_L_candidates(const CtxPtr& ctx, std::size_t budget)
{
    const Tower& tw = ctx->require_tower();
    if (ctx->m() > kSearchLimit) {
        throw InvalidArgument("L search limited to m <= " + std::to_string(kSearchLimit) +
                              " (m=" + std::to_string(ctx->m()) + ")");
    }
    const int d = tw.sub();
    const int m = ctx->m();

    std::vector<FieldElem> coeffs = ctx->enumerate_subfield(d);
    coeffs.erase(coeffs.begin());  // drop 0

    struct Term {
        int index;
        FieldElem coeff;
    };
    // Family members in enumeration order, truncated to the budget.
    std::vector<std::vector<Term>> family;
    family.push_back({});
    for (int i = 0; i < d && family.size() < budget; ++i) {
        for (auto c : coeffs) {
            if (family.size() >= budget) {
                break;
            }
            family.push_back({{i, c}});
        }
    }
    for (int i1 = 0; i1 < d && family.size() < budget; ++i1) {
        for (int i2 = i1 + 1; i2 < d && family.size() < budget; ++i2) {
            for (auto c1 : coeffs) {
                for (auto c2 : coeffs) {
                    if (family.size() >= budget) {
                        break;
                    }
                    family.push_back({{i1, c1}, {i2, c2}});
                }
            }
        }
    }
    if (budget == 0) {
        family.clear();
    }

    const LinearizedPoly base = build_L_note(*ctx);
    const LinearizedPoly trace = rel_trace_poly(*ctx);

    std::vector<std::optional<LCandidate>> slots(family.size());
    parallel_for(family.size(), [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            LinearizedPoly p(m);
            std::string desc;
            for (const auto& term : family[idx]) {
                p.add_coeff(term.index, term.coeff);
                desc += (desc.empty() ? "" : "+") + to_hex(term.coeff.bits) + "*x^(2^" +
                        std::to_string(term.index) + ")";
            }
            LinearizedPoly L = base + lin_compose(*ctx, p, trace);
            if (!permutes(*ctx, L, d) || !check_condition_ii(*ctx, L)) {
                continue;
            }
            const bool pp = is_permutation_exhaustive(build_g_thm3(ctx, L)).is_permutation();
            slots[idx] = LCandidate{idx, desc.empty() ? "0" : desc, std::move(L), pp};
        }
    });

    LSearchResult out;
    out.family = "L_note + P(RelTrace(x)), P over F_{q^k}^* at indices < tk: zero, singles, pairs";
    out.examined = family.size();
    for (auto& slot : slots) {
        if (slot) {
            out.accepted.push_back(std::move(*slot));
        }
    }
    return out;
}

}  // namespace permlab
