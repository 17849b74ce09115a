#pragma once

#include "permlab/constructions.hpp"
#include "permlab/pp_test.hpp"
#include "permlab/report.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace permlab {

struct ProofOptions {
    std::uint64_t seed = kDefaultSeed;
    /// Per-twist loops run in full when (#twists * 2^m) stays within this
    /// many iterations; otherwise `samples` seeded twists are drawn.
    std::uint64_t sweep_limit = std::uint64_t{1} << 24;
    std::uint64_t samples = 128;
    /// Pointwise identity checks sweep every x up to this degree, else
    /// `pointwise_samples` random x.
    int pointwise_full_limit = kMaterializeLimit;
    std::uint64_t pointwise_samples = 10000;
    /// verify_thm3: omit the bijection and character-sum checks when a
    /// hypothesis fails.
    bool skip_conclusion_on_hypothesis_failure = false;
};

/// S + S^(q^k) + S^(q^(2k)) vanishes: as a reduced linearized polynomial and
/// pointwise. `S` defaults to S_{2k}; pass a perturbed one to probe the check.
CheckResult check_s_trace_relation(const FieldCtx& ctx, const ProofOptions& opts = {});
CheckResult check_s_trace_relation(const FieldCtx& ctx, const LinearizedPoly& S,
                                   const ProofOptions& opts = {});

/// ker S_{2k} = F_{q^k}, image S_{2k} = trace-zero set (sizes q^k and
/// q^(2k)), gcd(1 + x + ... + x^(2k-1), x^(3k) + 1) = x^k + 1, and S_{2k}
/// maps F_{q^(2k)} intersected with the field into the trace-zero set. Set
/// equalities are exhaustive up to kMaterializeLimit and by subspace
/// dimension above.
CheckResult check_kernel_image(const FieldCtx& ctx);

/// Least c (by encoding) with c + c^(q^k) = a. Throws for a = 0 or a with
/// nonzero relative trace.
FieldElem decompose_a(const FieldCtx& ctx, FieldElem a);
/// All q^k solutions c, ascending.
std::vector<FieldElem> decomposition_coset(const FieldCtx& ctx, FieldElem a);

/// x^(1 + 2q^k + q^(2k)).
FieldElem reduced_power(const FieldCtx& ctx, FieldElem x);

/// Tr(a g(x)) = Tr(c s^(1 + 2q^k + q^(2k))) for every x, s = S_{2k}(x).
/// c defaults to decompose_a(a).
CheckResult check_trace_reduction(const FieldMap& g, FieldElem a,
                                  std::optional<FieldElem> c = std::nullopt);

/// Greedy F_{q^k}-basis (d1, d2) of the trace-zero set.
std::pair<FieldElem, FieldElem> trace_zero_basis(const FieldCtx& ctx);

/// Nonzero elements of the trace-zero set, ascending, and the full set.
std::vector<FieldElem> trace_zero_elements(const FieldCtx& ctx);

struct FactorizationSums {
    std::int64_t field_sum = 0;       // sum over the field of (-1)^Tr(a g(x))
    std::int64_t trace_zero_sum = 0;  // sum over trace-zero x of (-1)^Tr(c x^e)
    std::int64_t factor1 = 0;         // sum over u in F_{q^k} of (-1)^Tr(c d1^(q^k) u)
    std::int64_t factor2 = 0;
    FieldElem rel1;                   // Tr_{q^(3k)/q^k}(c d1^(q^k))
    FieldElem rel2;
};

FactorizationSums trace_zero_factorization_sums(const FieldMap& g, FieldElem a, FieldElem c);

/// field_sum = q^k * trace_zero_sum, trace_zero_sum = factor1 * factor2,
/// rel1 and rel2 not both zero, trace_zero_sum = 0.
CheckResult check_trace_zero_factorization(const FieldMap& g, FieldElem a,
                                           std::optional<FieldElem> c = std::nullopt);

/// Every step for x + S_{2k}^(q^(2k)) + S_{2k}^(q^k+3) over F_{4^(3k)}.
/// Requires a tower with t = 2.
VerificationReport verify_thm1(const CtxPtr& ctx, const ProofOptions& opts = {});

/// Hypotheses (i), (ii) and the conclusion for L + S_{2k}^(q^k+3).
VerificationReport verify_thm3(const CtxPtr& ctx, const LinearizedPoly& L, const ProofOptions& opts = {});

}  // namespace permlab
