#pragma once

#include "permlab/field_map.hpp"
#include "permlab/linearized.hpp"

#include <memory>
#include <string>
#include <vector>

namespace permlab {

using CtxPtr = std::shared_ptr<const FieldCtx>;

inline CtxPtr share(FieldCtx ctx)
{
    return std::make_shared<const FieldCtx>(std::move(ctx));
}

/// x + s^(q^(2k)) + s^(q^k + 3) with s = S_{2k}(x), q = 2^t. Materialized
/// when m <= kMaterializeLimit.
FieldMap build_g_thm1(const CtxPtr& ctx);

/// Frob^e after (identity + Frob^(2kt) after S_{2k}) with e = 2 + t(3k - 1),
/// i.e. (x + S_{2k}^(q^(2k)))^(4 q^(3k-1)) in reduced linearized form.
LinearizedPoly build_L_note(const FieldCtx& ctx);

/// L + L^(q^(2k)) == S_{2k}^4 as reduced coefficient vectors.
bool check_condition_ii(const FieldCtx& ctx, const LinearizedPoly& L);

/// L(x) + s^(q^k + 3) with s = S_{2k}(x).
FieldMap build_g_thm3(const CtxPtr& ctx, const LinearizedPoly& L);

/// The map x -> L(x).
FieldMap linear_map(const CtxPtr& ctx, const LinearizedPoly& L, std::string name);

/// Relative trace onto F_{q^k} as a linearized polynomial: x + x^(q^k) + x^(q^(2k)).
LinearizedPoly rel_trace_poly(const FieldCtx& ctx);

/// Largest m accepted by search_L_candidates.
inline constexpr int kSearchLimit = 18;

struct LCandidate {
    /// Position in the deterministic family enumeration; 0 is M = 0.
    std::size_t index = 0;
    /// Description of P, e.g. "0" or "3*x^(2^1)+5*x^(2^4)".
    std::string perturbation;
    LinearizedPoly L;
    /// build_g_thm3(L) passed the exhaustive bijection check.
    bool pp_verified = false;
};

struct LSearchResult {
    std::string family;
    std::size_t examined = 0;
    std::vector<LCandidate> accepted;
};

/// Explores L = L_note + P after RelTrace, where P is a 2-linearized
/// polynomial with coefficients in F_{q^k}^* at exponent indices below tk:
/// first P = 0, then every single term (index ascending, coefficient
/// ascending), then every pair of terms. Such M have image in F_{q^k}, so
/// condition (ii) is unchanged. At most `budget` candidates are examined;
/// those satisfying (i) and (ii) are returned in family order, each with an
/// exhaustive bijection check of its g.
LSearchResult search_L_candidates(const CtxPtr& ctx, std::size_t budget);

}  // namespace permlab
