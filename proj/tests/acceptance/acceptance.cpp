// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <permlab/constructions.hpp>
#include <permlab/pp_test.hpp>
#include <permlab/proof_checks.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

using namespace permlab;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

std::vector<std::pair<int, int>> towers_up_to(int max_m)
{
    std::vector<std::pair<int, int>> out;
    for (int t = 1; 3 * t <= max_m; ++t) {
        for (int k = 1; 3 * t * k <= max_m; ++k) {
            out.emplace_back(t, k);
        }
    }
    return out;
}

bool all_zero_sums(const FieldMap& g)
{
    const auto sums = char_sums_all(g);
    return std::all_of(sums.begin() + 1, sums.end(), [](auto s) { return s == 0; });
}

Outcome thm1_full(int k)
{
    const auto g = build_g_thm1(share(FieldCtx::tower(2, k)));
    const bool bij = is_permutation_exhaustive(g).is_permutation();
    const bool sums = all_zero_sums(g);
    return {bij && sums, "m=" + std::to_string(3 * 2 * k) + " bijection=" + (bij ? "yes" : "no") +
                             " sums=" + std::to_string(g.ctx().size() - 1) + (sums ? " all zero" : " NONZERO")};
}

Outcome criterion1() { return thm1_full(1); }
Outcome criterion2() { return thm1_full(2); }

Outcome criterion3()
{
    const auto g = build_g_thm1(share(FieldCtx::tower(2, 3)));
    const bool bij = is_permutation_exhaustive(g).is_permutation();
    const auto v = pp_verdict_charsum(g, CharSumMode::sample(128, kDefaultSeed));
    const bool sums = v.verdict == Verdict::probable_permutation && v.checks == 128;
    return {bij && sums, std::string("m=18 bijection=") + (bij ? "yes" : "no") + " sampled sums=" +
                             std::to_string(v.checks) + (sums ? " all zero" : " NONZERO") + " seed=42"};
}

Outcome criterion4()
{
    Outcome o;
    for (auto [t, k] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 1}, std::pair{2, 2},
                        std::pair{3, 1}}) {
        const auto ctx = share(FieldCtx::tower(t, k));
        const auto L = build_L_note(*ctx);
        const bool i = static_cast<bool>(permutes(*ctx, L, t * k));
        const bool ii = check_condition_ii(*ctx, L);
        const bool bij = is_permutation_exhaustive(build_g_thm3(ctx, L)).is_permutation();
        if (!(i && ii && bij)) {
            o.ok = false;
            o.detail += "(" + std::to_string(t) + "," + std::to_string(k) + ") failed ";
        }
    }
    if (o.ok) {
        o.detail = "6 towers: (i), (ii) and bijection hold";
    }
    return o;
}

Outcome criterion5()
{
    Outcome o;
    int towers = 0;
    for (auto [t, k] : towers_up_to(18)) {
        const auto ctx = FieldCtx::tower(t, k);
        const int d = t * k;
        const auto S = s_2k(ctx);
        LinearizedPoly sum = S;
        for (int j = 1; j < 3; ++j) {
            sum = sum + lin_compose(ctx, LinearizedPoly::frobenius_power(ctx.m(), 2LL * d * j), S);
        }
        bool ok = sum.is_zero();
        if (ctx.m() <= 12) {
            ok = ok && check_s_trace_relation(ctx).passed();
        }
        o.ok = o.ok && ok;
        ++towers;
    }
    o.detail = std::to_string(towers) + " towers with m <= 18; pointwise for m <= 12";
    return o;
}

Outcome criterion6()
{
    Outcome o;
    int towers = 0;
    for (auto [t, k] : towers_up_to(18)) {
        o.ok = o.ok && check_kernel_image(FieldCtx::tower(t, k)).passed();
        ++towers;
    }
    o.detail = std::to_string(towers) + " towers with m <= 18";
    return o;
}

Outcome criterion7()
{
    Outcome o;
    for (int k = 1; k <= 8; ++k) {
        const auto g = poly_gcd(BinaryPolynomial::all_ones(2 * k),
                                BinaryPolynomial::monomial(3 * k) + BinaryPolynomial::from_bits(1));
        o.ok = o.ok && g == BinaryPolynomial::monomial(k) + BinaryPolynomial::from_bits(1);
    }
    o.detail = "k = 1..8";
    return o;
}

Outcome criterion8()
{
    const auto ctx = share(FieldCtx::tower(2, 1));
    const auto g = build_g_thm1(ctx);
    Outcome o;
    int case1 = 0;
    int case2 = 0;
    for (std::uint32_t av = 1; av < ctx->size(); ++av) {
        const FieldElem a{av};
        if (!ctx->rel_trace(a, 2).is_zero()) {
            const FieldElem y = find_case1_witness(a, *ctx);
            o.ok = o.ok && shift_check(g, a, y) == std::optional<int>{1};
            ++case1;
            continue;
        }
        for (auto c : decomposition_coset(*ctx, a)) {
            const auto sums = trace_zero_factorization_sums(g, a, c);
            o.ok = o.ok && check_trace_reduction(g, a, c).passed() &&
                   check_trace_zero_factorization(g, a, c).passed() &&
                   !(sums.rel1.is_zero() && sums.rel2.is_zero());
        }
        ++case2;
    }
    o.detail = std::to_string(case1) + " case-1 twists, " + std::to_string(case2) +
               " case-2 twists with full coset of c";
    return o;
}

Outcome criterion9()
{
    Outcome o;
    int compared = 0;
    int mismatches = 0;
    auto compare = [&](const FieldMap& f) {
        const bool ex = is_permutation_exhaustive(f).is_permutation();
        const bool cs = pp_verdict_charsum(f, CharSumMode::all()).is_permutation();
        mismatches += ex != cs ? 1 : 0;
        ++compared;
        return ex;
    };

    std::mt19937_64 rng(kDefaultSeed);
    const auto f16 = share(FieldCtx::plain(4));
    for (int i = 0; i < 200; ++i) {
        std::vector<std::uint32_t> table(16);
        std::iota(table.begin(), table.end(), 0U);
        if (i % 2 == 0) {
            std::shuffle(table.begin(), table.end(), rng);
        } else {
            for (auto& v : table) {
                v = static_cast<std::uint32_t>(rng() % 16);
            }
        }
        compare(FieldMap::from_table("random", f16, std::move(table)));
    }

    int negatives = 0;
    for (auto [t, k] : towers_up_to(12)) {
        const auto ctx = share(FieldCtx::tower(t, k));
        if (t == 2) {
            compare(build_g_thm1(ctx));
        }
        compare(linear_map(ctx, build_L_note(*ctx), "L-note"));
        compare(build_g_thm3(ctx, build_L_note(*ctx)));
        // Negative controls: S_2k has a kernel, and g-thm3 with the identity.
        negatives += compare(linear_map(ctx, s_2k(*ctx), "S_2k")) ? 0 : 1;
        negatives += compare(build_g_thm3(ctx, LinearizedPoly::identity(ctx->m()))) ? 0 : 1;
    }
    o.ok = mismatches == 0 && negatives > 0;
    o.detail = std::to_string(compared) + " maps, " + std::to_string(mismatches) + " mismatches, " +
               std::to_string(negatives) + " negative controls";
    return o;
}

Outcome criterion10()
{
    const auto g = build_g_thm1(share(FieldCtx::tower(2, 1)));
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cases;
    for (std::uint32_t x = 0; x < 64; ++x) {
        for (std::uint32_t y = 0; y < 64; ++y) {
            if (y != g(FieldElem{x}).bits) {
                cases.emplace_back(x, y);
            }
        }
    }
    std::mt19937_64 rng(kDefaultSeed);
    std::shuffle(cases.begin(), cases.end(), rng);
    cases.resize(500);
    int flipped = 0;
    for (auto [x, y] : cases) {
        const auto mutated = g.with_entry(FieldElem{x}, FieldElem{y});
        const bool ex = !is_permutation_exhaustive(mutated).is_permutation();
        const bool cs = !pp_verdict_charsum(mutated, CharSumMode::all()).is_permutation();
        flipped += ex && cs ? 1 : 0;
    }
    return {flipped == 500, std::to_string(flipped) + "/500 mutations detected by both methods"};
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
        double budget_s;
    };
    const std::vector<Criterion> criteria{
        {1, "g permutes F_64, all twists sum to 0", criterion1, 0.1},
        {2, "g permutes F_4096, all twists sum to 0", criterion2, 60},
        {3, "g permutes F_262144, sampled twists sum to 0", criterion3, 120},
        {4, "L_note hypotheses and bijection on six towers", criterion4, 60},
        {5, "S_2k relative-trace identity", criterion5, 0},
        {6, "kernel and image of S_2k", criterion6, 0},
        {7, "gcd identity over F2", criterion7, 0},
        {8, "case analysis at q = 4, k = 1", criterion8, 0},
        {9, "exhaustive and character-sum verdicts agree", criterion9, 0},
        {10, "single-entry mutations are detected", criterion10, 0},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        bool ok = o.ok;
        if (c.budget_s > 0 && secs > c.budget_s) {
            ok = false;
            o.detail += " (over budget " + std::to_string(c.budget_s) + " s)";
        }
        failures += ok ? 0 : 1;
        std::printf("%s criterion %2d: %s: %s [%.3f s]\n", ok ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(),
                    secs);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
