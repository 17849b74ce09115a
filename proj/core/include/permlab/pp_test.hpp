#pragma once

#include "permlab/field_map.hpp"
#include "permlab/linearized.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace permlab {

enum class Verdict { permutation, not_permutation, probable_permutation };
enum class PPMethod { exhaustive, charsum_all, charsum_sample };

/// Two distinct inputs with the same image.
struct CollisionWitness {
    FieldElem x1;
    FieldElem x2;
    FieldElem y;
};

/// A nonzero twist whose character sum does not vanish.
struct TwistWitness {
    FieldElem a;
    std::int64_t sum = 0;
};

struct PPVerdict {
    Verdict verdict = Verdict::permutation;
    PPMethod method = PPMethod::exhaustive;
    std::variant<std::monostate, CollisionWitness, TwistWitness> witness;
    /// Elements swept (exhaustive) or twists a evaluated (character sums).
    std::uint64_t checks = 0;
    std::optional<std::uint64_t> seed;

    [[nodiscard]] bool is_permutation() const { return verdict != Verdict::not_permutation; }
};

const char* to_string(Verdict v);
const char* to_string(PPMethod m);
/// One-line summary including the witness, e.g. for CLI text output.
std::string describe(const PPVerdict& v);

/// Definitional bijection check over all 2^m inputs with a 2^m-bit seen set.
/// On failure the witness is the first colliding pair in enumeration order.
PPVerdict is_permutation_exhaustive(const FieldMap& f);

/// sum over x of (-1)^Tr(a f(x)), exact.
std::int64_t char_sum(const FieldMap& f, FieldElem a);

/// Character sums for every twist a in [0, 2^m), indexed by a.
std::vector<std::int64_t> char_sums_all(const FieldMap& f);

/// Largest m for which the all-twist criterion runs without an override.
inline constexpr int kCharSumAllLimit = 14;
inline constexpr std::uint64_t kDefaultSeed = 42;

struct CharSumMode {
    enum class Kind { all, sample } kind = Kind::all;
    std::uint64_t samples = 0;
    std::uint64_t seed = kDefaultSeed;
    /// Lifts the kCharSumAllLimit gate for Kind::all.
    bool allow_large = false;

    static CharSumMode all(bool allow_large = false) { return {Kind::all, 0, kDefaultSeed, allow_large}; }
    static CharSumMode sample(std::uint64_t n, std::uint64_t seed) { return {Kind::sample, n, seed, false}; }
};

/// Permutation criterion via character sums: f permutes iff every twist
/// a != 0 has a vanishing sum. Sample mode draws twists from a seeded
/// mt19937_64 as 1 + (draw mod (2^m - 1)) and can only conclude
/// probable_permutation. The witness is the first failing twist in
/// enumeration order (all) or draw order (sample).
PPVerdict pp_verdict_charsum(const FieldMap& f, const CharSumMode& mode);

/// Value of Tr(a f(x + y)) + Tr(a f(x)) when it is the same for every x.
std::optional<int> shift_check(const FieldMap& f, FieldElem a, FieldElem y);

/// First y of F_{q^k} (ascending) with Tr_{q^k/2}(y * Tr_{q^{3k}/q^k}(a)) = 1.
/// Throws when a has zero relative trace.
FieldElem find_case1_witness(FieldElem a, const FieldCtx& ctx);

/// Same with L(y) in place of y, for maps of the form L + S_{2k}^(q^k+3).
/// Requires L to map F_{q^k} into itself on the candidates tried.
FieldElem find_case1_witness(FieldElem a, const FieldCtx& ctx, const LinearizedPoly& L);

}  // namespace permlab
