#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permlab {

enum class CheckStatus { pass, fail };

/// Counterexample fields, in insertion order. Values are lowercase hex for
/// field elements and plain text otherwise.
using Counterexample = std::vector<std::pair<std::string, std::string>>;

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    Counterexample counterexample;  // empty on pass
    std::uint64_t count = 0;        // elements, twists or samples swept
    double millis = 0.0;

    [[nodiscard]] bool passed() const { return status == CheckStatus::pass; }
};

struct VerificationReport {
    std::string theorem;
    int t = 0;
    int k = 0;
    int m = 0;
    std::string modulus_hex;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    double millis = 0.0;

    [[nodiscard]] bool overall() const;
    /// "pass", "hypothesis-failure" (a check named hypothesis_* failed) or
    /// "theorem-failure".
    [[nodiscard]] std::string outcome() const;
    [[nodiscard]] const CheckResult* find(std::string_view name) const;
};

const char* to_string(CheckStatus s);

/// {theorem, t, k, m, modulus_hex, checks:[{name, status, counterexample?,
/// count, millis}], overall, seed}; status and overall are "pass"/"fail".
std::string to_json(const VerificationReport& report, int indent = 2);
std::string to_json(const std::vector<VerificationReport>& reports, int indent = 2);
/// Accepts a single report object or an array of them.
std::vector<VerificationReport> reports_from_json(std::string_view text);

inline constexpr const char* kCsvHeader = "theorem,t,k,overall,millis";
std::string to_csv_row(const VerificationReport& report);
/// Header line, one line per check, then an overall line.
std::string to_text(const VerificationReport& report);

}  // namespace permlab
