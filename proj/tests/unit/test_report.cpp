#include <permlab/report.hpp>

#include <doctest.h>

#include <stdexcept>

using namespace permlab;

namespace {

VerificationReport sample_report()
{
    VerificationReport r;
    r.theorem = "thm3";
    r.t = 1;
    r.k = 2;
    r.m = 6;
    r.modulus_hex = "43";
    r.seed = 42;
    r.checks.push_back({"hypothesis_i", CheckStatus::pass, {}, 6, 0.5});
    r.checks.push_back({"hypothesis_ii", CheckStatus::fail, {{"index", "2"}, {"lhs", "1"}, {"rhs", "0"}}, 6, 0.25});
    r.millis = 0.75;
    return r;
}

}  // namespace

TEST_CASE("outcome classification")
{
    auto r = sample_report();
    CHECK_FALSE(r.overall());
    CHECK(r.outcome() == "hypothesis-failure");
    r.checks[1].status = CheckStatus::pass;
    CHECK(r.outcome() == "pass");
    r.checks.push_back({"bijection_exhaustive", CheckStatus::fail, {{"x1", "0"}}, 1, 0});
    CHECK(r.outcome() == "theorem-failure");
    CHECK(r.find("bijection_exhaustive") != nullptr);
    CHECK(r.find("missing") == nullptr);
}

TEST_CASE("JSON round trip")
{
    const auto r = sample_report();
    const auto text = to_json(r);
    CHECK(text.find("\"overall\": \"fail\"") != std::string::npos);
    CHECK(text.find("\"counterexample\"") != std::string::npos);

    const auto back = reports_from_json(text);
    REQUIRE(back.size() == 1);
    CHECK(back[0].theorem == "thm3");
    CHECK(back[0].modulus_hex == "43");
    CHECK(back[0].seed == 42);
    REQUIRE(back[0].checks.size() == 2);
    CHECK(back[0].checks[1].counterexample == r.checks[1].counterexample);
    CHECK(back[0].checks[0].counterexample.empty());
    CHECK(back[0].millis == doctest::Approx(0.75));

    const auto arr = reports_from_json(to_json(std::vector{r, r}));
    CHECK(arr.size() == 2);
}

TEST_CASE("JSON rejects an inconsistent overall")
{
    auto text = to_json(sample_report());
    const auto pos = text.find("\"overall\": \"fail\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 17, "\"overall\": \"pass\"");
    CHECK_THROWS(reports_from_json(text));
    CHECK_THROWS(reports_from_json("{"));
}

TEST_CASE("CSV and text output")
{
    const auto r = sample_report();
    CHECK(std::string(kCsvHeader) == "theorem,t,k,overall,millis");
    CHECK(to_csv_row(r) == "thm3,1,2,fail,0.750");
    const auto text = to_text(r);
    CHECK(text.find("hypothesis_ii") != std::string::npos);
    CHECK(text.find("overall: hypothesis-failure") != std::string::npos);
}
