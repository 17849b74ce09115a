#include "permlab/report.hpp"

#include "permlab/error.hpp"

#include <json.hpp>

#include <cstdio>

namespace permlab {

namespace {

using nlohmann::ordered_json;

std::string format_millis(double ms)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", ms);
    return buf;
}

ordered_json report_json(const VerificationReport& r)
{
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = to_string(c.status);
        if (!c.counterexample.empty()) {
            ordered_json ce = ordered_json::object();
            for (const auto& [key, value] : c.counterexample) {
                ce[key] = value;
            }
            jc["counterexample"] = std::move(ce);
        }
        jc["count"] = c.count;
        jc["millis"] = c.millis;
        checks.push_back(std::move(jc));
    }
    ordered_json j;
    j["theorem"] = r.theorem;
    j["t"] = r.t;
    j["k"] = r.k;
    j["m"] = r.m;
    j["modulus_hex"] = r.modulus_hex;
    j["checks"] = std::move(checks);
    j["overall"] = r.overall() ? "pass" : "fail";
    j["seed"] = r.seed;
    return j;
}

CheckStatus parse_status(const std::string& s)
{
    if (s == "pass") {
        return CheckStatus::pass;
    }
    if (s == "fail") {
        return CheckStatus::fail;
    }
    throw InvalidArgument("unknown check status '" + s + "'");
}

VerificationReport report_from(const ordered_json& j)
{
    VerificationReport r;
    r.theorem = j.at("theorem").get<std::string>();
    r.t = j.at("t").get<int>();
    r.k = j.at("k").get<int>();
    r.m = j.at("m").get<int>();
    r.modulus_hex = j.at("modulus_hex").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& jc : j.at("checks")) {
        CheckResult c;
        c.name = jc.at("name").get<std::string>();
        c.status = parse_status(jc.at("status").get<std::string>());
        if (auto it = jc.find("counterexample"); it != jc.end()) {
            for (const auto& [key, value] : it->items()) {
                c.counterexample.emplace_back(key, value.get<std::string>());
            }
        }
        c.count = jc.at("count").get<std::uint64_t>();
        c.millis = jc.at("millis").get<double>();
        r.millis += c.millis;
        r.checks.push_back(std::move(c));
    }
    if ((j.at("overall").get<std::string>() == "pass") != r.overall()) {
        throw InvalidArgument("report overall status disagrees with its checks");
    }
    return r;
}

}  // namespace

bool VerificationReport::overall() const
{
    for (const auto& c : checks) {
        if (!c.passed()) {
            return false;
        }
    }
    return true;
}

std::string VerificationReport::outcome() const
{
    if (overall()) {
        return "pass";
    }
    for (const auto& c : checks) {
        if (!c.passed() && c.name.starts_with("hypothesis_")) {
            return "hypothesis-failure";
        }
    }
    return "theorem-failure";
}

const CheckResult* VerificationReport::find(std::string_view name) const
{
    for (const auto& c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

const char* to_string(CheckStatus s)
{
    return s == CheckStatus::pass ? "pass" : "fail";
}

std::string to_json(const VerificationReport& report, int indent)
{
    return report_json(report).dump(indent);
}

std::string to_json(const std::vector<VerificationReport>& reports, int indent)
{
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        arr.push_back(report_json(r));
    }
    return arr.dump(indent);
}

std::vector<VerificationReport> reports_from_json(std::string_view text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed report JSON: ") + e.what());
    }
    std::vector<VerificationReport> out;
    try {
        if (j.is_array()) {
            for (const auto& item : j) {
                out.push_back(report_from(item));
            }
        } else {
            out.push_back(report_from(j));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("report JSON missing fields: ") + e.what());
    }
    return out;
}

std::string to_csv_row(const VerificationReport& report)
{
    return report.theorem + "," + std::to_string(report.t) + "," + std::to_string(report.k) + "," +
           (report.overall() ? "pass" : "fail") + "," + format_millis(report.millis);
}

std::string to_text(const VerificationReport& report)
{
    std::string out = report.theorem + " t=" + std::to_string(report.t) + " k=" + std::to_string(report.k) +
                      " m=" + std::to_string(report.m) + " modulus=" + report.modulus_hex +
                      " seed=" + std::to_string(report.seed) + "\n";
    for (const auto& c : report.checks) {
        out += "  " + std::string(to_string(c.status)) + "  " + c.name + "  count=" + std::to_string(c.count) +
               "  " + format_millis(c.millis) + " ms";
        for (const auto& [key, value] : c.counterexample) {
            out += "  " + key + "=" + value;
        }
        out += "\n";
    }
    out += "  overall: " + report.outcome() + " (" + format_millis(report.millis) + " ms)\n";
    return out;
}

}  // namespace permlab
