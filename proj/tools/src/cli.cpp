#include "cli.hpp"

#include <permlab/constructions.hpp>
#include <permlab/error.hpp>
#include <permlab/hex.hpp>
#include <permlab/modulus_file.hpp>
#include <permlab/pp_test.hpp>
#include <permlab/proof_checks.hpp>
#include <permlab/report.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace permlab::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Bad flags or inputs; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string t;  // empty: command default
    std::string k = "1";
    std::string modulus_file;
    std::string output;
    std::string format = "text";
    std::uint64_t seed = kDefaultSeed;
};

void add_common(CLI::App& sub, Common& c, bool with_tower = true)
{
    if (with_tower) {
        sub.add_option("--t", c.t, "subfield degree t (q = 2^t); value or range like 1..3");
        sub.add_option("--k", c.k, "tower parameter k; value or range like 1..3")->capture_default_str();
    }
    sub.add_option("--modulus-file", c.modulus_file, "override moduli, one m:hex per line");
    sub.add_option("--output", c.output, "write results to this file instead of stdout");
    sub.add_option("--format", c.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    sub.add_option("--seed", c.seed, "seed for sampled twists")->capture_default_str();
}

std::optional<ModulusOverrides> load_overrides(const Common& c)
{
    if (c.modulus_file.empty()) {
        return std::nullopt;
    }
    return ModulusOverrides::load(c.modulus_file);
}

std::optional<BinaryPolynomial> override_for(const std::optional<ModulusOverrides>& o, int m)
{
    return o ? o->lookup(m) : std::nullopt;
}

std::vector<std::pair<int, int>> towers(const Common& c, const std::string& default_t)
{
    const auto ts = parse_range(c.t.empty() ? default_t : c.t);
    const auto ks = parse_range(c.k);
    std::vector<std::pair<int, int>> out;
    for (int t : ts) {
        for (int k : ks) {
            if (3 * t * k > kMaxDegree) {
                throw ConfigError("tower t=" + std::to_string(t) + " k=" + std::to_string(k) + " has m=" +
                                  std::to_string(3 * t * k) + " > " + std::to_string(kMaxDegree));
            }
            out.emplace_back(t, k);
        }
    }
    return out;
}

CtxPtr make_tower(int t, int k, const std::optional<ModulusOverrides>& o)
{
    return share(FieldCtx::tower(t, k, override_for(o, 3 * t * k)));
}

LinearizedPoly parse_L(const std::string& spec, const FieldCtx& ctx)
{
    if (spec == "builtin:L-note" || spec == "L-note") {
        return build_L_note(ctx);
    }
    if (spec.rfind("lin[", 0) == 0) {
        return LinearizedPoly::parse(spec, ctx);
    }
    throw ConfigError("unknown L '" + spec + "' (expected builtin:L-note or lin[...])");
}

bool is_builtin(const std::string& spec)
{
    return spec.rfind("builtin:", 0) == 0;
}

FieldMap builtin_map(const std::string& spec, const CtxPtr& ctx)
{
    const std::string name = spec.substr(8);
    if (name == "g-thm1") {
        if (ctx->require_tower().t != 2) {
            throw ConfigError("builtin:g-thm1 requires q = 4 (t = 2)");
        }
        return build_g_thm1(ctx);
    }
    if (name == "L-note") {
        return linear_map(ctx, build_L_note(*ctx), "L-note");
    }
    if (name == "g-thm3") {
        return build_g_thm3(ctx, build_L_note(*ctx));
    }
    if (name.rfind("g-thm3(", 0) == 0 && name.back() == ')') {
        return build_g_thm3(ctx, parse_L(name.substr(7, name.size() - 8), *ctx));
    }
    throw ConfigError("unknown builtin map '" + spec + "'");
}

FieldMap table_map(const std::string& path, const std::optional<ModulusOverrides>& o)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open table file '" + path + "'");
    }
    auto table = read_hex_table(in);
    const int m = std::countr_zero(table.size());
    return FieldMap::from_table(path, share(FieldCtx::plain(m, override_for(o, m))), std::move(table));
}

/// One map per requested tower for builtins; a single map for a table file.
std::vector<FieldMap> load_maps(const std::string& spec, const Common& c)
{
    const auto overrides = load_overrides(c);
    std::vector<FieldMap> maps;
    if (!is_builtin(spec)) {
        maps.push_back(table_map(spec, overrides));
        return maps;
    }
    const std::string default_t = spec == "builtin:g-thm1" ? "2" : "1";
    for (auto [t, k] : towers(c, default_t)) {
        maps.push_back(builtin_map(spec, make_tower(t, k, overrides)));
    }
    return maps;
}

CharSumMode parse_mode(const std::string& text, std::uint64_t seed, bool allow_large)
{
    if (text == "all") {
        return CharSumMode::all(allow_large);
    }
    if (text.rfind("sample:", 0) == 0) {
        std::vector<std::string> parts;
        std::stringstream ss(text.substr(7));
        for (std::string part; std::getline(ss, part, ':');) {
            parts.push_back(part);
        }
        try {
            if (parts.size() == 1 || parts.size() == 2) {
                const auto n = std::stoull(parts[0]);
                const auto s = parts.size() == 2 ? std::stoull(parts[1]) : seed;
                if (n > 0) {
                    return CharSumMode::sample(n, s);
                }
            }
        } catch (const std::logic_error&) {
        }
    }
    throw ConfigError("bad --mode '" + text + "' (expected all or sample:n[:seed])");
}

/// Writes `content` to stdout, or to `path` through a temporary file renamed
/// into place so readers never see a partial file.
void emit(std::ostream& out, const std::string& path, const std::string& content)
{
    if (path.empty()) {
        out << content;
        return;
    }
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw ConfigError("cannot write '" + tmp.string() + "'");
        }
        f << content;
        f.flush();
        if (!f) {
            throw ConfigError("write failed for '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw ConfigError("cannot rename into '" + path + "': " + ec.message());
    }
}

std::string render_reports(const std::vector<VerificationReport>& reports, const std::string& format)
{
    if (format == "json") {
        return to_json(reports) + "\n";
    }
    std::string out;
    if (format == "csv") {
        out = std::string(kCsvHeader) + "\n";
        for (const auto& r : reports) {
            out += to_csv_row(r) + "\n";
        }
        return out;
    }
    for (const auto& r : reports) {
        out += to_text(r);
    }
    return out;
}

int exit_for(bool ok)
{
    return ok ? kExitPass : kExitFailure;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
    Common common;
    std::string theorem;
    std::string L = "builtin:L-note";
    std::string mode = "all";
    bool skip_conclusion = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    ProofOptions opts;
    opts.seed = a.common.seed;
    opts.skip_conclusion_on_hypothesis_failure = a.skip_conclusion;
    const CharSumMode mode = parse_mode(a.mode, a.common.seed, false);
    if (mode.kind == CharSumMode::Kind::sample) {
        opts.sweep_limit = 0;
        opts.samples = mode.samples;
        opts.seed = mode.seed;
    }
    const auto overrides = load_overrides(a.common);

    std::vector<std::pair<std::string, std::pair<int, int>>> jobs;
    if (a.theorem.empty()) {
        for (int k : {1, 2}) {
            jobs.push_back({"thm1", {2, k}});
        }
        for (auto tk : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}, std::pair{1, 3}}) {
            jobs.push_back({"thm3", tk});
        }
    } else {
        const auto list = towers(a.common, a.theorem == "thm1" ? "2" : "1");
        for (auto tk : list) {
            if (a.theorem == "thm1" && tk.first != 2) {
                throw ConfigError("thm1 requires q = 4, i.e. --t 2 (got t=" + std::to_string(tk.first) + ")");
            }
            jobs.push_back({a.theorem, tk});
        }
    }

    std::vector<VerificationReport> reports;
    for (const auto& [theorem, tk] : jobs) {
        const auto ctx = make_tower(tk.first, tk.second, overrides);
        reports.push_back(theorem == "thm1" ? verify_thm1(ctx, opts) : verify_thm3(ctx, parse_L(a.L, *ctx), opts));
    }
    emit(out, a.common.output, render_reports(reports, a.common.format));
    return exit_for(std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.overall(); }));
}

// pptest ---------------------------------------------------------------------

struct PPTestArgs {
    Common common;
    std::string map;
    std::string method = "exhaustive";
    std::string mode = "all";
    bool allow_large = false;
    std::string export_path;
};

Json verdict_json(const PPVerdict& v)
{
    Json j;
    j["method"] = to_string(v.method);
    j["verdict"] = to_string(v.verdict);
    j["checks"] = v.checks;
    if (v.seed) {
        j["seed"] = *v.seed;
    }
    if (const auto* c = std::get_if<CollisionWitness>(&v.witness)) {
        j["witness"] = {{"x1", to_hex(c->x1.bits)}, {"x2", to_hex(c->x2.bits)}, {"y", to_hex(c->y.bits)}};
    } else if (const auto* t = std::get_if<TwistWitness>(&v.witness)) {
        j["witness"] = {{"a", to_hex(t->a.bits)}, {"sum", t->sum}};
    }
    return j;
}

int cmd_pptest(const PPTestArgs& a, std::ostream& out)
{
    const CharSumMode mode = parse_mode(a.mode, a.common.seed, a.allow_large);
    auto maps = load_maps(a.map, a.common);
    if (!a.export_path.empty()) {
        if (maps.size() != 1) {
            throw ConfigError("--export needs exactly one map (single --t and --k)");
        }
        std::ostringstream table;
        write_hex_table(table, maps.front());
        emit(out, a.export_path, table.str());
    }

    bool ok = true;
    Json results = Json::array();
    std::string text;
    for (const auto& f : maps) {
        std::vector<PPVerdict> verdicts;
        if (a.method != "charsum") {
            verdicts.push_back(is_permutation_exhaustive(f));
        }
        if (a.method != "exhaustive") {
            verdicts.push_back(pp_verdict_charsum(f, mode));
        }
        const bool agree = verdicts.front().is_permutation() == verdicts.back().is_permutation();
        ok = ok && agree && std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.is_permutation(); });

        Json entry;
        entry["map"] = f.name();
        entry["m"] = f.ctx().m();
        entry["modulus_hex"] = f.ctx().modulus().to_hex();
        entry["results"] = Json::array();
        for (const auto& v : verdicts) {
            entry["results"].push_back(verdict_json(v));
            text += f.name() + " m=" + std::to_string(f.ctx().m()) + ": " + describe(v) + "\n";
        }
        if (verdicts.size() == 2) {
            entry["agree"] = agree;
            text += f.name() + std::string(agree ? ": methods agree\n" : ": METHODS DISAGREE\n");
        }
        results.push_back(std::move(entry));
    }
    if (a.common.format == "json") {
        emit(out, a.common.output, results.dump(2) + "\n");
    } else if (a.common.format == "csv") {
        std::string csv = "map,m,method,verdict,checks\n";
        for (const auto& e : results) {
            for (const auto& r : e["results"]) {
                csv += e["map"].get<std::string>() + "," + std::to_string(e["m"].get<int>()) + "," +
                       r["method"].get<std::string>() + "," + r["verdict"].get<std::string>() + "," +
                       std::to_string(r["checks"].get<std::uint64_t>()) + "\n";
            }
        }
        emit(out, a.common.output, csv);
    } else {
        emit(out, a.common.output, text);
    }
    return exit_for(ok);
}

// charsum --------------------------------------------------------------------

struct CharSumArgs {
    Common common;
    std::string map;
    std::string a;
};

int cmd_charsum(const CharSumArgs& a, std::ostream& out)
{
    const auto parsed = parse_hex(a.a);
    if (!parsed) {
        throw ConfigError("bad --a '" + a.a + "' (expected hex)");
    }
    Json results = Json::array();
    std::string text;
    for (const auto& f : load_maps(a.map, a.common)) {
        const FieldElem elem = f.ctx().elem(*parsed);
        const auto sum = char_sum(f, elem);
        results.push_back({{"map", f.name()}, {"m", f.ctx().m()}, {"a", to_hex(elem.bits)}, {"sum", sum}});
        text += f.name() + " m=" + std::to_string(f.ctx().m()) + " a=" + to_hex(elem.bits) +
                " sum=" + std::to_string(sum) + "\n";
    }
    emit(out, a.common.output, a.common.format == "json" ? results.dump(2) + "\n" : text);
    return kExitPass;
}

// search-L -------------------------------------------------------------------

struct SearchArgs {
    Common common;
    std::size_t budget = 256;
};

int cmd_search(const SearchArgs& a, std::ostream& out)
{
    const auto overrides = load_overrides(a.common);
    bool ok = true;
    Json results = Json::array();
    std::string text;
    for (auto [t, k] : towers(a.common, "1")) {
        const auto ctx = make_tower(t, k, overrides);
        if (ctx->m() > kSearchLimit) {
            throw ConfigError("search-L is limited to m <= " + std::to_string(kSearchLimit) + " (t=" +
                              std::to_string(t) + " k=" + std::to_string(k) + " gives m=" +
                              std::to_string(ctx->m()) + ")");
        }
        const auto res = search_L_candidates(ctx, a.budget);
        Json entry{{"t", t}, {"k", k}, {"m", ctx->m()}, {"family", res.family}, {"examined", res.examined}};
        entry["candidates"] = Json::array();
        text += "t=" + std::to_string(t) + " k=" + std::to_string(k) + " m=" + std::to_string(ctx->m()) +
                " family=" + res.family + " examined=" + std::to_string(res.examined) +
                " accepted=" + std::to_string(res.accepted.size()) + "\n";
        for (const auto& c : res.accepted) {
            ok = ok && c.pp_verified;
            entry["candidates"].push_back({{"index", c.index},
                                           {"perturbation", c.perturbation},
                                           {"L", c.L.to_text()},
                                           {"pp_verified", c.pp_verified}});
            text += "  " + std::to_string(c.index) + " P=" + c.perturbation + " " + c.L.to_text() + " " +
                    (c.pp_verified ? "pp-verified" : "NOT-PP") + "\n";
        }
        results.push_back(std::move(entry));
    }
    emit(out, a.common.output, a.common.format == "json" ? results.dump(2) + "\n" : text);
    return exit_for(ok);
}

// field-info -----------------------------------------------------------------

struct InfoArgs {
    Common common;
    int m = 0;
};

int cmd_field_info(const InfoArgs& a, std::ostream& out)
{
    const auto overrides = load_overrides(a.common);
    std::vector<CtxPtr> ctxs;
    if (a.m > 0) {
        ctxs.push_back(share(FieldCtx::plain(a.m, override_for(overrides, a.m))));
    } else {
        for (auto [t, k] : towers(a.common, "1")) {
            ctxs.push_back(make_tower(t, k, overrides));
        }
    }
    Json results = Json::array();
    std::string text;
    for (const auto& ctx : ctxs) {
        Json e{{"m", ctx->m()},
               {"modulus_hex", ctx->modulus().to_hex()},
               {"modulus", ctx->modulus().to_string()},
               {"trace_mask", to_hex(ctx->trace_mask())}};
        if (const auto& tw = ctx->tower()) {
            const auto L = build_L_note(*ctx);
            e["t"] = tw->t;
            e["k"] = tw->k;
            e["q"] = 1 << tw->t;
            e["S_2k"] = s_2k(*ctx).to_text();
            e["L_note"] = L.to_text();
            e["L_note_permutes_subfield"] = static_cast<bool>(permutes(*ctx, L, tw->sub()));
            e["L_note_condition_ii"] = check_condition_ii(*ctx, L);
        }
        for (const auto& [key, value] : e.items()) {
            text += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
        }
        text += "\n";
        results.push_back(std::move(e));
    }
    emit(out, a.common.output, a.common.format == "json" ? results.dump(2) + "\n" : text);
    return kExitPass;
}

}  // namespace

std::vector<int> parse_range(const std::string& text)
{
    std::set<int> values;
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used == 0 || used != s.size() || v < 1) {
            throw ConfigError("bad range '" + text + "'");
        }
        return v;
    };
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) {
        const auto dots = part.find("..");
        if (dots == std::string::npos) {
            values.insert(to_int(part));
            continue;
        }
        const int lo = to_int(part.substr(0, dots));
        const int hi = to_int(part.substr(dots + 2));
        if (hi < lo || hi - lo > kMaxDegree) {
            throw ConfigError("bad range '" + text + "'");
        }
        for (int v = lo; v <= hi; ++v) {
            values.insert(v);
        }
    }
    if (values.empty()) {
        throw ConfigError("empty range '" + text + "'");
    }
    return {values.begin(), values.end()};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Permutation polynomial verification over GF(2^m)", "permlab"};
    app.require_subcommand(0, 1);

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "verify a theorem on concrete towers (default: smoke suite)");
    v->add_option("theorem", verify.theorem, "thm1 or thm3; omit for the default suite")
        ->check(CLI::IsMember({"thm1", "thm3"}));
    add_common(*v, verify.common);
    v->add_option("--L", verify.L, "L for thm3: builtin:L-note or lin[i:hex,...]")->capture_default_str();
    v->add_option("--mode", verify.mode, "twist sweep: all or sample:n[:seed]")->capture_default_str();
    v->add_flag("--skip-on-hypothesis-failure", verify.skip_conclusion,
                "skip conclusion checks when a hypothesis fails");

    PPTestArgs pp;
    auto* p = app.add_subcommand("pptest", "decide whether a map permutes the field");
    add_common(*p, pp.common);
    p->add_option("--map", pp.map, "builtin:g-thm1, builtin:L-note, builtin:g-thm3(L) or a table file")->required();
    p->add_option("--method", pp.method, "exhaustive, charsum or both")
        ->check(CLI::IsMember({"exhaustive", "charsum", "both"}))
        ->capture_default_str();
    p->add_option("--mode", pp.mode, "character-sum twists: all or sample:n[:seed]")->capture_default_str();
    p->add_flag("--allow-large", pp.allow_large, "allow all-twist sums above m = 14");
    p->add_option("--export", pp.export_path, "also write the map as an x:gx hex table");

    CharSumArgs cs;
    auto* c = app.add_subcommand("charsum", "character sum of a map at one twist a");
    add_common(*c, cs.common);
    c->add_option("--map", cs.map, "builtin map or table file")->required();
    c->add_option("--a", cs.a, "twist a in hex")->required();

    SearchArgs search;
    auto* s = app.add_subcommand("search-L", "search perturbations of L_note satisfying both hypotheses");
    add_common(*s, search.common);
    s->add_option("--budget", search.budget, "family members to examine")->capture_default_str();

    InfoArgs info;
    auto* f = app.add_subcommand("field-info", "describe a field or tower");
    add_common(*f, info.common);
    f->add_option("--m", info.m, "plain field degree instead of a tower");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitConfig;
    }

    try {
        if (*p) {
            return cmd_pptest(pp, out);
        }
        if (*c) {
            return cmd_charsum(cs, out);
        }
        if (*s) {
            return cmd_search(search, out);
        }
        if (*f) {
            return cmd_field_info(info, out);
        }
        return cmd_verify(verify, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace permlab::cli
