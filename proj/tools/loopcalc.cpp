#include "json_io.hpp"

#include "loopcalc/decompose.hpp"
#include "loopcalc/error.hpp"
#include "loopcalc/homotopy.hpp"
#include "loopcalc/normalize.hpp"
#include "loopcalc/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace loopcalc;
using io::json;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kVerifyFailed = 2 };

const std::vector<std::string> kSections{"tree", "factors", "series", "ranks"};

struct Options {
    std::vector<std::string> inputs;
    int cap = 30;
    std::vector<std::string> emit;
    std::string format = "json";
    std::string suite = "all";
    std::uint64_t seed = 0;
};

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string join(const json& series)
{
    std::string out;
    for (const auto& c : series)
        out += (out.empty() ? "" : " ") + (c.is_string() ? c.get<std::string>() : c.dump());
    return out;
}

int cmd_decompose(const Options& o)
{
    require(o.inputs.size() == 1, ErrorKind::Usage, "decompose takes exactly one --input");
    require(o.cap >= 2, ErrorKind::Usage, "--cap must be >= 2");
    const ManifoldSpec spec = io::spec_from_json(io::read_input(o.inputs[0]));
    const std::vector<std::string> emit = o.emit.empty() ? kSections : o.emit;
    auto wants = [&](const std::string& s) { return std::find(emit.begin(), emit.end(), s) != emit.end(); };

    const SpaceExpr expr = decompose(spec);
    const FactorList factors = normal_form(expr, o.cap);

    json report{{"spec", io::to_json(spec)}, {"cap", o.cap}};
    if (wants("tree"))
        report["tree"] = render(expr);
    if (wants("factors"))
        report["factors"] = io::to_json(factors);
    if (wants("series"))
        report["series"] = io::to_json(factor_series(factors));
    if (wants("ranks"))
        report["ranks"] = io::to_json(base_ranks(rational_ranks(factors)));

    if (o.format == "json") {
        print(report);
        return kOk;
    }
    std::cout << "spec:    " << report["spec"].dump() << "\n";
    if (wants("tree"))
        std::cout << "tree:    " << render(expr) << "\n";
    if (wants("factors"))
        std::cout << "factors: " << io::render_factors(factors) << (factors.truncated ? "  (truncated)" : "") << "\n";
    if (wants("series"))
        std::cout << "series:  " << join(report["series"]) << "\n";
    if (wants("ranks")) {
        std::cout << "ranks:  ";
        for (const auto& [q, r] : base_ranks(rational_ranks(factors)).ranks)
            std::cout << " pi_" << q << "=" << r;
        std::cout << "\n";
    }
    return kOk;
}

int cmd_equivalent(const Options& o)
{
    require(o.inputs.size() == 2, ErrorKind::Usage, "equivalent takes exactly two --input values");
    const ManifoldSpec a = io::spec_from_json(io::read_input(o.inputs[0]));
    const ManifoldSpec b = io::spec_from_json(io::read_input(o.inputs[1]));
    const bool eq = loop_equivalent(a, b);
    if (o.format == "json")
        print(json{{"equivalent", eq}});
    else
        std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
    return kOk;
}

int cmd_verify(const Options& o)
{
    const Suite suite = parse_suite(o.suite);
    const std::vector<CheckReport> reports = run_suite(suite, o.seed);
    json checks = json::array();
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    bool ok = true;
    for (const auto& r : reports) {
        checks.push_back(io::to_json(r));
        instances += r.instances;
        failures += r.failures;
        ok = ok && r.ok();
    }
    if (o.format == "json") {
        print(json{{"suite", o.suite},
                   {"seed", o.seed},
                   {"checks", checks},
                   {"instances", instances},
                   {"failures", failures}});
    }
    else {
        for (const auto& r : reports) {
            std::cout << (r.ok() ? "PASS " : "FAIL ") << r.check << "  instances=" << r.instances
                      << " failures=" << r.failures << "\n";
            if (r.counterexample)
                std::cout << "     first counterexample: " << *r.counterexample << "\n";
        }
    }
    return ok ? kOk : kVerifyFailed;
}

int report_error(const std::string& format, const std::string& kind, const std::string& message)
{
    if (format == "text")
        std::cerr << "error (" << kind << "): " << message << "\n";
    else
        print(json{{"error", {{"kind", kind}, {"message", message}}}});
    return kInvalid;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Loop-space decompositions of highly connected manifolds"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };

    auto* decompose_cmd = app.add_subcommand("decompose", "Decompose the loop space of a manifold spec");
    decompose_cmd->add_option("-i,--input", o.inputs, "Spec as inline JSON or @file")->required();
    decompose_cmd->add_option("--cap", o.cap, "Highest homological degree computed (>= 2)");
    decompose_cmd->add_option("--emit", o.emit, "Sections: tree,factors,series,ranks")
        ->delimiter(',')
        ->check(CLI::IsMember(kSections));
    add_format(decompose_cmd);

    auto* equivalent_cmd = app.add_subcommand("equivalent", "Decide whether two specs have equivalent loop spaces");
    equivalent_cmd->add_option("-i,--input", o.inputs, "Spec as inline JSON or @file (give twice)")->required();
    add_format(equivalent_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run property suites against independent oracles");
    verify_cmd->add_option("--suite", o.suite, "series, hm, ss, ranks or all")
        ->check(CLI::IsMember({"series", "hm", "ss", "ranks", "all"}));
    verify_cmd->add_option("--seed", o.seed, "Seed for randomized instances");
    add_format(verify_cmd);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        return report_error(o.format, "usage", e.what());
    }

    try {
        if (decompose_cmd->parsed())
            return cmd_decompose(o);
        if (equivalent_cmd->parsed())
            return cmd_equivalent(o);
        return cmd_verify(o);
    }
    catch (const Error& e) {
        return report_error(o.format, to_string(e.kind()), e.what());
    }
}
