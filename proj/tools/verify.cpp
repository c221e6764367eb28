// Seeded property runner. Exit status: 0 all properties hold, 1 a property failed, 2 usage error.
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gkit/error.hpp"
#include "gkit/verify.hpp"

using namespace gkit;
using namespace gkit::verify;

namespace {

int usage(const std::string& msg) {
    std::cerr << "verify: " << msg << "\n";
    return 2;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::UsageError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorCode::UsageError, std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

// A counterexample record, either given directly or taken from a report.
json pick_record(const json& doc, const std::string& property) {
    if (doc.contains("instance")) return doc;
    if (!doc.contains("properties")) fail(ErrorCode::UsageError, "file is neither a report nor a counterexample");
    for (const auto& p : doc.at("properties")) {
        if (!property.empty() && p.at("name") != property) continue;
        if (!p.at("first_counterexample").is_null()) return p.at("first_counterexample");
    }
    fail(ErrorCode::UsageError, "no counterexample found in the report");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Property verification for finite Gorenstein group rings"};
    app.require_subcommand(0, 1);

    SuiteConfig cfg;
    std::vector<std::string> ring_texts;
    std::string out_path;
    app.add_option("--suite", cfg.suite, "ring, linalg, modules, fitting, biduals, complexes, stark, kolyvagin, limits or all");
    app.add_option("--seed", cfg.seed, "64-bit seed");
    app.add_option("--count", cfg.count, "instances per property and ring")->check(CLI::PositiveNumber);
    app.add_option("--ring", ring_texts, "p=<p>,m=<m>,g=<c1:c2:...> (repeatable; default grid if absent)");
    app.add_option("--bound", cfg.bound, "enumeration bound for brute-force oracles");
    app.add_option("--threads", cfg.threads, "worker threads (default GORENSTEIN_KIT_THREADS or all cores)");
    app.add_option("--out", out_path, "report path (stdout if absent)");

    auto* replay_cmd = app.add_subcommand("replay", "re-run a dumped counterexample");
    std::string in_path, property;
    uint64_t replay_bound = 65536;
    replay_cmd->add_option("--in", in_path, "report or counterexample JSON")->required();
    replay_cmd->add_option("--property", property, "property to replay when reading a report");
    replay_cmd->add_option("--bound", replay_bound, "enumeration bound");

    auto* list_cmd = app.add_subcommand("list", "list suites and properties");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (list_cmd->parsed()) {
            for (const auto& p : registry()) std::cout << p.name << "  " << p.anchor << "\n";
            return 0;
        }
        if (replay_cmd->parsed()) {
            json record = pick_record(load_json(in_path), property);
            Outcome o = replay(record, replay_bound);
            std::cout << record.at("property").get<std::string>() << ": " << (o.ok ? "holds" : "FAILS")
                      << (o.detail.empty() ? "" : " (" + o.detail + ")") << "\n";
            return o.ok ? 0 : 1;
        }
        for (const auto& t : ring_texts) cfg.rings.push_back(parse_ring_spec(t));
        RunResult res = run_suite(cfg);
        std::string text = res.report.dump(2) + "\n";
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            if (!out) return usage("cannot write " + out_path);
            out << text;
        }
        for (const auto& p : res.report.at("properties"))
            std::cerr << (p.at("failures").get<size_t>() ? "FAIL " : "ok   ") << p.at("name").get<std::string>() << "  "
                      << p.at("instances").get<size_t>() << " instances, " << p.at("failures").get<size_t>() << " failures\n";
        return res.failures ? 1 : 0;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::UsageError || e.code() == ErrorCode::ParseError) return usage(e.what());
        std::cerr << "verify: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        return usage(std::string("malformed input: ") + e.what());
    }
}
