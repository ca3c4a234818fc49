// Command-line front end: `run <file>` and `verify <suite>`.
#include <cstdint>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "shintani/jobs.hpp"

namespace sj = shintani::jobs;

namespace {

int emit(const sj::Outcome& o, const std::string& out_path)
{
    const std::string text = sj::render(o.doc);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return sj::Computation;
        }
        f << text;
    }
    if (o.exit_code == sj::Schema && o.doc.contains("error"))
        std::cerr << "schema error: " << o.doc["error"]["message"].get<std::string>() << "\n";
    return o.exit_code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact partial zeta values of totally real fields via Shintani cocycles"};
    app.require_subcommand(1);

    std::string file, out, suite;
    std::uint64_t seed = 1;
    bool parallel = false, timings = false;

    auto* run = app.add_subcommand("run", "Execute a JSON or TOML job file");
    run->add_option("file", file, "Job file (.json or .toml)")->required();
    run->add_flag("--parallel", parallel, "Use several threads inside modules");
    run->add_option("--seed", seed, "Seed for randomized jobs");
    run->add_option("--out", out, "Write the result document here instead of stdout");
    run->add_flag("--timings", timings, "Include wall-clock timings (output is then not byte-stable)");

    auto* verify = app.add_subcommand("verify", "Run a property suite");
    verify->add_option("suite", suite, "cones, domain, genfun, eisenstein, sczech or all")->required();
    verify->add_option("--seed", seed, "Suite seed");
    verify->add_flag("--parallel", parallel, "Use several threads where supported");
    verify->add_flag("--timings", timings, "Include per-check timings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : sj::Schema;
    }

    if (*run)
        return emit(sj::run_file(file, {seed, parallel, timings}), out);
    return emit(sj::verify_suite(suite, seed, parallel, timings), {});
}
