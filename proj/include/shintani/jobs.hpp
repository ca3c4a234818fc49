// Declarative job files (JSON or TOML) and the result documents produced from them.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace shintani::jobs {

using Json = nlohmann::ordered_json;

// A malformed or inconsistent job file; maps to exit code 2.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum ExitCode : int { Ok = 0, Schema = 2, Computation = 3, VerificationFailed = 4 };

struct RunOptions {
    std::uint64_t seed = 1;
    bool parallel = false;
    bool timings = false;
};

struct Outcome {
    Json doc;
    int exit_code = Ok;
};

// Reads a job file; ".toml" selects TOML, anything else JSON. Throws SchemaError.
Json load_job_file(const std::string& path);
Json parse_job_text(const std::string& text, bool toml);

// Validates the whole document, then runs the jobs in order. A schema error yields a
// document with status "schema-error" and exit code 2; nothing is executed.
Outcome run_jobs(const Json& file, const RunOptions& opts);
Outcome run_file(const std::string& path, const RunOptions& opts);

// Runs a named property suite; exit code 4 if any check fails, 2 for an unknown suite.
Outcome verify_suite(const std::string& suite, std::uint64_t seed, bool parallel = false, bool timings = false);

// Pretty-printed document with a trailing newline.
std::string render(const Json& doc);

}  // namespace shintani::jobs
