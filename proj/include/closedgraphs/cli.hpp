#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "closedgraphs/json_io.hpp"

namespace closedgraphs::cli {

enum class Verdict { affirmative, negative, usage_error, internal_error };

/// Exit codes: 0 affirmative, 1 negative verdict, 2 usage or input error,
/// 3 internal assertion failure.
int exit_code(Verdict v);

struct CommandResult {
    Verdict verdict = Verdict::affirmative;
    Json payload;
    std::string text;
    int exit_code = 0;
};

struct Options {
    bool json = false;
    std::uint64_t seed = 0;
    std::size_t trials = 20;
    std::size_t cap = 9;
    std::string order = "lex";
    std::optional<std::string> labelling;  // comma list, first name gets label 1
    bool timing = false;
};

/// Brute-force cap: CLOSEDGRAPHS_CAP when set to a positive integer, else 9.
std::size_t cap_from_environment();

CommandResult cmd_check(const std::string& path, const Options& opts);
CommandResult cmd_label(const std::string& path, const Options& opts);
CommandResult cmd_complex(const std::string& path, const Options& opts);
CommandResult cmd_gb(const std::string& path, const Options& opts);
CommandResult cmd_verify(const std::string& path, const Options& opts);
CommandResult cmd_oracle(const std::string& path, const Options& opts);

/// Parses argv, runs one subcommand, prints its text or JSON and returns
/// the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace closedgraphs::cli
